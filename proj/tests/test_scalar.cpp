#include <doctest.h>

#include "eltlab/random.hpp"
#include "eltlab/scalar.hpp"
#include "support.hpp"

using namespace eltlab;
using test::S;

TEST_CASE("addition") {
    CHECK(S("1^[1]") + S("1^[1]") == S("1^[2]"));
    CHECK(S("2^[3]") + S("5^[-1]") == S("5^[-1]"));
    CHECK(S("-inf") + S("7^[2]") == S("7^[2]"));
    CHECK(S("3^[1]") + S("3^[-1]") == S("3^[0]"));
}

TEST_CASE("multiplication") {
    CHECK(S("1^[1]") * S("3^[1]") == S("4^[1]"));
    CHECK(S("0^[0]") * S("7/3^[5]") == S("7/3^[0]"));
    CHECK(S("-inf") * S("5^[2]") == S("-inf"));
    CHECK(power(S("1/2^[2]"), 3) == S("3/2^[8]"));
}

TEST_CASE("negation and circ") {
    CHECK(negate(S("3^[1]")) == S("3^[-1]"));
    CHECK(negate(S("3^[0]")) == S("3^[0]"));
    CHECK(negate(S("2^[2]") * S("1^[3]")) == S("3^[-6]"));
    CHECK(S("2^[2]") * negate(S("1^[3]")) == S("3^[-6]"));
    CHECK(circ(S("4^[7]")) == S("4^[0]"));
    CHECK(circ(S("-inf")) == S("-inf"));
}

TEST_CASE("projections") {
    CHECK(S("8^[1]").sort() == Rational(1));
    CHECK(S("-inf").sort() == Rational(0));
    CHECK(S("5^[-1]").tangible() == MaxPlus(5));
    CHECK(S("-inf").tangible().is_bottom());
    CHECK(S("-inf").tangible() < MaxPlus(-1000));
}

TEST_CASE("surpassing") {
    CHECK(surpasses(S("8^[1]"), S("8^[1]")));
    CHECK(surpasses(S("10^[0]"), S("5^[7]")));
    CHECK_FALSE(surpasses(S("8^[1]"), S("7^[1]")));
    CHECK(surpasses(S("3^[0]"), S("-inf")));
    CHECK_FALSE(surpasses(S("-inf"), S("3^[0]")));
    CHECK_FALSE(surpasses(S("3^[0]"), S("3^[1]")));
}

TEST_CASE("surpassing agrees with a search for the witness z") {
    // x |= y iff x = y + z for a layer-zero z; search z over a grid that
    // contains every tangible that can matter plus -inf.
    const std::vector<const char*> pool = {"-inf", "0^[0]", "0^[1]", "0^[-2]", "1^[0]", "1^[1]", "2^[0]",
                                           "2^[3]", "-1^[0]", "-1^[1/2]", "1/2^[0]", "1/2^[1]"};
    for (const char* xs : pool)
        for (const char* ys : pool) {
            const Scalar x = S(xs), y = S(ys);
            bool found = x == y;  // z = -inf
            for (std::int64_t num = -4; num <= 6 && !found; ++num)
                for (std::int64_t den = 1; den <= 2 && !found; ++den)
                    found = y + Scalar::zero_layer(Rational(num, den)) == x;
            CHECK_MESSAGE(surpasses(x, y) == found, xs, " |= ", ys);
        }
}

TEST_CASE("nabla") {
    CHECK(nabla(S("3^[2]"), S("3^[2]")));
    CHECK(nabla(S("3^[2]"), S("5^[0]")));
    CHECK_FALSE(nabla(S("3^[2]"), S("5^[1]")));
}

TEST_CASE("inversion") {
    CHECK(invert(S("4^[1]")) == S("-4^[1]"));
    CHECK(invert(S("0^[2]")) == S("0^[1/2]"));
    CHECK(S("3/2^[-3]") * invert(S("3/2^[-3]")) == Scalar::one());
    CHECK_THROWS_AS(invert(S("4^[0]")), Error);
    CHECK_THROWS_AS(invert(S("-inf")), Error);
    CHECK(invert(test::SZ("4^[-1]")) == test::SZ("-4^[-1]"));
    CHECK_THROWS_AS(invert(test::SZ("4^[2]")), Error);
}

TEST_CASE("scalar text format") {
    CHECK(S("3/2^[-1]").to_string() == "3/2^[-1]");
    CHECK(S("  -inf ").to_string() == "-inf");
    CHECK(S("-3^[0]") == Scalar(Rational(-3), Rational(0)));
    for (const char* bad : {"2/4^[1]", "1^[1/0]", "1^[1", "1", "inf", "^[1]", "1^[]", "1^[2/-3]"})
        CHECK_THROWS_AS(S(bad), ParseError);
    try {
        (void)S("1^[2/4]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() >= 3);
    }
}

TEST_CASE_TEMPLATE("algebraic laws on random scalars", L, Rational, Integer) {
    using X = BasicScalar<L>;
    Rng rng(1234);
    for (int trial = 0; trial < 2000; ++trial) {
        const X a = random_scalar<L>(rng), b = random_scalar<L>(rng), c = random_scalar<L>(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + X::neg_inf() == a);
        CHECK(a * X::one() == a);
        // negation map axioms
        CHECK(negate(negate(a)) == a);
        CHECK(negate(a + b) == negate(a) + negate(b));
        CHECK(negate(a * b) == a * negate(b));
        CHECK(circ(a).is_layer_zero());
        // t is a homomorphism onto max-plus
        CHECK((a + b).tangible() == (a.tangible() + b.tangible()));
        CHECK((a * b).tangible() == (a.tangible() * b.tangible()));
        // layer-zero scalars form an ideal
        if (a.is_layer_zero()) CHECK((a * b).is_layer_zero());
        // surpassing is a partial order
        CHECK(surpasses(a, a));
        if (surpasses(a, b) && surpasses(b, a)) CHECK(a == b);
        if (surpasses(a, b) && surpasses(b, c)) CHECK(surpasses(a, c));
        if (surpasses(a, b) && !a.is_layer_zero()) CHECK(a == b);
        if ((a + negate(b)).is_layer_zero() && a.tangible() >= b.tangible()) CHECK(surpasses(a, b));
    }
}
