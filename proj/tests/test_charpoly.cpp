#include <doctest.h>

#include "eltlab/charpoly.hpp"
#include "eltlab/io.hpp"
#include "eltlab/random.hpp"
#include "eltlab/tropical.hpp"
#include "support.hpp"

using namespace eltlab;
using test::M;
using test::P;
using test::S;

namespace {

const Matrix kC = M({{"1^[1]", "2^[1]"}, {"2^[1]", "3^[1]"}});
const Matrix kUpper = M({{"0^[1]", "0^[1]"}, {"-inf", "0^[1]"}});
const Matrix kNil = M({{"0^[1]", "1^[0]"}, {"0^[0]", "0^[1]"}});

// Arbitrary strictly upper part, layer-zero entries on and below the
// diagonal. A path of length n must take a step on or below the diagonal, so
// every term of A^n has layer zero.
Matrix random_nilpotent(Rng& rng, std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j > i)
                a(i, j) = random_scalar<Rational>(rng);
            else if (rng.chance(500))
                a(i, j) = Scalar::zero_layer(Rational(rng.uniform(-10, 10)));
        }
    return a;
}

}  // namespace

TEST_CASE("characteristic polynomial examples") {
    CHECK(charpoly(kC) == P("L^2 + 3^[-1]*L + 4^[0]"));
    CHECK(charpoly_minors(kC) == charpoly(kC));
    CHECK(charpoly(M({{"0^[2]", "0^[1]"}, {"0^[1]", "0^[2]"}})) == P("L^2 + 0^[-4]*L + 0^[3]"));
    CHECK(charpoly(kUpper) == P("L^2 + 0^[-2]*L + 0^[1]"));
    const Matrix d = Matrix::diagonal({S("1^[2]"), S("-3^[1/2]")});
    const Polynomial expected = (Polynomial::variable() + Polynomial::constant(S("1^[-2]"))) *
                                (Polynomial::variable() + Polynomial::constant(S("-3^[-1/2]")));
    CHECK(charpoly(d) == expected);
    CHECK_THROWS_AS(charpoly(Matrix(2, 3)), Error);
}

TEST_CASE("Cayley-Hamilton examples") {
    CHECK(cayley_hamilton_check(kC));
    CHECK(cayley_hamilton_check(Matrix::diagonal({S("1^[2]"), S("5^[-1]"), S("-inf")})));
    const Matrix pa = evaluate_at_matrix(charpoly(kC), kC);
    CHECK(pa.is_layer_zero());
}

TEST_CASE("eigen candidates of the example matrix") {
    auto r = eigen_candidates(kC);
    CHECK(r.covers(S("3^[1]")));
    CHECK(r.covers(S("1^[0]")));
    CHECK(r.covers(S("0^[5]")));
    CHECK_FALSE(r.covers(S("3^[2]")));
}

TEST_CASE("essential trace examples") {
    auto nil = essential_trace(kNil);
    CHECK(nil.trace == S("0^[2]"));
    CHECK(nil.etr.is_layer_zero());
    CHECK(nil.mu == 2u);

    auto apb = essential_trace(M({{"0^[2]", "0^[1]"}, {"0^[1]", "0^[2]"}}));
    CHECK(apb.trace_monomial_status == MonomialStatus::QuasiEssential);
    CHECK(apb.etr == S("0^[0]"));

    // p_A = L^2 + 0^[-2] L + 0^[1] has the same three tangible lines as
    // p_{A+B}, so the L monomial is again only quasi-essential and the
    // definition gives (0/1)^[0], not tr(A) = 0^[2].
    auto up = essential_trace(kUpper);
    CHECK(up.trace == S("0^[2]"));
    CHECK(up.trace_monomial_status == MonomialStatus::QuasiEssential);
    CHECK(up.L_set == std::set<unsigned>{1, 2});
    CHECK(up.etr == S("0^[0]"));
    CHECK(essential_trace(kUpper.transpose()).etr == S("0^[0]"));

    auto c = essential_trace(kC);
    CHECK(c.trace_monomial_status == MonomialStatus::Essential);
    CHECK(c.etr == c.trace);

    auto empty = essential_trace(M({{"-inf", "-inf"}, {"-inf", "-inf"}}));
    CHECK(empty.etr.is_neg_inf());
    CHECK_FALSE(empty.mu.has_value());
}

TEST_CASE("charpoly routes agree and Cayley-Hamilton holds on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Matrix a = random_matrix<Rational>(rng, n);
        CHECK(charpoly_symbolic(a) == charpoly_minors(a));
        CHECK(cayley_hamilton_check(a));
        const IntMatrix z = random_matrix<Integer>(rng, std::min<std::size_t>(n, 4));
        CHECK(charpoly_symbolic(z) == charpoly_minors(z));
        CHECK(cayley_hamilton_check(z));
    }
}

TEST_CASE("mu oracle: dominant average equals the maximum cycle mean") {
    Rng rng(5);
    int with_cycle = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const Matrix a = random_matrix<Rational>(rng, n);
        const auto r = essential_trace(a);
        const auto brute = max_cycle_mean_bruteforce(a);
        const auto karp = karp_max_mean_cycle(project(a));
        CHECK(brute == karp);
        if (!brute) {
            CHECK_FALSE(r.mu.has_value());
            continue;
        }
        ++with_cycle;
        REQUIRE(r.mu.has_value());
        CHECK(r.dominant_coefficient.tangible_value() / Rational(*r.mu) == *brute);
    }
    CHECK(with_cycle > 250);
}

TEST_CASE("essential trace properties on random matrices") {
    Rng rng(77);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const Matrix a = random_matrix<Rational>(rng, n), b = random_matrix<Rational>(rng, n);
        const auto ea = essential_trace(a);
        if (ea.trace.is_layer_zero()) CHECK(ea.etr.is_layer_zero());
        if (ea.trace_monomial_status == MonomialStatus::Essential)
            CHECK(ea.etr == ea.trace);
        else if (ea.mu)
            CHECK(ea.etr == Scalar::zero_layer(ea.dominant_coefficient.tangible_value() / Rational(*ea.mu)));
        const auto sum = essential_trace(a + b);
        if (!sum.etr.is_layer_zero())
            CHECK_MESSAGE(sum.etr == ea.etr + essential_trace(b).etr, format_matrix(a), format_matrix(b));
        // a simple cycle of length >= 2 beating tr(A)^k forces mu >= 2
        for (const auto& c : simple_cycles(a))
            if (c.length() >= 2 && MaxPlus(c.weight.tangible_value()) >
                                       power(ea.trace, static_cast<unsigned>(c.length())).tangible()) {
                REQUIRE(ea.mu.has_value());
                CHECK(*ea.mu >= 2u);
            }
    }
}

TEST_CASE("nilpotent matrices have layer-zero essential trace") {
    Rng rng(3);
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix a = random_nilpotent(rng, 2 + trial % 3);
        if (!is_nilpotent(a).nilpotent) continue;
        ++found;
        CHECK(essential_trace(a).etr.is_layer_zero());
    }
    CHECK(found > 100);
}
