#include <doctest.h>

#include "eltlab/puiseux.hpp"
#include "eltlab/random.hpp"
#include "support.hpp"

using namespace eltlab;
using test::S;

namespace {
PuiseuxSeries X(const char* text) { return PuiseuxSeries::parse(text); }
}  // namespace

TEST_CASE("series addition") {
    CHECK((X("t^(0)") + X("-1*t^(0)")).is_zero());
    CHECK(X("2*t^(1)") + X("3*t^(1)") == X("5*t^(1)"));
    CHECK((X("t^(1/2)") + X("t^(2)")).terms().size() == 2);
}

TEST_CASE("series multiplication") {
    CHECK(X("t^(1)") * X("t^(2)") == X("t^(3)"));
    CHECK(X("1 + t") * X("1 - t") == X("1 - t^(2)"));
    CHECK((X("3*t^(1/3) + 2") * PuiseuxSeries()).is_zero());
}

TEST_CASE("valuation") {
    CHECK(valuation(X("3*t^(2) + t^(5)")) == Rational(2));
    CHECK_FALSE(valuation(PuiseuxSeries()).has_value());
    CHECK(valuation(X("t^(-1/2)")) == Rational(-1, 2));
}

TEST_CASE("eltrop") {
    CHECK(eltrop(X("5*t^(3) + t^(7)")) == S("-3^[5]"));
    CHECK(eltrop(PuiseuxSeries()) == S("-inf"));
    CHECK(eltrop(X("2*t^(-1)")) == S("1^[2]"));
}

TEST_CASE("series text format round-trips") {
    auto x = X(" t^(2) +  -3/2*t^(-1/2)+4 ");
    CHECK(x.to_string() == "-3/2*t^(-1/2) + 4*t^(0) + 1*t^(2)");
    CHECK(X(x.to_string().c_str()) == x);
    CHECK(PuiseuxSeries().to_string() == "0");
    CHECK(X("0").is_zero());
    for (const char* bad : {"", "t^2", "2*", "t^(1", "2 t", "t^(1/0)", "1 ++ t"})
        CHECK_THROWS_AS(X(bad), ParseError);
}

TEST_CASE("valuation axioms and ELTrop properties on random series") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = random_series(rng), y = random_series(rng);
        CHECK(*valuation(x * y) == *valuation(x) + *valuation(y));
        if (!(x + y).is_zero()) CHECK(*valuation(x + y) >= std::min(*valuation(x), *valuation(y)));

        CHECK(surpasses(eltrop(x) + eltrop(y), eltrop(x + y)));
        CHECK(eltrop(x) * eltrop(y) == eltrop(x * y));
        Rational alpha;
        while (alpha.is_zero()) alpha = Rational(rng.uniform(-5, 5), rng.uniform(1, 3));
        CHECK(eltrop(alpha * x) == Scalar::of_layer(alpha) * eltrop(x));
    }
}

TEST_CASE("scaling law needs a nonzero scalar") {
    // 0 * x is the zero series, so its ELTrop is -inf, while 0^[0] * ELTrop(x)
    // is a finite layer-zero scalar.
    const auto x = X("2*t^(1)");
    CHECK(eltrop(Rational(0) * x) == S("-inf"));
    CHECK(Scalar::of_layer(Rational(0)) * eltrop(x) == S("-1^[0]"));
}
