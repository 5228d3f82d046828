#include <doctest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "eltlab/error.hpp"

#include "eltlab/layer_ring.hpp"
#include "eltlab/rational.hpp"

using eltlab::Integer;
using eltlab::ParseError;
using eltlab::Rational;

TEST_CASE("rationals normalize") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, -5).den() == 1);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
    CHECK(Rational(-1, 3) < Rational(-1, 4));
    CHECK_THROWS_AS(Rational(1, 0), eltlab::Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), eltlab::Error);
}

TEST_CASE("rational text format") {
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-12") == Rational(-12));
    for (const char* bad : {"2/4", "1/0", "1/-2", "", "-", "1/", "01", "-0", "1.5", "1/2x", " 1"})
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
}

TEST_CASE("rational overflow is reported, never wrapped") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    // Intermediate products may exceed 64 bits as long as the result fits.
    CHECK(Rational(std::int64_t{1} << 40, 3) * Rational(3, std::int64_t{1} << 40) == Rational(1));
}

TEST_CASE("integer layers are checked") {
    CHECK(Integer(3) * Integer(-4) == Integer(-12));
    CHECK_THROWS_AS(Integer(std::numeric_limits<std::int64_t>::max()) + Integer(1), std::overflow_error);
    CHECK(eltlab::unit_inverse(Integer(-1)) == Integer(-1));
    CHECK_FALSE(eltlab::unit_inverse(Integer(2)).has_value());
    CHECK(eltlab::unit_inverse(Rational(2, 3)) == Rational(3, 2));
}

namespace {

Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

TEST_CASE("rational roots of layer equations") {
    // 6l^3 - l^2 - 2l = l(2l + 1)(3l - 2)
    auto r = eltlab::rational_roots(std::vector<Rational>{0, -2, -1, 6});
    CHECK_FALSE(r.every_layer);
    CHECK(r.values == std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(2, 3)});

    // zero polynomial: every layer solves it
    CHECK(eltlab::rational_roots(std::vector<Rational>{0, 0}).every_layer);
    // 1 + l^2 has no rational root
    CHECK(eltlab::rational_roots(std::vector<Rational>{1, 0, 1}).values.empty());

    // Z keeps only integral roots
    auto z = eltlab::layer_roots<Integer>(std::vector<Integer>{0, -2, -1, 6});
    CHECK(z.values == std::vector<Integer>{Integer(0)});
}

TEST_CASE("rational roots against a grid oracle") {
    // Every root reported is a root, and every grid root p/q with |p| <= 12,
    // q <= 6 is reported.
    const std::vector<std::vector<Rational>> polys = {
        {Rational(-1, 2), Rational(1)},
        {Rational(6), Rational(-5), Rational(1)},
        {Rational(-4), Rational(0), Rational(9)},
        {Rational(0), Rational(0), Rational(1, 3), Rational(-1, 6)},
        {Rational(2), Rational(3), Rational(5), Rational(7)},
    };
    for (const auto& c : polys) {
        auto r = eltlab::rational_roots(c);
        for (const auto& x : r.values) CHECK(horner(c, x).is_zero());
        for (std::int64_t q = 1; q <= 6; ++q)
            for (std::int64_t p = -12; p <= 12; ++p) {
                Rational x(p, q);
                if (horner(c, x).is_zero())
                    CHECK(std::find(r.values.begin(), r.values.end(), x) != r.values.end());
            }
    }
}
