#include <doctest.h>

#include "eltlab/polynomial.hpp"
#include "eltlab/random.hpp"
#include "support.hpp"

using namespace eltlab;
using test::P;
using test::S;

namespace {

const Polynomial kP = P("L^2 + 3^[-1]*L + 4^[0]");

// Points that exercise every piece of the envelope: each corner, the
// midpoints between corners and one unit beyond the outermost ones.
std::vector<Rational> probe_points(const EnvelopeReport& env) {
    std::vector<Rational> xs;
    if (env.corners.empty()) return {Rational(-3), Rational(0), Rational(3)};
    xs.push_back(env.corners.front().at - Rational(1));
    for (std::size_t i = 0; i < env.corners.size(); ++i) {
        xs.push_back(env.corners[i].at);
        if (i + 1 < env.corners.size()) xs.push_back((env.corners[i].at + env.corners[i + 1].at) / Rational(2));
    }
    xs.push_back(env.corners.back().at + Rational(1));
    return xs;
}

Polynomial random_polynomial(Rng& rng, unsigned max_degree) {
    Polynomial p;
    for (unsigned d = 0; d <= max_degree; ++d) p.add_term(d, random_scalar<Rational>(rng));
    return p;
}

}  // namespace

TEST_CASE("evaluation") {
    CHECK(evaluate(kP, S("3^[1]")) == S("6^[0]"));
    CHECK(evaluate(kP, S("1^[0]")) == S("4^[0]"));
    CHECK(evaluate(kP, S("-inf")) == S("4^[0]"));
    CHECK(evaluate(P("L^3"), S("-inf")) == S("-inf"));
    CHECK(is_root(kP, S("1^[0]")));
}

TEST_CASE("polynomial text format") {
    CHECK(kP.to_string() == "0^[1]*L^2 + 3^[-1]*L^1 + 4^[0]");
    CHECK(P(kP.to_string().c_str()) == kP);
    CHECK(Polynomial().to_string() == "-inf");
    CHECK(P("2^[1]*L^1 + 1^[1]*L^1") == P("2^[1]*L"));
    for (const char* bad : {"", "L^", "2^[1]L", "L^x", "1^[1] +", "3*L"}) CHECK_THROWS_AS(P(bad), ParseError);
}

TEST_CASE("envelope classification") {
    auto e1 = envelope(kP);
    for (unsigned d = 0; d <= 2; ++d) CHECK(e1.status.at(d) == MonomialStatus::Essential);
    REQUIRE(e1.corners.size() == 2);
    CHECK(e1.corners[0].at == Rational(1));
    CHECK(e1.corners[1].at == Rational(3));

    CHECK(envelope(P("L^2 + 0^[-4]*L + 0^[3]")).status.at(1) == MonomialStatus::QuasiEssential);
    CHECK(envelope(P("L^2 + 0^[1]*L + 5^[1]")).status.at(1) == MonomialStatus::Inessential);
    CHECK_THROWS_AS(envelope(Polynomial()), Error);
}

TEST_CASE("pointwise classification") {
    CHECK(classify_at(kP, 1, S("2^[1]")) == MonomialStatus::Essential);
    CHECK(classify_at(kP, 1, S("5^[1]")) == MonomialStatus::Inessential);
    CHECK(classify_at(P("L^2 + 0^[-4]*L + 0^[3]"), 1, S("0^[1]")) == MonomialStatus::QuasiEssential);
}

TEST_CASE("roots of the characteristic polynomial example") {
    auto r = elt_roots(kP);
    REQUIRE(r.corners.size() == 2);
    CHECK(r.corners[0].tangible == Rational(1));
    CHECK(r.corners[0].layers.values == std::vector<Rational>{Rational(0)});
    CHECK(r.corners[1].tangible == Rational(3));
    CHECK(r.corners[1].layers.values == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(r.covers(S("3^[1]")));
    CHECK(r.covers(S("1^[0]")));
    CHECK(r.covers(S("-5^[7]")));
    CHECK(r.covers(S("1/2^[-2]")));
    CHECK_FALSE(r.covers(S("2^[1]")));
    CHECK(r.covers(S("2^[0]")));
    bool any_below_one = false;
    for (const auto& iv : r.intervals)
        if (!iv.range.lo && iv.range.hi == Rational(1)) any_below_one = iv.kind == IntervalRootKind::AnyLayer;
    CHECK(any_below_one);
}

TEST_CASE("roots of linear and two-term polynomials") {
    auto lin = elt_roots(P("L + 2^[3]"));
    REQUIRE(lin.corners.size() == 1);
    CHECK(lin.corners[0].tangible == Rational(2));
    CHECK(lin.corners[0].layers.values == std::vector<Rational>{Rational(-3)});
    CHECK(is_root(P("L + 2^[3]"), S("2^[-3]")));

    auto two = elt_roots(P("L^2 + 0^[1]*L"));
    REQUIRE(two.corners.size() == 1);
    CHECK(two.corners[0].tangible == Rational(0));
    CHECK(two.neg_inf_is_root);
}

TEST_CASE("Z layers keep integral corner solutions only") {
    // corner at 0 with layer equation 2l^2 - l = 0
    auto r = elt_roots(IntPolynomial::parse("0^[2]*L^2 + 0^[-1]*L"));
    REQUIRE(r.corners.size() == 1);
    CHECK(r.corners[0].layers.values == std::vector<Integer>{Integer(0)});
}

TEST_CASE("root description matches a sampling oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = random_polynomial(rng, 1 + trial % 4);
        if (p.terms().size() < 1) continue;
        const auto r = elt_roots(p);
        const auto env = envelope(p);
        for (const auto& x : probe_points(env))
            for (std::int64_t l = -3; l <= 3; ++l) {
                const Scalar a(x, Rational(l));
                CHECK_MESSAGE(r.covers(a) == is_root(p, a), p.to_string(), " at ", a.to_string());
            }
        for (const auto& c : r.corners)
            for (const auto& l : c.layers.values) CHECK(is_root(p, Scalar(c.tangible, l)));
        CHECK(r.neg_inf_is_root == is_root(p, Scalar::neg_inf()));
    }
}

TEST_CASE("envelope status agrees with pointwise classification") {
    Rng rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = random_polynomial(rng, 1 + trial % 4);
        if (p.terms().empty()) continue;
        const auto env = envelope(p);
        const auto xs = probe_points(env);
        for (const auto& [d, status] : env.status) {
            bool some_essential = false, all_inessential = true, some_quasi = false;
            for (const auto& x : xs) {
                const auto at = classify_at(p, d, Scalar(x, Rational(1)));
                some_essential |= at == MonomialStatus::Essential;
                some_quasi |= at == MonomialStatus::QuasiEssential;
                all_inessential &= at == MonomialStatus::Inessential;
            }
            if (status == MonomialStatus::Essential) CHECK(some_essential);
            if (status == MonomialStatus::Inessential) CHECK(all_inessential);
            if (status == MonomialStatus::QuasiEssential) CHECK((some_quasi && !some_essential));
        }
    }
}

TEST_CASE("first non-inessential monomial below the leading one sits at mu") {
    Rng rng(31);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(trial % 4);
        Polynomial p = Polynomial::monomial(n, Scalar::one());
        std::optional<Rational> best;
        unsigned mu = 0;
        for (unsigned k = 1; k <= n; ++k) {
            const Scalar c = random_scalar<Rational>(rng);
            p.add_term(n - k, c);
            if (c.is_neg_inf()) continue;
            const Rational avg = c.tangible_value() / Rational(k);
            if (!best || avg > *best) {
                best = avg;
                mu = k;
            }
        }
        if (!best) continue;
        const auto env = envelope(p);
        unsigned first = 0;
        for (unsigned k = 1; k <= n && !first; ++k) {
            auto it = env.status.find(n - k);
            if (it != env.status.end() && it->second != MonomialStatus::Inessential) first = k;
        }
        CHECK(first == mu);
        ++checked;
    }
    CHECK(checked > 400);
}
