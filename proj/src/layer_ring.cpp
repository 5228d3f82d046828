#include "eltlab/layer_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace eltlab {

namespace {

std::vector<std::int64_t> positive_divisors(std::int64_t v) {
    if (v < 0) v = -v;
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        out.push_back(d);
        if (d != v / d) out.push_back(v / d);
    }
    return out;
}

Rational horner(std::span<const Rational> c, const Rational& x) {
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

LayerSolutions<Rational> rational_roots(std::span<const Rational> coeffs) {
    LayerSolutions<Rational> out;
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo].is_zero()) ++lo;
    if (lo == coeffs.size()) {
        out.every_layer = true;
        return out;
    }
    std::size_t hi = coeffs.size() - 1;
    while (coeffs[hi].is_zero()) --hi;

    std::set<Rational> roots;
    if (lo > 0) roots.insert(Rational(0));

    // Clear denominators on the part with nonzero constant term.
    std::vector<Rational> reduced(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                                  coeffs.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    if (reduced.size() > 1) {
        std::int64_t lcm = 1;
        for (const auto& c : reduced) lcm = (Rational(lcm) * Rational(c.den(), gcd64(lcm, c.den()))).num();
        std::int64_t a0 = (reduced.front() * Rational(lcm)).num();
        std::int64_t an = (reduced.back() * Rational(lcm)).num();
        for (auto p : positive_divisors(a0)) {
            for (auto q : positive_divisors(an)) {
                for (std::int64_t s : {1, -1}) {
                    Rational cand(s * p, q);
                    if (horner(reduced, cand).is_zero()) roots.insert(cand);
                }
            }
        }
    }
    out.values.assign(roots.begin(), roots.end());
    return out;
}

}  // namespace eltlab
