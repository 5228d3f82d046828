#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "eltlab/matrix.hpp"
#include "eltlab/puiseux.hpp"
#include "eltlab/scalar.hpp"

namespace eltlab {

/// Seeded generator whose draws are identical on every platform: the engine
/// is fully specified by the standard and the range mapping is done here
/// rather than by the library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    /// True with probability permille / 1000.
    bool chance(unsigned permille) { return engine_() % 1000 < permille; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, i - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

struct ScalarDistribution {
    std::int64_t tangible_lo = -10, tangible_hi = 10;
    std::int64_t layer_lo = -2, layer_hi = 2;
    unsigned neg_inf_permille = 100;
};

template <LayerRing L>
BasicScalar<L> random_scalar(Rng& rng, const ScalarDistribution& d = {}) {
    if (rng.chance(d.neg_inf_permille)) return BasicScalar<L>::neg_inf();
    Rational t(rng.uniform(d.tangible_lo, d.tangible_hi));
    return {t, L(rng.uniform(d.layer_lo, d.layer_hi))};
}

/// Finite scalar whose layer is a unit of L.
template <LayerRing L>
BasicScalar<L> random_unit_scalar(Rng& rng, const ScalarDistribution& d = {}) {
    Rational t(rng.uniform(d.tangible_lo, d.tangible_hi));
    while (true) {
        L l(rng.uniform(d.layer_lo, d.layer_hi));
        if (unit_inverse(l)) return {t, l};
    }
}

template <LayerRing L>
BasicMatrix<L> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const ScalarDistribution& d = {}) {
    BasicMatrix<L> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<L>(rng, d);
    return m;
}

template <LayerRing L>
BasicMatrix<L> random_matrix(Rng& rng, std::size_t n, const ScalarDistribution& d = {}) {
    return random_matrix<L>(rng, n, n, d);
}

/// Permutation pattern of unit-layer finite entries, -inf elsewhere.
template <LayerRing L>
BasicMatrix<L> random_monomial_matrix(Rng& rng, std::size_t n, const ScalarDistribution& d = {}) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    BasicMatrix<L> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = random_unit_scalar<L>(rng, d);
    return m;
}

/// Nonzero series of 1 to 4 terms, exponents p/q with |p| <= 6 and q <= 3,
/// integer coefficients in [-5, 5].
inline PuiseuxSeries random_series(Rng& rng) {
    while (true) {
        std::vector<PuiseuxSeries::Term> terms;
        const auto count = rng.uniform(1, 4);
        for (std::int64_t k = 0; k < count; ++k) {
            std::int64_t c = 0;
            while (c == 0) c = rng.uniform(-5, 5);
            terms.push_back({Rational(rng.uniform(-6, 6), rng.uniform(1, 3)), Rational(c)});
        }
        PuiseuxSeries x(std::move(terms));
        if (!x.is_zero()) return x;
    }
}

}  // namespace eltlab
