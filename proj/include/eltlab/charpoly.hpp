#pragma once

#include <optional>
#include <set>
#include <vector>

#include "eltlab/matrix.hpp"
#include "eltlab/polynomial.hpp"

namespace eltlab {

/// det(L*I + (-)A) expanded over ELT polynomials, permutation by permutation.
template <LayerRing L>
BasicPolynomial<L> charpoly_symbolic(const BasicMatrix<L>& a) {
    detail::require_square(a, "charpoly");
    using Poly = BasicPolynomial<L>;
    const std::size_t n = a.rows();
    const auto minus = BasicScalar<L>::of_layer(L(-1));
    std::vector<Poly> entry(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly e = Poly::constant(minus * a(i, j));
            if (i == j) e = e + Poly::variable();
            entry[i * n + j] = std::move(e);
        }
    Poly result;
    for_each_permutation(n, [&](std::span<const std::size_t> p, int sign) {
        Poly term = Poly::constant(BasicScalar<L>::of_layer(L(sign)));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * entry[i * n + p[i]];
        result = result + term;
    });
    return result;
}

/// Coefficient of L^{n-k} as (0^[-1])^k times the sum of the k x k principal
/// minors over index subsets.
template <LayerRing L>
BasicPolynomial<L> charpoly_minors(const BasicMatrix<L>& a) {
    detail::require_square(a, "charpoly");
    const std::size_t n = a.rows();
    BasicPolynomial<L> result = BasicPolynomial<L>::monomial(static_cast<unsigned>(n), BasicScalar<L>::one());
    for (std::size_t k = 1; k <= n; ++k) {
        BasicScalar<L> sum;
        for_each_subset(n, k, [&](std::span<const std::size_t> s) {
            BasicMatrix<L> sub(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) sub(r, c) = a(s[r], s[c]);
            sum += det(sub);
        });
        auto sign = BasicScalar<L>::of_layer(L(k % 2 == 0 ? 1 : -1));
        result.add_term(static_cast<unsigned>(n - k), sign * sum);
    }
    return result;
}

template <LayerRing L>
BasicPolynomial<L> charpoly(const BasicMatrix<L>& a) {
    return charpoly_symbolic(a);
}

/// p_A(A) with coefficients acting by scalar multiplication.
template <LayerRing L>
BasicMatrix<L> evaluate_at_matrix(const BasicPolynomial<L>& p, const BasicMatrix<L>& a) {
    detail::require_square(a, "evaluate_at_matrix");
    const std::size_t n = a.rows();
    BasicMatrix<L> acc(n, n);
    BasicMatrix<L> pw = BasicMatrix<L>::identity(n);
    unsigned current = 0;
    for (const auto& [d, c] : p.terms()) {
        for (; current < d; ++current) pw = pw * a;
        acc = acc + c * pw;
    }
    return acc;
}

/// Every entry of p_A(A) is layer-zero or -inf.
template <LayerRing L>
bool cayley_hamilton_check(const BasicMatrix<L>& a) {
    return evaluate_at_matrix(charpoly(a), a).is_layer_zero();
}

template <LayerRing L>
RootDescription<L> eigen_candidates(const BasicMatrix<L>& a) {
    return elt_roots(charpoly(a));
}

// ---------------------------------------------------------------------------
// Essential trace

template <LayerRing L>
struct EtrReport {
    BasicScalar<L> trace;
    std::vector<BasicScalar<L>> char_coefficients;  // alpha_1..alpha_n, p_A = L^n + sum alpha_k L^{n-k}
    std::set<unsigned> L_set;                       // empty when every alpha_k is -inf
    std::optional<unsigned> mu;
    BasicScalar<L> dominant_coefficient;  // alpha_mu
    MonomialStatus trace_monomial_status = MonomialStatus::Inessential;
    BasicScalar<L> etr;
};

/// L(A) = { l : t(alpha_l)/l >= t(alpha_k)/k for all k }, mu = min L(A).
/// etr is tr(A) when the L^{n-1} monomial is Essential in p_A, otherwise
/// (t(alpha_mu)/mu)^[0]; -inf when no alpha_k is finite.
template <LayerRing L>
EtrReport<L> essential_trace(const BasicMatrix<L>& a) {
    detail::require_square(a, "essential_trace");
    const auto n = static_cast<unsigned>(a.rows());
    auto p = charpoly(a);
    EtrReport<L> rep;
    rep.trace = trace(a);
    std::optional<Rational> best;
    for (unsigned k = 1; k <= n; ++k) {
        auto c = p.coefficient(n - k);
        rep.char_coefficients.push_back(c);
        if (c.is_neg_inf()) continue;
        Rational avg = c.tangible_value() / Rational(static_cast<std::int64_t>(k));
        if (!best || avg > *best) {
            best = avg;
            rep.L_set = {k};
        } else if (avg == *best) {
            rep.L_set.insert(k);
        }
    }
    if (!best) return rep;  // etr = -inf

    rep.mu = *rep.L_set.begin();
    rep.dominant_coefficient = rep.char_coefficients[*rep.mu - 1];
    if (!p.coefficient(n - 1).is_neg_inf()) rep.trace_monomial_status = envelope(p).status.at(n - 1);
    rep.etr = rep.trace_monomial_status == MonomialStatus::Essential
                  ? rep.trace
                  : BasicScalar<L>::zero_layer(*best);
    return rep;
}

}  // namespace eltlab
