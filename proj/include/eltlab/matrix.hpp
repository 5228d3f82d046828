#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eltlab/error.hpp"
#include "eltlab/permutation.hpp"
#include "eltlab/scalar.hpp"

namespace eltlab {

/// Dense row-major matrix of ELT scalars; entries may be -inf.
template <LayerRing L>
class BasicMatrix {
public:
    using scalar_type = BasicScalar<L>;

    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    BasicMatrix(std::initializer_list<std::initializer_list<scalar_type>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    /// 0^[1] on the diagonal, -inf elsewhere.
    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_type::one();
        return m;
    }

    static BasicMatrix diagonal(const std::vector<scalar_type>& d) {
        BasicMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    scalar_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const scalar_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<scalar_type>& entries() const noexcept { return data_; }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Every entry is layer-zero or -inf.
    bool is_layer_zero() const {
        for (const auto& x : data_)
            if (!x.is_layer_zero()) return false;
        return true;
    }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

    friend BasicMatrix operator+(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(Errc::DimensionMismatch, "matrix sum of " + a.shape() + " and " + b.shape());
        BasicMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(Errc::DimensionMismatch, "matrix product of " + a.shape() + " and " + b.shape());
        BasicMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (aik.is_neg_inf()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend BasicMatrix operator*(const scalar_type& alpha, const BasicMatrix& a) {
        BasicMatrix c = a;
        for (auto& x : c.data_) x = alpha * x;
        return c;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<scalar_type> data_;
};

using Matrix = BasicMatrix<Rational>;
using IntMatrix = BasicMatrix<Integer>;

template <LayerRing L>
using Vector = std::vector<BasicScalar<L>>;

namespace detail {
template <LayerRing L>
void require_square(const BasicMatrix<L>& a, const char* op) {
    if (!a.is_square()) throw Error(Errc::NotSquare, std::string(op) + " needs a square matrix, got " + a.shape());
}
}  // namespace detail

template <LayerRing L>
BasicMatrix<L> scalar_mul(const BasicScalar<L>& alpha, const BasicMatrix<L>& a) {
    return alpha * a;
}

/// Entrywise negation map.
template <LayerRing L>
BasicMatrix<L> negate(const BasicMatrix<L>& a) {
    return BasicScalar<L>::of_layer(L(-1)) * a;
}

template <LayerRing L>
BasicMatrix<L> matrix_power(const BasicMatrix<L>& a, unsigned k) {
    detail::require_square(a, "matrix_power");
    BasicMatrix<L> r = BasicMatrix<L>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

template <LayerRing L>
Vector<L> apply(const BasicMatrix<L>& a, const Vector<L>& v) {
    if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    Vector<L> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

/// Unsigned halves of the determinant: sums over even and odd permutations.
template <LayerRing L>
struct DeterminantPair {
    BasicScalar<L> positive;
    BasicScalar<L> negative;
};

template <LayerRing L>
DeterminantPair<L> det_pair(const BasicMatrix<L>& a) {
    detail::require_square(a, "det_pair");
    DeterminantPair<L> out;
    for_each_permutation(a.rows(), [&](std::span<const std::size_t> p, int sign) {
        auto term = BasicScalar<L>::one();
        for (std::size_t i = 0; i < p.size() && term.is_finite(); ++i) term *= a(i, p[i]);
        (sign > 0 ? out.positive : out.negative) += term;
    });
    return out;
}

/// ELT determinant: sum over S_n of 0^[sgn] * a_{1,s(1)} ... a_{n,s(n)}.
/// The 0x0 determinant is 0^[1].
template <LayerRing L>
BasicScalar<L> det(const BasicMatrix<L>& a) {
    auto [pos, neg] = det_pair(a);
    return pos + negate(neg);
}

/// Submatrix with row i and column j removed.
template <LayerRing L>
BasicMatrix<L> submatrix(const BasicMatrix<L>& a, std::size_t i, std::size_t j) {
    BasicMatrix<L> m(a.rows() - 1, a.cols() - 1);
    for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
            if (c == j) continue;
            m(rr, cc++) = a(r, c);
        }
        ++rr;
    }
    return m;
}

/// Determinant of the (i,j)-deleted submatrix.
template <LayerRing L>
BasicScalar<L> minor(const BasicMatrix<L>& a, std::size_t i, std::size_t j) {
    detail::require_square(a, "minor");
    if (i >= a.rows() || j >= a.cols()) throw Error(Errc::InvalidArgument, "minor index out of range");
    return det(submatrix(a, i, j));
}

/// adj(A)_{ij} = 0^[(-1)^{i+j}] * minor(A, j, i). For n = 1 this is [[0^[1]]].
template <LayerRing L>
BasicMatrix<L> adjoint(const BasicMatrix<L>& a) {
    detail::require_square(a, "adjoint");
    const std::size_t n = a.rows();
    BasicMatrix<L> out(n, n);
    if (n == 1) {
        out(0, 0) = BasicScalar<L>::one();
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = BasicScalar<L>::of_layer(L((i + j) % 2 == 0 ? 1 : -1)) * minor(a, j, i);
    return out;
}

template <LayerRing L>
BasicScalar<L> trace(const BasicMatrix<L>& a) {
    detail::require_square(a, "trace");
    BasicScalar<L> s;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

// ---------------------------------------------------------------------------
// Quasi-identities and quasi-inverses

enum class QuasiIdentityCheck { Diagonal, OffDiagonal, Idempotent, Nonsingular };

inline const char* to_string(QuasiIdentityCheck c) {
    switch (c) {
        case QuasiIdentityCheck::Diagonal: return "diagonal";
        case QuasiIdentityCheck::OffDiagonal: return "off-diagonal";
        case QuasiIdentityCheck::Idempotent: return "idempotent";
        case QuasiIdentityCheck::Nonsingular: return "nonsingular";
    }
    return "?";
}

struct QuasiIdentityFailure {
    QuasiIdentityCheck check;
    std::optional<std::pair<std::size_t, std::size_t>> position;
};

struct QuasiIdentityReport {
    bool is_quasi_identity = true;
    std::vector<QuasiIdentityFailure> failures;
};

/// Diagonal 0^[1], off-diagonal layer-zero (or -inf), M*M = M and s(det M) != 0.
template <LayerRing L>
QuasiIdentityReport quasi_identity_check(const BasicMatrix<L>& m) {
    detail::require_square(m, "quasi_identity_check");
    QuasiIdentityReport rep;
    auto fail = [&](QuasiIdentityCheck c, std::optional<std::pair<std::size_t, std::size_t>> pos) {
        rep.is_quasi_identity = false;
        rep.failures.push_back({c, pos});
    };
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j && m(i, j) != BasicScalar<L>::one()) fail(QuasiIdentityCheck::Diagonal, std::pair{i, j});
            if (i != j && !m(i, j).is_layer_zero()) fail(QuasiIdentityCheck::OffDiagonal, std::pair{i, j});
        }
    if (m * m != m) fail(QuasiIdentityCheck::Idempotent, std::nullopt);
    if (det(m).is_layer_zero()) fail(QuasiIdentityCheck::Nonsingular, std::nullopt);
    return rep;
}

template <LayerRing L>
struct QuasiInverse {
    BasicMatrix<L> inverse;
    QuasiIdentityReport left;   // A * A^nabla
    QuasiIdentityReport right;  // A^nabla * A
};

/// A^nabla = det(A)^{-1} adj(A), with both products checked.
template <LayerRing L>
QuasiInverse<L> quasi_inverse(const BasicMatrix<L>& a) {
    detail::require_square(a, "quasi_inverse");
    auto d = det(a);
    if (d.is_neg_inf() || !unit_inverse(d.sort()))
        throw Error(Errc::SingularDeterminant, "det = " + d.to_string() + " is not invertible");
    auto inv = invert(d) * adjoint(a);
    return {inv, quasi_identity_check(a * inv), quasi_identity_check(inv * a)};
}

// ---------------------------------------------------------------------------
// Nilpotency, paths and cycles

struct NilpotencyResult {
    bool nilpotent = false;
    std::optional<unsigned> witness;  // least m with A^m layer-zero
};

/// Searches m = 1..bound for A^m entirely layer-zero. bound 0 means n^2.
template <LayerRing L>
NilpotencyResult is_nilpotent(const BasicMatrix<L>& a, unsigned bound = 0) {
    detail::require_square(a, "is_nilpotent");
    if (bound == 0) bound = static_cast<unsigned>(std::max<std::size_t>(1, a.rows() * a.rows()));
    BasicMatrix<L> p = a;
    for (unsigned m = 1; m <= bound; ++m) {
        if (p.is_layer_zero()) return {true, m};
        p = p * a;
    }
    return {};
}

/// Sum over all length-k paths i -> j of the entry products, by enumeration.
template <LayerRing L>
BasicScalar<L> power_entry_paths(const BasicMatrix<L>& a, unsigned k, std::size_t i, std::size_t j) {
    detail::require_square(a, "power_entry_paths");
    if (k == 0) throw Error(Errc::InvalidArgument, "path length must be >= 1");
    const std::size_t n = a.rows();
    std::vector<std::size_t> mid(k - 1, 0);
    BasicScalar<L> total;
    while (true) {
        auto w = BasicScalar<L>::one();
        std::size_t prev = i;
        for (auto v : mid) {
            w *= a(prev, v);
            prev = v;
        }
        w *= a(prev, j);
        total += w;
        std::size_t pos = 0;
        while (pos < mid.size() && ++mid[pos] == n) mid[pos++] = 0;
        if (pos == mid.size()) break;
    }
    return total;
}

template <LayerRing L>
struct Cycle {
    std::vector<std::size_t> vertices;  // starts at its least vertex
    BasicScalar<L> weight;
    Rational mean;  // t(weight) / length

    std::size_t length() const { return vertices.size(); }
};

/// Every simple cycle through finite entries, each listed once.
template <LayerRing L>
std::vector<Cycle<L>> simple_cycles(const BasicMatrix<L>& a) {
    detail::require_square(a, "simple_cycles");
    const std::size_t n = a.rows();
    std::vector<Cycle<L>> out;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n, false);

    auto dfs = [&](auto&& self, std::size_t start, std::size_t v, BasicScalar<L> w) -> void {
        for (std::size_t u = start; u < n; ++u) {
            const auto& e = a(v, u);
            if (e.is_neg_inf()) continue;
            if (u == start) {
                auto cw = w * e;
                out.push_back({path, cw, cw.tangible_value() / Rational(static_cast<std::int64_t>(path.size()))});
            } else if (!on_path[u]) {
                on_path[u] = true;
                path.push_back(u);
                self(self, start, u, w * e);
                path.pop_back();
                on_path[u] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = true;
        dfs(dfs, s, s, BasicScalar<L>::one());
        on_path[s] = false;
    }
    return out;
}

/// Maximum tangible mean over simple cycles, by enumeration.
template <LayerRing L>
std::optional<Rational> max_cycle_mean_bruteforce(const BasicMatrix<L>& a) {
    std::optional<Rational> best;
    for (const auto& c : simple_cycles(a))
        if (!best || c.mean > *best) best = c.mean;
    return best;
}

// ---------------------------------------------------------------------------
// Eigenvalues

enum class EigenStatus { Strict, ELTOnly, No };

inline const char* to_string(EigenStatus s) {
    switch (s) {
        case EigenStatus::Strict: return "Strict";
        case EigenStatus::ELTOnly: return "ELTOnly";
        case EigenStatus::No: return "No";
    }
    return "?";
}

/// Strict if Av = xv; ELTOnly if only s(Av + (-)xv) vanishes; otherwise No.
template <LayerRing L>
EigenStatus eigen_verify(const BasicMatrix<L>& a, const BasicScalar<L>& x, const Vector<L>& v) {
    detail::require_square(a, "eigen_verify");
    if (v.size() != a.rows()) throw Error(Errc::DimensionMismatch, "vector length does not match matrix");
    bool any_finite = false;
    for (const auto& e : v) {
        if (e.is_neg_inf()) continue;
        any_finite = true;
        if (e.is_layer_zero())
            throw Error(Errc::InvalidArgument, "vector entry " + e.to_string() + " has layer zero");
    }
    if (!any_finite) throw Error(Errc::ZeroVector, "eigenvector must not be all -inf");
    auto av = apply(a, v);
    Vector<L> xv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) xv[i] = x * v[i];
    if (av == xv) return EigenStatus::Strict;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(av[i] + negate(xv[i])).is_layer_zero()) return EigenStatus::No;
    return EigenStatus::ELTOnly;
}

}  // namespace eltlab
