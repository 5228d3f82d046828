#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eltlab/error.hpp"
#include "eltlab/matrix.hpp"
#include "eltlab/maxplus.hpp"

namespace eltlab {

/// Dense rectangular matrix over the max-plus semifield.
class TropicalMatrix {
public:
    TropicalMatrix() = default;
    TropicalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    TropicalMatrix(std::initializer_list<std::initializer_list<MaxPlus>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    MaxPlus& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const MaxPlus& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

    /// Rows on separate lines, entries separated by ", ".
    std::string to_string() const;
    /// Inverse of `to_string`: one row per line, comma-separated rationals or `-inf`.
    static TropicalMatrix parse(std::string_view text);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<MaxPlus> data_;
};

/// Entrywise tangible projection.
template <LayerRing L>
TropicalMatrix project(const BasicMatrix<L>& a) {
    TropicalMatrix t(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(i, j) = a(i, j).tangible();
    return t;
}

/// sigma[i] is the column matched to row i.
using Assignment = std::vector<std::size_t>;

struct CriticalityResult {
    bool critical = false;
    std::optional<Assignment> witness;
};

/// An entry is column-critical when it is finite and equals its column maximum.
/// Critical means some permutation uses only column-critical entries.
CriticalityResult is_critical(const TropicalMatrix& t);

struct HungarianResult {
    std::vector<Rational> alpha;  // row scalars, alpha_i = -U_i
    Assignment sigma;
    std::vector<Rational> row_dual;  // U_i
    std::vector<Rational> col_dual;  // V_j
    Rational weight;                 // sum of t_{i, sigma(i)}
};

/// Exact max-weight assignment with duals U_i + V_j >= t_ij, tight on sigma.
/// Adding alpha_i to row i makes the matrix critical with witness sigma.
/// Throws InfeasibleAssignment when every permutation meets a -inf entry.
HungarianResult hungarian_scaling(const TropicalMatrix& t);

/// Row i of `t` shifted by alpha_i.
TropicalMatrix scale_rows(const TropicalMatrix& t, const std::vector<Rational>& alpha);

/// True iff U_i + V_j >= t_ij everywhere with equality on sigma.
bool duals_feasible(const TropicalMatrix& t, const HungarianResult& h);

/// D = diag(alpha_i^[1]) so that t(DA) is critical.
template <LayerRing L>
BasicMatrix<L> critical_scaling_elt(const BasicMatrix<L>& a) {
    detail::require_square(a, "critical_scaling_elt");
    auto h = hungarian_scaling(project(a));
    std::vector<BasicScalar<L>> d;
    d.reserve(h.alpha.size());
    for (const auto& x : h.alpha) d.emplace_back(x, L(1));
    return BasicMatrix<L>::diagonal(d);
}

/// Maximum cycle mean of the digraph with an edge i -> j per finite t_ij;
/// nullopt when the digraph is acyclic.
std::optional<Rational> karp_max_mean_cycle(const TropicalMatrix& t);

}  // namespace eltlab
