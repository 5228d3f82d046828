#include "eltlab/tropical.hpp"

#include <algorithm>
#include <functional>

namespace eltlab {

TropicalMatrix::TropicalMatrix(std::initializer_list<std::initializer_list<MaxPlus>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged tropical matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

std::string TropicalMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += (*this)(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

TropicalMatrix TropicalMatrix::parse(std::string_view text) {
    std::vector<std::vector<MaxPlus>> rows;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        auto nl = text.find('\n', line_start);
        auto line = text.substr(line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
        std::vector<MaxPlus> row;
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            std::size_t cell = 0;
            while (true) {
                auto comma = line.find(',', cell);
                auto raw = line.substr(cell, comma == std::string_view::npos ? std::string_view::npos : comma - cell);
                auto b = raw.find_first_not_of(" \t\r");
                auto e = raw.find_last_not_of(" \t\r");
                if (b == std::string_view::npos) throw ParseError(line_start + cell, "empty matrix entry");
                try {
                    row.push_back(MaxPlus::parse(raw.substr(b, e - b + 1)));
                } catch (const ParseError& err) {
                    throw ParseError(line_start + cell + b + err.position(), "malformed tropical entry");
                }
                if (comma == std::string_view::npos) break;
                cell = comma + 1;
            }
            if (!rows.empty() && row.size() != rows.front().size())
                throw ParseError(line_start, "row length differs from first row");
            rows.push_back(std::move(row));
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    if (rows.empty()) throw ParseError(0, "empty matrix");
    TropicalMatrix t(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) t(i, j) = rows[i][j];
    return t;
}

namespace {

void require_square(const TropicalMatrix& t, const char* op) {
    if (!t.is_square())
        throw Error(Errc::NotSquare, std::string(op) + " needs a square matrix, got " + std::to_string(t.rows()) +
                                         "x" + std::to_string(t.cols()));
}

// Kuhn's augmenting paths; rows scan columns in increasing order.
std::optional<Assignment> perfect_matching(const std::vector<std::vector<bool>>& edge) {
    const std::size_t n = edge.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> row_of(n, none);
    std::vector<bool> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!edge[i][j] || seen[j]) continue;
            seen[j] = true;
            if (row_of[j] == none || augment(row_of[j])) {
                row_of[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        seen.assign(n, false);
        if (!augment(i)) return std::nullopt;
    }
    Assignment sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[row_of[j]] = j;
    return sigma;
}

}  // namespace

CriticalityResult is_critical(const TropicalMatrix& t) {
    require_square(t, "is_critical");
    const std::size_t n = t.rows();
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (std::size_t j = 0; j < n; ++j) {
        MaxPlus best;
        for (std::size_t i = 0; i < n; ++i) best = best + t(i, j);
        if (best.is_bottom()) continue;
        for (std::size_t i = 0; i < n; ++i) edge[i][j] = t(i, j) == best;
    }
    auto sigma = perfect_matching(edge);
    return {sigma.has_value(), sigma};
}

HungarianResult hungarian_scaling(const TropicalMatrix& t) {
    require_square(t, "hungarian_scaling");
    const std::size_t n = t.rows();
    // Minimization on cost -t; bottom entries are forbidden edges. 1-based with
    // a virtual column 0 that holds the row being inserted.
    auto cost = [&](std::size_t i, std::size_t j) -> std::optional<Rational> {
        const MaxPlus& x = t(i - 1, j - 1);
        if (x.is_bottom()) return std::nullopt;
        return -x.value();
    };
    std::vector<Rational> u(n + 1), v(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::optional<Rational>> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            std::optional<Rational> delta;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                if (auto c = cost(i0, j)) {
                    Rational cur = *c - u[i0] - v[j];
                    if (!minv[j] || cur < *minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                }
                if (minv[j] && (!delta || *minv[j] < *delta)) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (!delta) throw Error(Errc::InfeasibleAssignment, "no permutation avoids -inf entries");
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += *delta;
                    v[j] -= *delta;
                } else if (minv[j]) {
                    *minv[j] -= *delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    HungarianResult h;
    h.sigma.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) h.sigma[p[j] - 1] = j - 1;
    for (std::size_t i = 0; i < n; ++i) {
        h.row_dual.push_back(-u[i + 1]);
        h.col_dual.push_back(-v[i + 1]);
        h.alpha.push_back(u[i + 1]);
        h.weight += t(i, h.sigma[i]).value();
    }
    return h;
}

TropicalMatrix scale_rows(const TropicalMatrix& t, const std::vector<Rational>& alpha) {
    if (alpha.size() != t.rows()) throw Error(Errc::DimensionMismatch, "one scalar per row required");
    TropicalMatrix out = t;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out(i, j) = t(i, j) * MaxPlus(alpha[i]);
    return out;
}

bool duals_feasible(const TropicalMatrix& t, const HungarianResult& h) {
    const std::size_t n = t.rows();
    if (h.row_dual.size() != n || h.col_dual.size() != n || h.sigma.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j).is_bottom()) continue;
            Rational slack = h.row_dual[i] + h.col_dual[j] - t(i, j).value();
            if (slack < Rational(0)) return false;
            if (h.sigma[i] == j && !slack.is_zero()) return false;
        }
    return true;
}

std::optional<Rational> karp_max_mean_cycle(const TropicalMatrix& t) {
    require_square(t, "karp_max_mean_cycle");
    const std::size_t n = t.rows();
    if (n == 0) return std::nullopt;
    // d[k][v]: best weight of a k-edge walk ending at v, starting anywhere.
    std::vector<std::vector<MaxPlus>> d(n + 1, std::vector<MaxPlus>(n));
    for (std::size_t v = 0; v < n; ++v) d[0][v] = MaxPlus(0);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t u = 0; u < n; ++u) {
            if (d[k - 1][u].is_bottom()) continue;
            for (std::size_t v = 0; v < n; ++v) d[k][v] = d[k][v] + d[k - 1][u] * t(u, v);
        }
    std::optional<Rational> best;
    for (std::size_t v = 0; v < n; ++v) {
        if (d[n][v].is_bottom()) continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < n; ++k) {
            if (d[k][v].is_bottom()) continue;
            Rational m = (d[n][v].value() - d[k][v].value()) / Rational(static_cast<std::int64_t>(n - k));
            if (!worst || m < *worst) worst = m;
        }
        if (worst && (!best || *worst > *best)) best = worst;
    }
    return best;
}

}  // namespace eltlab
