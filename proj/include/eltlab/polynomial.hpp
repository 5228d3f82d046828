#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eltlab/error.hpp"
#include "eltlab/scalar.hpp"

namespace eltlab {

/// Univariate ELT polynomial. Absent degrees carry the -inf coefficient, so
/// the stored map never holds -inf; the empty map is the zero polynomial.
template <LayerRing L>
class BasicPolynomial {
public:
    using scalar_type = BasicScalar<L>;

    BasicPolynomial() = default;
    BasicPolynomial(std::initializer_list<std::pair<const unsigned, scalar_type>> terms) {
        for (const auto& [d, c] : terms) add_term(d, c);
    }

    static BasicPolynomial monomial(unsigned degree, scalar_type c) {
        BasicPolynomial p;
        p.add_term(degree, c);
        return p;
    }
    /// The variable itself: 0^[1] * L.
    static BasicPolynomial variable() { return monomial(1, scalar_type::one()); }
    static BasicPolynomial constant(scalar_type c) { return monomial(0, c); }

    /// Adds c * L^degree into the polynomial.
    void add_term(unsigned degree, const scalar_type& c) {
        if (c.is_neg_inf()) return;
        auto [it, inserted] = terms_.try_emplace(degree, c);
        if (!inserted) it->second += c;
    }

    scalar_type coefficient(unsigned degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? scalar_type{} : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::optional<unsigned> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }
    const std::map<unsigned, scalar_type>& terms() const noexcept { return terms_; }

    friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) {
        for (const auto& [d, c] : b.terms_) a.add_term(d, c);
        return a;
    }

    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        BasicPolynomial r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
        return r;
    }

    friend BasicPolynomial operator*(const scalar_type& s, const BasicPolynomial& p) {
        BasicPolynomial r;
        for (const auto& [d, c] : p.terms_) r.add_term(d, s * c);
        return r;
    }

    /// `c_k*L^k + ... + c_1*L^1 + c_0`, descending; `-inf` for the zero polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "-inf";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += it->second.to_string();
            if (it->first > 0) out += "*L^" + std::to_string(it->first);
        }
        return out;
    }

    /// Inverse of to_string. A term may omit its coefficient (`L^2` means
    /// 0^[1]*L^2) and `L` abbreviates `L^1`.
    static BasicPolynomial parse(std::string_view text);

private:
    std::map<unsigned, scalar_type> terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using IntPolynomial = BasicPolynomial<Integer>;

template <LayerRing L>
BasicPolynomial<L> BasicPolynomial<L>::parse(std::string_view text) {
    BasicPolynomial p;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view term = text.substr(pos, end - pos);
        std::size_t b = term.find_first_not_of(" \t\r\n");
        if (b == std::string_view::npos) throw ParseError(pos, "empty polynomial term");
        std::size_t e = term.find_last_not_of(" \t\r\n");
        term = term.substr(b, e - b + 1);
        const std::size_t at = pos + b;

        unsigned degree = 0;
        scalar_type coeff = scalar_type::one();
        auto var = term.find('L');
        if (var == std::string_view::npos) {
            coeff = scalar_type::parse(term);
        } else {
            if (var > 0) {
                auto head = term.substr(0, var);
                auto star = head.find_last_not_of(" \t");
                if (head[star] != '*') throw ParseError(at + var, "expected '*' before 'L'");
                try {
                    coeff = scalar_type::parse(head.substr(0, star));
                } catch (const ParseError& ex) {
                    throw ParseError(at + ex.position(), "malformed coefficient");
                }
            }
            auto tail = term.substr(var + 1);
            auto tb = tail.find_first_not_of(" \t");
            if (tb == std::string_view::npos) {
                degree = 1;
            } else {
                if (tail[tb] != '^') throw ParseError(at + var + 1 + tb, "expected '^'");
                auto digits = tail.substr(tb + 1);
                auto db = digits.find_first_not_of(" \t");
                if (db == std::string_view::npos) throw ParseError(at + term.size(), "expected degree");
                digits = digits.substr(db);
                unsigned d = 0;
                for (std::size_t k = 0; k < digits.size(); ++k) {
                    char c = digits[k];
                    if (c < '0' || c > '9' || d > 100000)
                        throw ParseError(at + var + 2 + tb + db + k, "malformed degree");
                    d = d * 10 + static_cast<unsigned>(c - '0');
                }
                degree = d;
            }
        }
        p.add_term(degree, coeff);
        any = true;
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (!any) throw ParseError(0, "empty polynomial");
    return p;
}

template <LayerRing L>
std::ostream& operator<<(std::ostream& os, const BasicPolynomial<L>& p) {
    return os << p.to_string();
}

/// sum_i c_i x^i. At -inf only the constant term survives.
template <LayerRing L>
BasicScalar<L> evaluate(const BasicPolynomial<L>& p, const BasicScalar<L>& x) {
    BasicScalar<L> acc;
    for (const auto& [d, c] : p.terms()) acc += c * power(x, d);
    return acc;
}

/// s(p(x)) = 0.
template <LayerRing L>
bool is_root(const BasicPolynomial<L>& p, const BasicScalar<L>& x) {
    return evaluate(p, x).is_layer_zero();
}

// ---------------------------------------------------------------------------
// Upper envelope and essentiality

enum class MonomialStatus { Essential, QuasiEssential, Inessential };

inline const char* to_string(MonomialStatus s) {
    switch (s) {
        case MonomialStatus::Essential: return "Essential";
        case MonomialStatus::QuasiEssential: return "QuasiEssential";
        case MonomialStatus::Inessential: return "Inessential";
    }
    return "?";
}

/// Open tangible interval (lo, hi); a missing endpoint is infinite.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    bool contains(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Where on the tangible axis one monomial alone attains the maximum.
struct DominanceInterval {
    unsigned degree;
    Interval range;
};

/// A tangible point where at least two monomials share the maximum.
struct Corner {
    Rational at;
    Rational value;
    std::vector<unsigned> degrees;  // ascending, the tied monomials
};

struct EnvelopeReport {
    std::map<unsigned, MonomialStatus> status;  // every finite monomial
    std::vector<DominanceInterval> dominance;   // left to right, covering Q minus corners
    std::vector<Corner> corners;                // ascending
};

namespace detail {

struct Line {
    unsigned slope;
    Rational offset;
    Rational at(const Rational& x) const { return Rational(slope) * x + offset; }
};

inline std::vector<unsigned> maximizers(const std::vector<Line>& lines, const Rational& x, Rational* value) {
    std::vector<unsigned> best;
    std::optional<Rational> top;
    for (const auto& ln : lines) {
        Rational y = ln.at(x);
        if (!top || y > *top) {
            top = y;
            best.assign(1, ln.slope);
        } else if (y == *top) {
            best.push_back(ln.slope);
        }
    }
    if (value) *value = *top;
    return best;
}

}  // namespace detail

/// Piecewise-linear envelope of the tangible lines y = d*x + t(c_d) and the
/// resulting classification: strictly dominant on an open interval is
/// Essential, touching the envelope only at corners is QuasiEssential,
/// everything else Inessential.
template <LayerRing L>
EnvelopeReport envelope(const BasicPolynomial<L>& p) {
    if (p.is_zero()) throw Error(Errc::DegeneratePolynomial, "polynomial has no finite coefficient");
    std::vector<detail::Line> lines;
    for (const auto& [d, c] : p.terms()) lines.push_back({d, c.tangible_value()});

    std::set<Rational> breaks;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            breaks.insert((lines[i].offset - lines[j].offset) /
                          (Rational(lines[j].slope) - Rational(lines[i].slope)));

    EnvelopeReport rep;
    for (const auto& ln : lines) rep.status[ln.slope] = MonomialStatus::Inessential;

    std::vector<Rational> bp(breaks.begin(), breaks.end());
    for (const auto& x : bp) {
        Rational v;
        auto top = detail::maximizers(lines, x, &v);
        if (top.size() >= 2) {
            std::sort(top.begin(), top.end());
            for (auto d : top) rep.status[d] = MonomialStatus::QuasiEssential;
            rep.corners.push_back({x, v, top});
        }
    }

    // One sample per open interval between consecutive breakpoints.
    auto sample = [&](std::size_t k) -> Rational {
        if (bp.empty()) return Rational(0);
        if (k == 0) return bp.front() - Rational(1);
        if (k == bp.size()) return bp.back() + Rational(1);
        return (bp[k - 1] + bp[k]) / Rational(2);
    };
    for (std::size_t k = 0; k <= bp.size(); ++k) {
        auto top = detail::maximizers(lines, sample(k), nullptr);
        unsigned d = top.front();  // distinct slopes: unique off the breakpoints
        rep.status[d] = MonomialStatus::Essential;
        Interval range{k == 0 ? std::nullopt : std::optional(bp[k - 1]),
                       k == bp.size() ? std::nullopt : std::optional(bp[k])};
        // Same winner on both sides: the breakpoint was not a corner.
        if (!rep.dominance.empty() && rep.dominance.back().degree == d) {
            rep.dominance.back().range.hi = range.hi;
        } else {
            rep.dominance.push_back({d, range});
        }
    }
    return rep;
}

/// Pointwise status of the monomial of the given degree at a, straight from
/// the definitions with full ELT equality.
template <LayerRing L>
MonomialStatus classify_at(const BasicPolynomial<L>& p, unsigned degree, const BasicScalar<L>& a) {
    auto it = p.terms().find(degree);
    if (it == p.terms().end()) throw Error(Errc::InvalidArgument, "monomial of degree " + std::to_string(degree) + " is absent");
    BasicPolynomial<L> rest;
    for (const auto& [d, c] : p.terms())
        if (d != degree) rest.add_term(d, c);
    auto h = it->second * power(a, degree);
    auto pa = evaluate(p, a);
    auto ra = evaluate(rest, a);
    if (pa == ra && h.tangible() < pa.tangible()) return MonomialStatus::Inessential;
    if (pa == h && ra.tangible() < pa.tangible()) return MonomialStatus::Essential;
    return MonomialStatus::QuasiEssential;
}

// ---------------------------------------------------------------------------
// Roots

enum class IntervalRootKind {
    AnyLayer,       // dominant coefficient has layer zero
    ZeroLayerOnly,  // only points a^[0]; dominant monomial has positive degree
};

inline const char* to_string(IntervalRootKind k) {
    return k == IntervalRootKind::AnyLayer ? "any-layer" : "zero-layer-only";
}

template <LayerRing L>
struct CornerRoot {
    Rational tangible;
    std::vector<L> layer_equation;  // coefficient of l^i at index i
    LayerSolutions<L> layers;
};

struct IntervalRoot {
    Interval range;
    unsigned dominant_degree;
    IntervalRootKind kind;
};

/// Every layer-zero evaluation point of p: at each envelope corner the
/// solutions l of sum_{tied i} s(c_i) l^i = 0, plus the open intervals where
/// the dominant monomial's value has layer zero.
template <LayerRing L>
struct RootDescription {
    std::vector<CornerRoot<L>> corners;
    std::vector<IntervalRoot> intervals;
    bool neg_inf_is_root = false;  // p(-inf) = c_0 has layer zero

    /// Whether x is covered by this description.
    bool covers(const BasicScalar<L>& x) const {
        if (x.is_neg_inf()) return neg_inf_is_root;
        const auto& a = x.tangible_value();
        for (const auto& c : corners)
            if (c.tangible == a)
                return c.layers.every_layer ||
                       std::find(c.layers.values.begin(), c.layers.values.end(), x.sort()) != c.layers.values.end();
        for (const auto& iv : intervals)
            if (iv.range.contains(a)) return iv.kind == IntervalRootKind::AnyLayer || x.is_layer_zero();
        return false;
    }
};

template <LayerRing L>
RootDescription<L> elt_roots(const BasicPolynomial<L>& p) {
    auto env = envelope(p);
    RootDescription<L> out;
    for (const auto& c : env.corners) {
        std::vector<L> eq(c.degrees.back() + 1, L(0));
        for (auto d : c.degrees) eq[d] = p.coefficient(d).sort();
        auto sol = layer_roots<L>(eq);
        out.corners.push_back({c.at, std::move(eq), std::move(sol)});
    }
    for (const auto& dom : env.dominance) {
        if (p.coefficient(dom.degree).is_layer_zero())
            out.intervals.push_back({dom.range, dom.degree, IntervalRootKind::AnyLayer});
        else if (dom.degree > 0)
            out.intervals.push_back({dom.range, dom.degree, IntervalRootKind::ZeroLayerOnly});
    }
    out.neg_inf_is_root = p.coefficient(0).is_layer_zero();
    return out;
}

}  // namespace eltlab
