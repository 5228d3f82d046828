#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "eltlab/error.hpp"
#include "eltlab/layer_ring.hpp"
#include "eltlab/maxplus.hpp"
#include "eltlab/rational.hpp"

namespace eltlab {

/// Element of the ELT algebra over (Q, +) with layers in L, plus the adjoined -inf.
///
/// Addition keeps the larger tangible value and adds layers on ties;
/// multiplication adds tangibles and multiplies layers. -inf is the additive
/// identity, absorbs under multiplication, and has layer 0.
template <LayerRing L>
class BasicScalar {
public:
    using layer_type = L;

    /// -inf
    BasicScalar() = default;
    BasicScalar(Rational tangible, L layer) : finite_(true), tangible_(tangible), layer_(std::move(layer)) {}

    static BasicScalar neg_inf() { return {}; }
    static BasicScalar one() { return {Rational(0), L(1)}; }
    static BasicScalar zero_layer(Rational tangible = 0) { return {tangible, L(0)}; }
    /// 0^[l]: the layer-only scalar.
    static BasicScalar of_layer(L layer) { return {Rational(0), std::move(layer)}; }

    bool is_neg_inf() const noexcept { return !finite_; }
    bool is_finite() const noexcept { return finite_; }

    /// Sorting map s; s(-inf) = 0.
    L sort() const { return finite_ ? layer_ : L(0); }
    /// Tangible map t; t(-inf) is the max-plus bottom.
    MaxPlus tangible() const { return finite_ ? MaxPlus(tangible_) : MaxPlus::bottom(); }
    /// Tangible value of a finite scalar.
    const Rational& tangible_value() const { return tangible_; }

    bool is_layer_zero() const { return is_zero(sort()); }

    friend BasicScalar operator+(const BasicScalar& x, const BasicScalar& y) {
        if (!x.finite_) return y;
        if (!y.finite_) return x;
        if (x.tangible_ > y.tangible_) return x;
        if (x.tangible_ < y.tangible_) return y;
        return {x.tangible_, x.layer_ + y.layer_};
    }

    friend BasicScalar operator*(const BasicScalar& x, const BasicScalar& y) {
        if (!x.finite_ || !y.finite_) return {};
        return {x.tangible_ + y.tangible_, x.layer_ * y.layer_};
    }

    BasicScalar& operator+=(const BasicScalar& o) { return *this = *this + o; }
    BasicScalar& operator*=(const BasicScalar& o) { return *this = *this * o; }

    friend bool operator==(const BasicScalar& x, const BasicScalar& y) {
        if (x.finite_ != y.finite_) return false;
        return !x.finite_ || (x.tangible_ == y.tangible_ && x.layer_ == y.layer_);
    }

    std::string to_string() const {
        if (!finite_) return "-inf";
        return tangible_.to_string() + "^[" + eltlab::to_string(layer_) + "]";
    }

    /// Parses `<t>^[<l>]` or `-inf`; surrounding whitespace is ignored.
    static BasicScalar parse(std::string_view text) {
        std::size_t b = 0, e = text.size();
        while (b < e && is_space(text[b])) ++b;
        while (e > b && is_space(text[e - 1])) --e;
        auto s = text.substr(b, e - b);
        if (s == "-inf") return {};
        auto caret = s.find("^[");
        if (caret == std::string_view::npos) throw ParseError(b, "expected '<t>^[<l>]' or '-inf'");
        if (s.back() != ']') throw ParseError(b + s.size(), "expected ']'");
        Rational t = parse_at(s.substr(0, caret), b, [](std::string_view v) { return Rational::parse(v); });
        L l = parse_at(s.substr(caret + 2, s.size() - caret - 3), b + caret + 2,
                       [](std::string_view v) { return LayerTraits<L>::parse(v); });
        return {t, l};
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    template <class F>
    static auto parse_at(std::string_view v, std::size_t offset, F&& f) {
        try {
            return f(v);
        } catch (const ParseError& e) {
            throw ParseError(offset + e.position(), "malformed scalar component '" + std::string(v) + "'");
        }
    }

    bool finite_ = false;
    Rational tangible_{};
    L layer_{};
};

template <LayerRing L>
std::ostream& operator<<(std::ostream& os, const BasicScalar<L>& x) {
    return os << x.to_string();
}

template <LayerRing L>
std::string to_string(const BasicScalar<L>& x) {
    return x.to_string();
}

using Scalar = BasicScalar<Rational>;
using IntScalar = BasicScalar<Integer>;

/// Negation map: a^[l] -> a^[-l].
template <LayerRing L>
BasicScalar<L> negate(const BasicScalar<L>& x) {
    if (x.is_neg_inf()) return x;
    return {x.tangible_value(), -x.sort()};
}

/// x + (-)x, always of layer zero.
template <LayerRing L>
BasicScalar<L> circ(const BasicScalar<L>& x) {
    return x + negate(x);
}

/// x |= y: x = y + z for some layer-zero z (including -inf).
template <LayerRing L>
bool surpasses(const BasicScalar<L>& x, const BasicScalar<L>& y) {
    if (x == y) return true;
    if (x.is_neg_inf() || !x.is_layer_zero()) return false;
    return x.tangible() > y.tangible();
}

/// x nabla y: x + (-)y has layer zero.
template <LayerRing L>
bool nabla(const BasicScalar<L>& x, const BasicScalar<L>& y) {
    return (x + negate(y)).is_layer_zero();
}

/// Multiplicative inverse; requires a finite scalar with a unit layer.
template <LayerRing L>
BasicScalar<L> invert(const BasicScalar<L>& x) {
    if (x.is_neg_inf()) throw Error(Errc::NonInvertible, "-inf has no inverse");
    auto inv = unit_inverse(x.sort());
    if (!inv) throw Error(Errc::NonInvertible, "layer of " + x.to_string() + " is not a unit");
    return {-x.tangible_value(), *inv};
}

template <LayerRing L>
BasicScalar<L> power(BasicScalar<L> x, unsigned k) {
    BasicScalar<L> r = BasicScalar<L>::one();
    for (; k > 0; k >>= 1, x = x * x)
        if (k & 1u) r = r * x;
    return r;
}

}  // namespace eltlab
