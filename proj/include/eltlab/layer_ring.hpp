#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eltlab/rational.hpp"

namespace eltlab {

template <class L>
struct LayerTraits;

/// Commutative layer ring. Zero and one are `L{0}` and `L{1}`; `unit_inverse`
/// returns the multiplicative inverse for units only.
template <class L>
concept LayerRing = std::regular<L> && std::constructible_from<L, std::int64_t> &&
                    requires(const L a, const L b, std::string_view text) {
                        { a + b } -> std::same_as<L>;
                        { a - b } -> std::same_as<L>;
                        { a * b } -> std::same_as<L>;
                        { -a } -> std::same_as<L>;
                        { is_zero(a) } -> std::convertible_to<bool>;
                        { unit_inverse(a) } -> std::same_as<std::optional<L>>;
                        { to_string(a) } -> std::same_as<std::string>;
                        { LayerTraits<L>::parse(text) } -> std::same_as<L>;
                        { LayerTraits<L>::to_rational(a) } -> std::same_as<Rational>;
                        { LayerTraits<L>::from_rational(Rational{}) } -> std::same_as<std::optional<L>>;
                    };

template <>
struct LayerTraits<Rational> {
    static constexpr const char* name = "Q";
    static Rational parse(std::string_view t) { return Rational::parse(t); }
    static Rational to_rational(const Rational& r) { return r; }
    static std::optional<Rational> from_rational(const Rational& r) { return r; }
};

template <>
struct LayerTraits<Integer> {
    static constexpr const char* name = "Z";
    static Integer parse(std::string_view t) { return Integer::parse(t); }
    static Rational to_rational(const Integer& r) { return Rational(r.value()); }
    static std::optional<Integer> from_rational(const Rational& r) {
        if (!r.is_integer()) return std::nullopt;
        return Integer(r.num());
    }
};

/// Solution set of a univariate equation over the layer ring.
template <class L>
struct LayerSolutions {
    bool every_layer = false;  // the equation is identically zero
    std::vector<L> values;     // ascending; empty when no solution
};

/// Rational roots of sum_i coeffs[i] * x^i, sorted ascending.
/// An identically zero polynomial yields every_layer.
LayerSolutions<Rational> rational_roots(std::span<const Rational> coeffs);

/// Solutions of sum_i coeffs[i] * x^i = 0 inside L (for Z: integer roots only).
template <LayerRing L>
LayerSolutions<L> layer_roots(std::span<const L> coeffs) {
    std::vector<Rational> q;
    q.reserve(coeffs.size());
    for (const auto& c : coeffs) q.push_back(LayerTraits<L>::to_rational(c));
    auto qs = rational_roots(q);
    LayerSolutions<L> out;
    out.every_layer = qs.every_layer;
    for (const auto& r : qs.values)
        if (auto v = LayerTraits<L>::from_rational(r)) out.values.push_back(*v);
    return out;
}

}  // namespace eltlab
