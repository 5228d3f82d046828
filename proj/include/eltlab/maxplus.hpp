#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "eltlab/rational.hpp"

namespace eltlab {

/// A rational or the bottom element -inf, ordered below every rational.
/// Carrier of the max-plus semifield used for tangible projections.
class MaxPlus {
public:
    constexpr MaxPlus() noexcept = default;  // -inf
    MaxPlus(Rational v) : value_(v) {}       // NOLINT: implicit from rationals
    MaxPlus(std::int64_t v) : value_(Rational(v)) {}  // NOLINT

    static MaxPlus bottom() { return {}; }

    bool is_bottom() const noexcept { return !value_.has_value(); }
    const Rational& value() const { return *value_; }

    friend MaxPlus operator+(const MaxPlus& a, const MaxPlus& b) { return a < b ? b : a; }
    friend MaxPlus operator*(const MaxPlus& a, const MaxPlus& b) {
        if (a.is_bottom() || b.is_bottom()) return {};
        return MaxPlus(*a.value_ + *b.value_);
    }

    friend bool operator==(const MaxPlus&, const MaxPlus&) = default;
    friend std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b) {
        if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return is_bottom() ? "-inf" : value_->to_string(); }
    static MaxPlus parse(std::string_view text) {
        if (text == "-inf") return {};
        return MaxPlus(Rational::parse(text));
    }

private:
    std::optional<Rational> value_;
};

inline std::string to_string(const MaxPlus& m) { return m.to_string(); }

}  // namespace eltlab
