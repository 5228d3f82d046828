#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace eltlab {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Storage is 64-bit; every operation computes in 128 bits and throws
/// std::overflow_error if the reduced result does not fit. Zero is 0/1.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit from integers
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// `p` or `p/q`, with a leading `-` for negatives.
    std::string to_string() const;

    /// Parses the canonical form. Rejects zero or negative denominators,
    /// unreduced fractions and stray characters.
    static Rational parse(std::string_view text);

private:
    __extension__ typedef __int128 wide;
    static Rational from_wide(wide n, wide d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline std::optional<Rational> unit_inverse(const Rational& r) {
    if (r.is_zero()) return std::nullopt;
    return Rational(1) / r;
}

/// Integer layer values: the non-field ELT ring instance. Checked 64-bit.
class Integer {
public:
    constexpr Integer() noexcept = default;
    constexpr Integer(std::int64_t v) noexcept : v_(v) {}  // NOLINT: implicit from integers

    std::int64_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer&, const Integer&) = default;
    friend auto operator<=>(const Integer&, const Integer&) = default;

    std::string to_string() const { return std::to_string(v_); }
    static Integer parse(std::string_view text);

private:
    std::int64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Integer& r);

inline std::string to_string(const Integer& r) { return r.to_string(); }
inline bool is_zero(const Integer& r) { return r.is_zero(); }
inline std::optional<Integer> unit_inverse(const Integer& r) {
    if (r.value() == 1 || r.value() == -1) return r;
    return std::nullopt;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace eltlab

template <>
struct std::hash<eltlab::Rational> {
    std::size_t operator()(const eltlab::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
