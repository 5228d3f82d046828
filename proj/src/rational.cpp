#include "eltlab/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "eltlab/error.hpp"

namespace eltlab {

namespace {

__extension__ typedef __int128 i128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t narrow(i128 v) {
    if (v > kMax || v < kMin) throw std::overflow_error("eltlab: 64-bit rational overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Parses an optionally signed decimal integer with no leading zeros.
std::int64_t parse_int(std::string_view s, std::size_t offset) {
    if (s.empty()) throw ParseError(offset, "expected integer");
    std::size_t digits = s[0] == '-' ? 1 : 0;
    if (digits == s.size()) throw ParseError(offset, "expected digits");
    if (s[digits] == '0' && s.size() > digits + 1) throw ParseError(offset, "leading zero");
    if (digits == 1 && s == "-0") throw ParseError(offset, "negative zero");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError(offset, "integer out of range");
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(offset + static_cast<std::size_t>(ptr - s.data()), "unexpected character");
    return v;
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return narrow(gcd128(a, b)); }

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) return *this = from_wide(static_cast<i128>(num_) + o.num_, den_);
    return *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                             static_cast<i128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    return *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
    return *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
    std::int64_t n = parse_int(text.substr(0, slash), 0);
    auto dtext = text.substr(slash + 1);
    if (!dtext.empty() && dtext[0] == '-') throw ParseError(slash + 1, "negative denominator");
    std::int64_t d = parse_int(dtext, slash + 1);
    if (d == 0) throw ParseError(slash + 1, "zero denominator");
    if (gcd128(n, d) != 1) throw ParseError(0, "fraction not in lowest terms");
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer Integer::operator-() const { return Integer(narrow(-static_cast<i128>(v_))); }
Integer& Integer::operator+=(const Integer& o) { v_ = narrow(static_cast<i128>(v_) + o.v_); return *this; }
Integer& Integer::operator-=(const Integer& o) { v_ = narrow(static_cast<i128>(v_) - o.v_); return *this; }
Integer& Integer::operator*=(const Integer& o) { v_ = narrow(static_cast<i128>(v_) * o.v_); return *this; }

Integer Integer::parse(std::string_view text) { return Integer(parse_int(text, 0)); }

std::ostream& operator<<(std::ostream& os, const Integer& r) { return os << r.value(); }

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonInvertible: return "NonInvertible";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotSquare: return "NotSquare";
        case Errc::SingularDeterminant: return "SingularDeterminant";
        case Errc::DegeneratePolynomial: return "DegeneratePolynomial";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InfeasibleAssignment: return "InfeasibleAssignment";
        case Errc::UnboundVariable: return "UnboundVariable";
        case Errc::Syntax: return "SyntaxError";
    }
    return "Unknown";
}

}  // namespace eltlab
