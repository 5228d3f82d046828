#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eltlab/rational.hpp"
#include "eltlab/scalar.hpp"

namespace eltlab {

/// Finite-support Puiseux series sum c_i t^{e_i} with rational exponents and
/// rational coefficients. Exponents strictly increase; no zero coefficient
/// is stored; no terms means the zero series.
class PuiseuxSeries {
public:
    struct Term {
        Rational exponent;
        Rational coefficient;
        friend bool operator==(const Term&, const Term&) = default;
    };

    PuiseuxSeries() = default;
    /// Normalizes: sorts, merges equal exponents, drops zero coefficients.
    explicit PuiseuxSeries(std::vector<Term> terms);

    static PuiseuxSeries monomial(Rational coefficient, Rational exponent) {
        return PuiseuxSeries({{exponent, coefficient}});
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

    friend PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator*(const Rational& alpha, const PuiseuxSeries& x);
    PuiseuxSeries operator-() const { return Rational(-1) * *this; }

    /// `c1*t^(e1) + c2*t^(e2) + ...`, ascending exponents; `0` for the zero series.
    std::string to_string() const;

    /// Accepts terms joined by `+` or `-`; a term is `c`, `c*t^(e)`, `t^(e)`
    /// or `t`. Whitespace is ignored.
    static PuiseuxSeries parse(std::string_view text);

private:
    std::vector<Term> terms_;
};

/// Least exponent with a nonzero coefficient; nullopt stands for +inf (zero series).
std::optional<Rational> valuation(const PuiseuxSeries& x);

/// Leading monomial c t^a maps to (-a)^[c]; the zero series maps to -inf.
Scalar eltrop(const PuiseuxSeries& x);

}  // namespace eltlab
