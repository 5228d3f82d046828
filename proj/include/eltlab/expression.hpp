#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eltlab/error.hpp"

namespace eltlab {

/// Node of a positive expression: sums and products of 0, 1 and variables.
/// Nodes are immutable and shared, so generated expressions form DAGs.
struct ExprNode {
    enum class Kind { Add, Mul, Const, Var };
    Kind kind;
    std::vector<std::shared_ptr<const ExprNode>> children;
    unsigned value = 0;  // Const: 0 or 1; Var: 0-based index
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr expr_const(unsigned c);
ExprPtr expr_var(std::size_t index);
ExprPtr expr_add(std::vector<ExprPtr> terms);
ExprPtr expr_mul(std::vector<ExprPtr> factors);

/// Infix text, variables printed 1-based as `x<k>`.
std::string to_string(const ExprPtr& e);

/// Formal difference P+ - P- of two positive expressions. A null `minus`
/// means the negative part is empty.
class PolyExpression {
public:
    PolyExpression() : plus_(expr_const(0)) {}
    explicit PolyExpression(ExprPtr plus, ExprPtr minus = nullptr) : plus_(std::move(plus)), minus_(std::move(minus)) {}

    static PolyExpression var(std::size_t index) { return PolyExpression(expr_var(index)); }
    static PolyExpression constant(unsigned c) { return PolyExpression(expr_const(c)); }

    const ExprPtr& plus() const noexcept { return plus_; }
    const ExprPtr& minus() const noexcept { return minus_; }
    bool has_minus() const noexcept { return minus_ != nullptr; }
    ExprPtr minus_or_zero() const { return minus_ ? minus_ : expr_const(0); }

    /// Largest variable index plus one.
    std::size_t variable_count() const;

    /// Negation swaps the halves.
    PolyExpression operator-() const { return PolyExpression(minus_or_zero(), plus_); }
    friend PolyExpression operator+(const PolyExpression& p, const PolyExpression& q);
    friend PolyExpression operator-(const PolyExpression& p, const PolyExpression& q) { return p + (-q); }
    /// (P+Q+ + P-Q-) - (P+Q- + P-Q+)
    friend PolyExpression operator*(const PolyExpression& p, const PolyExpression& q);

    std::string to_string() const;

private:
    ExprPtr plus_;
    ExprPtr minus_;
};

/// Grammar: expr := sum ('-' sum)?; sum := prod ('+' prod)*; prod := atom ('*' atom)*;
/// atom := '0' | '1' | 'x' <k> (k >= 1) | '(' sum ')'. At most one top-level '-'.
PolyExpression parse_expression(std::string_view text);

/// Exponent vector with trailing zeros removed, so it is independent of the
/// number of variables in scope.
using Monomial = std::vector<unsigned>;

std::string monomial_to_string(const Monomial& m);

struct MonomialCounts {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    friend bool operator==(const MonomialCounts&, const MonomialCounts&) = default;
};

/// N[x]-expansion of both halves.
using MonomialTable = std::map<Monomial, MonomialCounts>;
/// Z[x]-normal form of P+ - P-; no zero entries.
using SignedExpansion = std::map<Monomial, std::int64_t>;

/// Expansion of a single positive expression.
std::map<Monomial, std::uint64_t> expand(const ExprPtr& e);
MonomialTable expand(const PolyExpression& e);
SignedExpansion signed_expansion(const PolyExpression& e);

bool appears(const PolyExpression& e, const Monomial& m);
/// No monomial appears in both P+ and P-.
bool disjoint_support(const PolyExpression& e);

}  // namespace eltlab
