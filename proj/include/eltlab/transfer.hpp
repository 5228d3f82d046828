#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "eltlab/expression.hpp"
#include "eltlab/maxplus.hpp"
#include "eltlab/rational.hpp"
#include "eltlab/scalar.hpp"

namespace eltlab {

/// Commutative ring of checked 64-bit integers; negation is additive inverse.
struct RingModel {
    using value_type = Integer;
    static value_type zero() { return Integer(0); }
    static value_type one() { return Integer(1); }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type neg(const value_type& a) { return -a; }
};

/// Max-plus semifield with the trivial negation map.
struct MaxPlusModel {
    using value_type = MaxPlus;
    static value_type zero() { return MaxPlus::bottom(); }
    static value_type one() { return MaxPlus(0); }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type neg(const value_type& a) { return a; }
};

/// ELT scalars with the layer-negating map.
template <LayerRing L>
struct EltModel {
    using value_type = BasicScalar<L>;
    static value_type zero() { return value_type::neg_inf(); }
    static value_type one() { return value_type::one(); }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type neg(const value_type& a) { return negate(a); }
};

namespace detail {

template <class Model>
typename Model::value_type eval_node(const ExprPtr& e, std::span<const typename Model::value_type> x,
                                     std::unordered_map<const ExprNode*, typename Model::value_type>& memo) {
    if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
    typename Model::value_type r;
    switch (e->kind) {
        case ExprNode::Kind::Const:
            r = e->value ? Model::one() : Model::zero();
            break;
        case ExprNode::Kind::Var:
            if (e->value >= x.size())
                throw Error(Errc::UnboundVariable, "x" + std::to_string(e->value + 1) + " has no value");
            r = x[e->value];
            break;
        case ExprNode::Kind::Add:
            r = Model::zero();
            for (const auto& c : e->children) r = Model::add(r, eval_node<Model>(c, x, memo));
            break;
        case ExprNode::Kind::Mul:
            r = Model::one();
            for (const auto& c : e->children) r = Model::mul(r, eval_node<Model>(c, x, memo));
            break;
    }
    memo.emplace(e.get(), r);
    return r;
}

}  // namespace detail

/// Value of a positive expression; x[i] is the value of variable i.
template <class Model>
typename Model::value_type evaluate(const ExprPtr& e, std::span<const typename Model::value_type> x) {
    std::unordered_map<const ExprNode*, typename Model::value_type> memo;
    return detail::eval_node<Model>(e, x, memo);
}

/// P+ + (-)P- in the model.
template <class Model>
typename Model::value_type evaluate(const PolyExpression& p, std::span<const typename Model::value_type> x) {
    std::unordered_map<const ExprNode*, typename Model::value_type> memo;
    auto v = detail::eval_node<Model>(p.plus(), x, memo);
    if (p.has_minus()) v = Model::add(v, Model::neg(detail::eval_node<Model>(p.minus(), x, memo)));
    return v;
}

enum class Relation { Nabla, Surpass, Equal };
const char* to_string(Relation r);

/// One componentwise instance lhs R rhs of a matrix identity.
struct IdentityComponent {
    std::string label;
    PolyExpression lhs;
    PolyExpression rhs;
};

struct Identity {
    std::string name;
    Relation relation = Relation::Equal;
    /// Strong form: every right-hand side must have disjoint support.
    bool strong = false;
    std::vector<IdentityComponent> components;
};

struct TransferFailure {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string stage;  // ring, strong-form, max-plus, consistency, elt
    std::string component;
    std::string detail;
};

struct TransferReport {
    std::string name;
    Relation relation = Relation::Equal;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool ring_identity = true;
    bool disjoint_support = true;
    std::size_t failure_count = 0;
    /// First few failures in trial order.
    std::vector<TransferFailure> failures;

    bool passed() const { return failure_count == 0; }
    /// Seed of the first failing trial, or the base seed when all passed.
    std::uint64_t record_seed() const { return failures.empty() ? seed : failures.front().seed; }
    /// `PASS name seed` or `FAIL name seed`.
    std::string record() const;
};

/// Ring stage is symbolic (Z-normal forms of lhs - rhs must cancel). Trial k
/// draws an ELT assignment from seed + k, projects it to max-plus, and checks
/// the tropical hypothesis, t(ELT value) = max-plus value, and the ELT relation.
TransferReport check_identity(const Identity& id, std::size_t trials, std::uint64_t seed);

TransferReport check_nabla(const PolyExpression& p, const PolyExpression& q, std::size_t trials, std::uint64_t seed);
TransferReport check_surpass(const PolyExpression& p, const PolyExpression& q, std::size_t trials, std::uint64_t seed,
                             bool strong = false);
TransferReport check_equal(const PolyExpression& p, const PolyExpression& q, std::size_t trials, std::uint64_t seed);

/// Square matrix of expressions, row-major.
using ExprMatrix = std::vector<std::vector<PolyExpression>>;

/// Entry (i, j) is variable offset + i*n + j.
ExprMatrix symbolic_matrix(std::size_t n, std::size_t offset = 0);
ExprMatrix expr_identity(std::size_t n);
ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
ExprMatrix operator*(const PolyExpression& c, const ExprMatrix& a);
ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
/// Permutation expansion; `flip_term` reverses the sign of the k-th
/// permutation in lexicographic order (mutation control).
PolyExpression det_expression(const ExprMatrix& a, std::optional<std::size_t> flip_term = std::nullopt);
ExprMatrix adjoint_expression(const ExprMatrix& a);
/// p_A(A) = sum_k (-1)^(n-k) E_{n-k}(A) A^k, E_m the sum of m x m principal minors.
ExprMatrix cayley_hamilton_expression(const ExprMatrix& a);

/// Identity families run by the verification suites.
std::vector<std::string> identity_names();
Identity make_identity(const std::string& family, std::size_t n);
/// det-mult with one permutation term's sign reversed in det(AB).
Identity mutation_control(std::size_t n);

/// Every family for n in {2, 3}.
std::vector<Identity> canned_identities();

}  // namespace eltlab
