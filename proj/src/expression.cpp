#include "eltlab/expression.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace eltlab {

ExprPtr expr_const(unsigned c) {
    if (c > 1) throw Error(Errc::InvalidArgument, "expression constants are 0 and 1");
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Kind::Const, {}, c});
}

ExprPtr expr_var(std::size_t index) {
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Kind::Var, {}, static_cast<unsigned>(index)});
}

ExprPtr expr_add(std::vector<ExprPtr> terms) {
    if (terms.empty()) return expr_const(0);
    if (terms.size() == 1) return terms.front();
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Kind::Add, std::move(terms), 0});
}

ExprPtr expr_mul(std::vector<ExprPtr> factors) {
    if (factors.empty()) return expr_const(1);
    if (factors.size() == 1) return factors.front();
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Kind::Mul, std::move(factors), 0});
}

std::string to_string(const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Const:
            return std::to_string(e->value);
        case ExprNode::Kind::Var:
            return "x" + std::to_string(e->value + 1);
        case ExprNode::Kind::Add: {
            std::string out;
            for (const auto& c : e->children) out += (out.empty() ? "" : " + ") + to_string(c);
            return out;
        }
        case ExprNode::Kind::Mul: {
            std::string out;
            for (const auto& c : e->children) {
                if (!out.empty()) out += "*";
                out += c->kind == ExprNode::Kind::Add ? "(" + to_string(c) + ")" : to_string(c);
            }
            return out;
        }
    }
    return {};
}

namespace {

void max_var(const ExprPtr& e, std::size_t& out, std::unordered_map<const ExprNode*, bool>& seen) {
    if (!e || !seen.emplace(e.get(), true).second) return;
    if (e->kind == ExprNode::Kind::Var) out = std::max<std::size_t>(out, e->value + 1);
    for (const auto& c : e->children) max_var(c, out, seen);
}

}  // namespace

std::size_t PolyExpression::variable_count() const {
    std::size_t n = 0;
    std::unordered_map<const ExprNode*, bool> seen;
    max_var(plus_, n, seen);
    max_var(minus_, n, seen);
    return n;
}

PolyExpression operator+(const PolyExpression& p, const PolyExpression& q) {
    ExprPtr minus;
    if (p.has_minus() && q.has_minus())
        minus = expr_add({p.minus(), q.minus()});
    else
        minus = p.has_minus() ? p.minus() : q.minus();
    return PolyExpression(expr_add({p.plus(), q.plus()}), minus);
}

PolyExpression operator*(const PolyExpression& p, const PolyExpression& q) {
    if (!p.has_minus() && !q.has_minus()) return PolyExpression(expr_mul({p.plus(), q.plus()}));
    std::vector<ExprPtr> plus{expr_mul({p.plus(), q.plus()})};
    std::vector<ExprPtr> minus;
    if (p.has_minus() && q.has_minus()) plus.push_back(expr_mul({p.minus(), q.minus()}));
    if (q.has_minus()) minus.push_back(expr_mul({p.plus(), q.minus()}));
    if (p.has_minus()) minus.push_back(expr_mul({p.minus(), q.plus()}));
    return PolyExpression(expr_add(std::move(plus)), expr_add(std::move(minus)));
}

std::string PolyExpression::to_string() const {
    std::string out = eltlab::to_string(plus_);
    if (minus_) out += " - (" + eltlab::to_string(minus_) + ")";
    return out;
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    PolyExpression run() {
        ExprPtr plus = sum();
        ExprPtr minus;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            minus = sum();
            skip();
            if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError(pos_, "only one top-level '-' is allowed");
        }
        if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return PolyExpression(plus, minus);
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr sum() {
        std::vector<ExprPtr> terms{product()};
        while (accept('+')) terms.push_back(product());
        return expr_add(std::move(terms));
    }

    ExprPtr product() {
        std::vector<ExprPtr> factors{atom()};
        while (accept('*')) factors.push_back(atom());
        return expr_mul(std::move(factors));
    }

    ExprPtr atom() {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr inner = sum();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError(pos_, "constants are 0 and 1");
            return expr_const(static_cast<unsigned>(c - '0'));
        }
        if (c == 'x') {
            const std::size_t start = ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError(pos_, "expected variable index after 'x'");
            if (s_[start] == '0') throw ParseError(start, "variable indices start at 1 without leading zeros");
            if (pos_ - start > 6) throw ParseError(start, "variable index too large");
            return expr_var(std::stoul(std::string(s_.substr(start, pos_ - start))) - 1);
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial coefficient overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("monomial coefficient overflow");
    return r;
}

using Poly = std::map<Monomial, std::uint64_t>;

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

const Poly& expand_cached(const ExprPtr& e, std::unordered_map<const ExprNode*, Poly>& memo) {
    if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
    Poly out;
    switch (e->kind) {
        case ExprNode::Kind::Const:
            if (e->value == 1) out[{}] = 1;
            break;
        case ExprNode::Kind::Var: {
            Monomial m(e->value + 1, 0);
            m.back() = 1;
            out[m] = 1;
            break;
        }
        case ExprNode::Kind::Add:
            for (const auto& c : e->children)
                for (const auto& [m, k] : expand_cached(c, memo)) out[m] = checked_add(out[m], k);
            break;
        case ExprNode::Kind::Mul:
            out[{}] = 1;
            for (const auto& c : e->children) {
                const Poly& f = expand_cached(c, memo);
                Poly next;
                for (const auto& [a, ka] : out)
                    for (const auto& [b, kb] : f) {
                        auto& slot = next[monomial_product(a, b)];
                        slot = checked_add(slot, checked_mul(ka, kb));
                    }
                out = std::move(next);
                if (out.empty()) break;
            }
            break;
    }
    return memo.emplace(e.get(), std::move(out)).first->second;
}

}  // namespace

PolyExpression parse_expression(std::string_view text) { return ExprParser(text).run(); }

std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::map<Monomial, std::uint64_t> expand(const ExprPtr& e) {
    std::unordered_map<const ExprNode*, Poly> memo;
    return expand_cached(e, memo);
}

MonomialTable expand(const PolyExpression& e) {
    std::unordered_map<const ExprNode*, Poly> memo;
    MonomialTable table;
    for (const auto& [m, k] : expand_cached(e.plus(), memo)) table[m].plus = k;
    if (e.has_minus())
        for (const auto& [m, k] : expand_cached(e.minus(), memo)) table[m].minus = k;
    return table;
}

SignedExpansion signed_expansion(const PolyExpression& e) {
    SignedExpansion out;
    for (const auto& [m, c] : expand(e)) {
        if (c.plus > static_cast<std::uint64_t>(INT64_MAX) || c.minus > static_cast<std::uint64_t>(INT64_MAX))
            throw std::overflow_error("monomial coefficient overflow");
        const auto k = static_cast<std::int64_t>(c.plus) - static_cast<std::int64_t>(c.minus);
        if (k != 0) out[m] = k;
    }
    return out;
}

bool appears(const PolyExpression& e, const Monomial& m) {
    Monomial key = m;
    while (!key.empty() && key.back() == 0) key.pop_back();
    auto table = expand(e);
    auto it = table.find(key);
    return it != table.end() && (it->second.plus > 0 || it->second.minus > 0);
}

bool disjoint_support(const PolyExpression& e) {
    for (const auto& [m, c] : expand(e))
        if (c.plus > 0 && c.minus > 0) return false;
    return true;
}

}  // namespace eltlab
