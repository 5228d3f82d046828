#include "eltlab/transfer.hpp"

#include "eltlab/permutation.hpp"
#include "eltlab/random.hpp"

namespace eltlab {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::Nabla: return "nabla";
        case Relation::Surpass: return "surpass";
        case Relation::Equal: return "equal";
    }
    return "?";
}

std::string TransferReport::record() const {
    return std::string(passed() ? "PASS " : "FAIL ") + name + " " + std::to_string(record_seed());
}

namespace {

constexpr std::size_t kKeptFailures = 5;

void add_failure(TransferReport& r, TransferFailure f) {
    ++r.failure_count;
    if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(f));
}

std::string describe_assignment(const std::vector<Scalar>& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ", ";
        out += "x" + std::to_string(i + 1) + "=" + x[i].to_string();
    }
    return out;
}

bool tropical_hypothesis(Relation r, const MaxPlus& lhs, const MaxPlus& rhs) {
    switch (r) {
        case Relation::Nabla: return true;
        case Relation::Surpass: return lhs >= rhs;
        case Relation::Equal: return lhs == rhs;
    }
    return false;
}

bool elt_relation(Relation r, const Scalar& lhs, const Scalar& rhs) {
    switch (r) {
        case Relation::Nabla: return nabla(lhs, rhs);
        case Relation::Surpass: return surpasses(lhs, rhs);
        case Relation::Equal: return lhs == rhs;
    }
    return false;
}

}  // namespace

TransferReport check_identity(const Identity& id, std::size_t trials, std::uint64_t seed) {
    TransferReport report;
    report.name = id.name;
    report.relation = id.relation;
    report.trials = trials;
    report.seed = seed;

    std::size_t vars = 0;
    for (const auto& c : id.components) {
        vars = std::max({vars, c.lhs.variable_count(), c.rhs.variable_count()});
        auto residue = signed_expansion(c.lhs - c.rhs);
        if (!residue.empty()) {
            report.ring_identity = false;
            add_failure(report, {0, seed, "ring", c.label,
                                 "lhs - rhs leaves " + std::to_string(residue.size()) + " monomial(s), e.g. " +
                                     std::to_string(residue.begin()->second) + "*" +
                                     monomial_to_string(residue.begin()->first)});
        }
        if (id.strong && !disjoint_support(c.rhs)) {
            report.disjoint_support = false;
            add_failure(report, {0, seed, "strong-form", c.label, "rhs has a monomial on both sides"});
        }
    }

    for (std::size_t k = 0; k < trials; ++k) {
        const std::uint64_t trial_seed = seed + k;
        Rng rng(trial_seed);
        std::vector<Scalar> elt(vars);
        std::vector<MaxPlus> mp(vars);
        for (std::size_t i = 0; i < vars; ++i) {
            elt[i] = random_scalar<Rational>(rng);
            mp[i] = elt[i].tangible();
        }
        for (const auto& c : id.components) {
            const Scalar el = evaluate<EltModel<Rational>>(c.lhs, std::span<const Scalar>(elt));
            const Scalar er = evaluate<EltModel<Rational>>(c.rhs, std::span<const Scalar>(elt));
            const MaxPlus ml = evaluate<MaxPlusModel>(c.lhs, std::span<const MaxPlus>(mp));
            const MaxPlus mr = evaluate<MaxPlusModel>(c.rhs, std::span<const MaxPlus>(mp));
            auto fail = [&](const char* stage, std::string what) {
                add_failure(report, {k, trial_seed, stage, c.label, what + "; " + describe_assignment(elt)});
            };
            if (el.tangible() != ml || er.tangible() != mr)
                fail("consistency", "t(ELT) differs from max-plus value");
            if (!tropical_hypothesis(id.relation, ml, mr))
                fail("max-plus", "lhs=" + ml.to_string() + " rhs=" + mr.to_string());
            if (!elt_relation(id.relation, el, er))
                fail("elt", "lhs=" + el.to_string() + " rhs=" + er.to_string());
        }
    }
    return report;
}

namespace {

Identity single(const char* name, Relation r, bool strong, const PolyExpression& p, const PolyExpression& q) {
    return {name, r, strong, {{"", p, q}}};
}

}  // namespace

TransferReport check_nabla(const PolyExpression& p, const PolyExpression& q, std::size_t trials, std::uint64_t seed) {
    return check_identity(single("nabla", Relation::Nabla, false, p, q), trials, seed);
}

TransferReport check_surpass(const PolyExpression& p, const PolyExpression& q, std::size_t trials, std::uint64_t seed,
                             bool strong) {
    return check_identity(single("surpass", Relation::Surpass, strong, p, q), trials, seed);
}

TransferReport check_equal(const PolyExpression& p, const PolyExpression& q, std::size_t trials, std::uint64_t seed) {
    return check_identity(single("equal", Relation::Equal, false, p, q), trials, seed);
}

ExprMatrix symbolic_matrix(std::size_t n, std::size_t offset) {
    ExprMatrix m(n, std::vector<PolyExpression>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = PolyExpression::var(offset + i * n + j);
    return m;
}

ExprMatrix expr_identity(std::size_t n) {
    ExprMatrix m(n, std::vector<PolyExpression>(n, PolyExpression::constant(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = PolyExpression::constant(1);
    return m;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    const std::size_t n = a.size();
    ExprMatrix m(n, std::vector<PolyExpression>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyExpression s = a[i][0] * b[0][j];
            for (std::size_t k = 1; k < n; ++k) s = s + a[i][k] * b[k][j];
            m[i][j] = s;
        }
    return m;
}

ExprMatrix operator*(const PolyExpression& c, const ExprMatrix& a) {
    ExprMatrix m = a;
    for (auto& row : m)
        for (auto& x : row) x = c * x;
    return m;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
    ExprMatrix m = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j] + b[i][j];
    return m;
}

PolyExpression det_expression(const ExprMatrix& a, std::optional<std::size_t> flip_term) {
    const std::size_t n = a.size();
    std::vector<ExprPtr> plus, minus;
    std::size_t term = 0;
    for_each_permutation(n, [&](std::span<const std::size_t> p, int sign) {
        PolyExpression prod = PolyExpression::constant(1);
        for (std::size_t i = 0; i < n; ++i) prod = i == 0 ? a[0][p[0]] : prod * a[i][p[i]];
        if (flip_term && *flip_term == term) sign = -sign;
        ++term;
        if (sign < 0) prod = -prod;
        plus.push_back(prod.plus());
        if (prod.has_minus()) minus.push_back(prod.minus());
    });
    return PolyExpression(expr_add(std::move(plus)), minus.empty() ? nullptr : expr_add(std::move(minus)));
}

namespace {

ExprMatrix principal(const ExprMatrix& a, std::span<const std::size_t> s) {
    ExprMatrix m(s.size(), std::vector<PolyExpression>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = a[s[i]][s[j]];
    return m;
}

ExprMatrix strike(const ExprMatrix& a, std::size_t r, std::size_t c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != r) rows.push_back(i);
        if (i != c) cols.push_back(i);
    }
    ExprMatrix m(rows.size(), std::vector<PolyExpression>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = a[rows[i]][cols[j]];
    return m;
}

}  // namespace

ExprMatrix adjoint_expression(const ExprMatrix& a) {
    const std::size_t n = a.size();
    if (n == 1) return expr_identity(1);
    ExprMatrix m(n, std::vector<PolyExpression>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyExpression d = det_expression(strike(a, j, i));
            m[i][j] = (i + j) % 2 ? -d : d;
        }
    return m;
}

ExprMatrix cayley_hamilton_expression(const ExprMatrix& a) {
    const std::size_t n = a.size();
    ExprMatrix power = expr_identity(n);
    ExprMatrix total;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t m = n - k;
        PolyExpression e = PolyExpression::constant(1);
        if (m > 0) {
            std::vector<ExprPtr> plus, minus;
            for_each_subset(n, m, [&](std::span<const std::size_t> s) {
                auto d = det_expression(principal(a, s));
                plus.push_back(d.plus());
                if (d.has_minus()) minus.push_back(d.minus());
            });
            e = PolyExpression(expr_add(std::move(plus)), minus.empty() ? nullptr : expr_add(std::move(minus)));
        }
        if (m % 2) e = -e;
        ExprMatrix term = e * power;
        total = k == 0 ? term : total + term;
        power = power * a;
    }
    return total;
}

std::vector<std::string> identity_names() {
    return {"det-mult", "adj-surpass", "adj-det", "adj-square", "cayley-hamilton"};
}

namespace {

std::vector<IdentityComponent> componentwise(const ExprMatrix& lhs, const ExprMatrix& rhs) {
    std::vector<IdentityComponent> out;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < lhs.size(); ++j)
            out.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", lhs[i][j], rhs[i][j]});
    return out;
}

PolyExpression power(const PolyExpression& x, std::size_t k) {
    PolyExpression r = x;
    for (std::size_t i = 1; i < k; ++i) r = r * x;
    return r;
}

}  // namespace

Identity make_identity(const std::string& family, std::size_t n) {
    const std::string name = family + "-n" + std::to_string(n);
    const ExprMatrix a = symbolic_matrix(n);
    if (family == "det-mult") {
        const ExprMatrix b = symbolic_matrix(n, n * n);
        return {name, Relation::Surpass, true, {{"det", det_expression(a * b), det_expression(a) * det_expression(b)}}};
    }
    if (family == "adj-surpass") {
        const PolyExpression d = det_expression(a);
        return {name, Relation::Surpass, true, componentwise(a * adjoint_expression(a), d * expr_identity(n))};
    }
    if (family == "adj-det") {
        const PolyExpression d = det_expression(a);
        return {name, Relation::Equal, false, {{"det", det_expression(a * adjoint_expression(a)), power(d, n)}}};
    }
    if (family == "adj-square") {
        const ExprMatrix aa = a * adjoint_expression(a);
        return {name, Relation::Equal, false, componentwise(aa * aa, det_expression(a) * aa)};
    }
    if (family == "cayley-hamilton") {
        ExprMatrix zero(n, std::vector<PolyExpression>(n, PolyExpression::constant(0)));
        return {name, Relation::Surpass, true, componentwise(cayley_hamilton_expression(a), zero)};
    }
    throw Error(Errc::InvalidArgument, "unknown identity '" + family + "'");
}

Identity mutation_control(std::size_t n) {
    const ExprMatrix a = symbolic_matrix(n);
    const ExprMatrix b = symbolic_matrix(n, n * n);
    return {"det-mult-mutant-n" + std::to_string(n),
            Relation::Surpass,
            true,
            {{"det", det_expression(a * b, 0), det_expression(a) * det_expression(b)}}};
}

std::vector<Identity> canned_identities() {
    std::vector<Identity> out;
    for (const auto& family : identity_names())
        for (std::size_t n : {2u, 3u}) out.push_back(make_identity(family, n));
    return out;
}

}  // namespace eltlab
