#include "eltlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "eltlab/charpoly.hpp"
#include "eltlab/io.hpp"
#include "eltlab/puiseux.hpp"
#include "eltlab/transfer.hpp"
#include "eltlab/tropical.hpp"

namespace eltlab::cli {

namespace {

struct Config {
    std::string command;
    std::string input;
    bool inline_input = false;
    bool machine = false;
    std::string layer_ring = "Q";
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    unsigned bound = 0;
    std::string value;   // eig-verify
    std::string vector;  // eig-verify
};

/// Writes `name=value` in machine mode, `value` otherwise.
class Printer {
public:
    Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

    void field(const std::string& name, const std::string& value) const {
        if (machine_) out_ << name << '=';
        out_ << value << '\n';
    }
    /// Human mode only: `label: value`.
    void labeled(const std::string& name, const std::string& value) const {
        if (machine_)
            out_ << name << '=' << value << '\n';
        else
            out_ << name << ": " << value << '\n';
    }
    template <LayerRing L>
    void matrix(const std::string& name, const BasicMatrix<L>& m) const {
        if (!machine_) {
            out_ << format_matrix(m);
            return;
        }
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out_ << name << '(' << i + 1 << ',' << j + 1 << ")=" << m(i, j).to_string() << '\n';
    }
    bool machine() const { return machine_; }
    std::ostream& raw() const { return out_; }

private:
    std::ostream& out_;
    bool machine_;
};

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string input_text(const Config& cfg) {
    if (cfg.inline_input) return cfg.input;
    try {
        return read_file(cfg.input);
    } catch (const Error& e) {
        throw UsageFailure(e.what());
    }
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + x.to_string();
    return out;
}

std::string interval_text(const Interval& iv) {
    return "(" + (iv.lo ? iv.lo->to_string() : std::string("-inf")) + ", " +
           (iv.hi ? iv.hi->to_string() : std::string("+inf")) + ")";
}

template <LayerRing L>
void print_roots(const Printer& p, const RootDescription<L>& r) {
    for (const auto& c : r.corners) {
        std::string layers;
        if (c.layers.every_layer) {
            layers = "any";
        } else {
            for (const auto& l : c.layers.values) layers += (layers.empty() ? "" : " ") + to_string(l);
            if (layers.empty()) layers = "none";
        }
        p.labeled("corner " + c.tangible.to_string(), layers);
    }
    for (const auto& iv : r.intervals) p.labeled("interval " + interval_text(iv.range), to_string(iv.kind));
    p.labeled("neg-inf", r.neg_inf_is_root ? "root" : "not-root");
}

template <LayerRing L>
int run_matrix_command(const Config& cfg, const Printer& p) {
    using M = BasicMatrix<L>;
    using S = BasicScalar<L>;
    const std::string& cmd = cfg.command;
    if (cmd == "roots") {
        auto poly = BasicPolynomial<L>::parse(input_text(cfg));
        print_roots(p, elt_roots(poly));
        return Ok;
    }
    const M a = parse_matrix<L>(input_text(cfg));
    if (cmd == "det") {
        p.field("det", det(a).to_string());
    } else if (cmd == "adj") {
        p.matrix("adj", adjoint(a));
    } else if (cmd == "qinv") {
        auto q = quasi_inverse(a);
        p.matrix("qinv", q.inverse);
        p.labeled("left", q.left.is_quasi_identity ? "quasi-identity" : "not-quasi-identity");
        p.labeled("right", q.right.is_quasi_identity ? "quasi-identity" : "not-quasi-identity");
    } else if (cmd == "charpoly") {
        p.field("charpoly", charpoly(a).to_string());
    } else if (cmd == "trace") {
        p.field("trace", trace(a).to_string());
    } else if (cmd == "etr") {
        auto r = essential_trace(a);
        if (p.machine()) {
            p.field("trace", r.trace.to_string());
            p.field("trace-monomial", to_string(r.trace_monomial_status));
            p.field("mu", r.mu ? std::to_string(*r.mu) : "none");
            p.field("dominant-coefficient", r.mu ? r.dominant_coefficient.to_string() : "none");
        }
        p.field("etr", r.etr.to_string());
    } else if (cmd == "eig-verify") {
        S x = S::parse(cfg.value);
        auto v = parse_matrix<L>(cfg.vector);
        if (v.rows() != 1) throw ParseError(0, "vector must be a single comma-separated row");
        p.field("eigen", to_string(eigen_verify(a, x, v.entries())));
    } else if (cmd == "nilpotent") {
        auto r = is_nilpotent(a, cfg.bound);
        p.labeled("nilpotent", r.nilpotent ? "true" : "false");
        if (r.witness) p.labeled("index", std::to_string(*r.witness));
    } else if (cmd == "cycles") {
        auto cycles = simple_cycles(a);
        for (const auto& c : cycles) {
            std::string vs;
            for (auto v : c.vertices) vs += (vs.empty() ? "" : " ") + std::to_string(v + 1);
            p.labeled("cycle (" + vs + ")", c.weight.to_string() + " mean " + c.mean.to_string());
        }
        auto best = max_cycle_mean_bruteforce(a);
        p.labeled("max-mean", best ? best->to_string() : "none");
        auto k = karp_max_mean_cycle(project(a));
        p.labeled("karp", k ? k->to_string() : "none");
    } else {
        throw Error(Errc::InvalidArgument, "unknown command '" + cmd + "'");
    }
    return Ok;
}

bool looks_like_elt(std::string_view text) {
    return text.find("^[") != std::string_view::npos || text.find('{') != std::string_view::npos;
}

template <LayerRing L>
int run_hungarian(const Config& cfg, const Printer& p) {
    const std::string text = input_text(cfg);
    TropicalMatrix t;
    std::optional<BasicMatrix<L>> elt;
    if (looks_like_elt(text)) {
        elt = parse_matrix<L>(text);
        t = project(*elt);
    } else {
        t = TropicalMatrix::parse(text);
    }
    auto h = hungarian_scaling(t);
    std::vector<Rational> sigma;
    for (auto j : h.sigma) sigma.emplace_back(static_cast<std::int64_t>(j + 1));
    p.labeled("sigma", join_rationals(sigma));
    p.labeled("alpha", join_rationals(h.alpha));
    p.labeled("row-dual", join_rationals(h.row_dual));
    p.labeled("col-dual", join_rationals(h.col_dual));
    p.labeled("weight", h.weight.to_string());
    p.labeled("duals-feasible", duals_feasible(t, h) ? "true" : "false");
    p.labeled("critical", is_critical(scale_rows(t, h.alpha)).critical ? "true" : "false");
    if (elt) {
        if (!p.machine()) p.raw() << "D:\n";
        p.matrix("D", critical_scaling_elt(*elt));
    }
    return Ok;
}

int run_verify(const Config& cfg, const Printer& p) {
    std::vector<Identity> ids;
    if (cfg.input == "all") {
        ids = canned_identities();
    } else if (cfg.input == "mutation-control") {
        ids = {mutation_control(2), mutation_control(3)};
    } else {
        auto names = identity_names();
        if (std::find(names.begin(), names.end(), cfg.input) == names.end())
            throw Error(Errc::InvalidArgument, "unknown identity '" + cfg.input + "'");
        ids = {make_identity(cfg.input, 2), make_identity(cfg.input, 3)};
    }
    bool ok = true;
    for (const auto& id : ids) {
        auto r = check_identity(id, cfg.trials, cfg.seed);
        p.raw() << r.record() << '\n';
        if (!r.passed()) {
            ok = false;
            if (!p.machine())
                for (const auto& f : r.failures)
                    p.raw() << "  trial " << f.trial << " [" << f.stage << "] " << f.component << " " << f.detail
                            << '\n';
        }
    }
    return ok ? Ok : VerificationFailure;
}

int dispatch(const Config& cfg, std::ostream& out) {
    Printer p(out, cfg.machine);
    if (cfg.command == "verify") return run_verify(cfg, p);
    if (cfg.command == "eltrop") {
        p.field("eltrop", eltrop(PuiseuxSeries::parse(input_text(cfg))).to_string());
        return Ok;
    }
    if (cfg.layer_ring == "Z") {
        if (cfg.command == "hungarian") return run_hungarian<Integer>(cfg, p);
        return run_matrix_command<Integer>(cfg, p);
    }
    if (cfg.command == "hungarian") return run_hungarian<Rational>(cfg, p);
    return run_matrix_command<Rational>(cfg, p);
}

std::optional<std::uint64_t> env_seed(std::ostream& err) {
    const char* s = std::getenv("ELTLAB_SEED");
    if (!s || !*s) return std::nullopt;
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used);
        if (used == std::string(s).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    err << "warning: ignoring malformed ELTLAB_SEED '" << s << "'\n";
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact ELT-algebra matrix computations and transfer-principle checks", "eltlab"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_flag("--machine", cfg.machine, "Print one `name=value` line per field");
    app.add_flag("--inline", cfg.inline_input, "Treat the input argument as the text itself, not a path");
    app.add_option("--layer-ring", cfg.layer_ring, "Layer ring for matrix and polynomial input")
        ->check(CLI::IsMember({"Q", "Z"}));
    app.add_option("--trials", cfg.trials, "Random trials per identity")->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", cfg.seed, "Base seed; trial k uses seed + k (default: ELTLAB_SEED or 42)")
                         ->check(CLI::PositiveNumber);
    app.add_option("--bound", cfg.bound, "Largest power tried by nilpotent (default n^2)");

    struct Sub {
        const char* name;
        const char* help;
        const char* what;
    };
    const Sub subs[] = {
        {"det", "Determinant", "matrix file"},
        {"adj", "Adjoint matrix", "matrix file"},
        {"qinv", "Quasi-inverse det(A)^-1 adj(A) with its quasi-identity checks", "matrix file"},
        {"charpoly", "Characteristic polynomial det(L I + (-)A)", "matrix file"},
        {"roots", "ELT roots of a polynomial", "polynomial file"},
        {"eig-verify", "Classify a candidate eigenpair as Strict, ELTOnly or No", "matrix file"},
        {"trace", "Trace", "matrix file"},
        {"etr", "Essential trace", "matrix file"},
        {"nilpotent", "Least power with every entry of layer zero", "matrix file"},
        {"cycles", "Simple cycles and the maximum cycle mean", "matrix file"},
        {"hungarian", "Critical row scaling by the Hungarian method", "matrix file (ELT or plain rational)"},
        {"eltrop", "ELTrop of a Puiseux series", "series file"},
        {"verify", "Run transfer-principle identity suites", "identity name, `all` or `mutation-control`"},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("input", cfg.input, s.what)->required();
        if (std::string(s.name) == "eig-verify") {
            sub->add_option("--value", cfg.value, "Candidate eigenvalue, scalar format")->required();
            sub->add_option("--vector", cfg.vector, "Candidate eigenvector, comma-separated scalars")->required();
        }
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
    }

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return UsageError;
    }
    if (seed_opt->count() == 0)
        if (auto s = env_seed(err)) cfg.seed = *s;

    try {
        return dispatch(cfg, out);
    } catch (const UsageFailure& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return DomainError;
    } catch (const std::overflow_error& e) {
        err << "error: arithmetic overflow: " << e.what() << '\n';
        return DomainError;
    }
}

}  // namespace eltlab::cli
