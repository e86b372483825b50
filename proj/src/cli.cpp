#include "tdi/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdi/errors.hpp"
#include "tdi/harness.hpp"
#include "tdi/io.hpp"
#include "tdi/muntz.hpp"
#include "tdi/operators.hpp"
#include "tdi/polynomial.hpp"
#include "tdi/spaces.hpp"

namespace tdi {

namespace {

/// Unreadable input file; mapped to the usage-error exit code.
class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& message) : std::runtime_error(message) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Inline value unless prefixed with '@', which names a file.
std::string load_value(const std::string& value) {
    if (!value.empty() && value.front() == '@') return read_file(value.substr(1));
    return value;
}

/// File-typed arguments: '@path' or a plain path; content passed inline is
/// recognized by a leading '{' or an embedded newline.
std::string load_document(const std::string& value) {
    if (!value.empty() && value.front() == '@') return read_file(value.substr(1));
    std::size_t i = 0;
    while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
    if (i < value.size() && value[i] == '{') return value;
    if (value.find('\n') != std::string::npos) return value;
    return read_file(value);
}

std::string sig6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", v);
    return buffer;
}

/// Re-parses p at the joint dimension with `other_dimension`; the other
/// argument must already match the joint dimension exactly.
Polynomial reconcile(const std::string& poly_text, const Polynomial& parsed,
                     std::size_t other_dimension, const char* what) {
    const std::size_t d = std::max(parsed.dimension(), other_dimension);
    if (other_dimension != d) {
        throw std::invalid_argument(std::string(what) + " has dimension " +
                                    std::to_string(other_dimension) + " but the polynomial needs " +
                                    std::to_string(d));
    }
    if (parsed.dimension() == d) return parsed;
    return parse_polynomial(poly_text, d);
}

struct OpArgs {
    std::string apply;
    std::string poly;
    std::string y;
    std::string alpha;
    std::string op;
    std::string mode;
};

int run_op(const OpArgs& args, std::ostream& out, std::ostream& err) {
    const std::string poly_text = load_value(args.poly);
    Polynomial p = parse_polynomial(poly_text);

    Polynomial result(p.dimension());
    if (args.apply == "translate" || args.apply == "dilate") {
        if (args.y.empty()) {
            err << "error: --y is required for --apply " << args.apply << "\n";
            return 2;
        }
        const Point y = parse_point_text(load_value(args.y));
        p = reconcile(poly_text, p, y.dimension(), "--y");
        result = args.apply == "translate" ? translate(p, y) : dilate(p, y);
    } else if (args.apply == "partial" || args.apply == "delta") {
        if (args.alpha.empty()) {
            err << "error: --alpha is required for --apply " << args.apply << "\n";
            return 2;
        }
        const MultiIndex alpha = parse_multiindex_text(load_value(args.alpha));
        p = reconcile(poly_text, p, alpha.dimension(), "--alpha");
        result = args.apply == "partial" ? partial(p, alpha) : difference(p, alpha);
    } else {
        if (args.op.empty() || args.mode.empty()) {
            err << "error: --operator and --mode are required for --apply polyop\n";
            return 2;
        }
        const std::string op_text = load_value(args.op);
        Polynomial op = parse_polynomial(op_text, p.dimension());
        p = reconcile(poly_text, p, op.dimension(), "--operator");
        const OperatorMode mode =
            args.mode == "d" ? OperatorMode::derivative : OperatorMode::difference;
        result = apply_operator(op, p, mode);
    }
    out << format(result) << "\n";
    return 0;
}

int run_orbit(const std::string& kind, const std::string& poly, std::ostream& out) {
    const Polynomial p = parse_polynomial(load_value(poly));
    if (kind == "tausigma") {
        out << format_lowerset(tausigma_orbit(p)) << "\n";
        return 0;
    }
    const PolySpace space = kind == "tau" ? tau_orbit(p) : sigma_orbit(p);
    for (const Polynomial& row : space.basis()) out << format(row) << "\n";
    return 0;
}

int run_member(const std::string& poly, const std::string& omega_text, std::ostream& out) {
    const LowerSet omega = parse_lowerset(load_value(omega_text));
    const std::string poly_value = load_value(poly);
    const Polynomial p = parse_polynomial(poly_value, omega.dimension());
    if (p.dimension() != omega.dimension()) {
        throw std::invalid_argument("polynomial dimension " + std::to_string(p.dimension()) +
                                    " exceeds the staircase dimension " +
                                    std::to_string(omega.dimension()));
    }
    const MembershipResult result = lowerset_member(p, omega);
    if (result.member) {
        out << "true\n";
        return 0;
    }
    out << "false\n";
    out << "witness: " << to_string(*result.witness) << "\n";
    return 1;
}

int run_closure(const std::string& scenario_arg, std::ostream& out) {
    const Scenario scenario = parse_scenario(load_document(scenario_arg));
    const Verdict verdict = check_closure(scenario.omega, scenario.sequence, scenario.limit,
                                          scenario.grid, scenario.tolerance);
    out << verdict_to_json(verdict).dump() << "\n";
    return verdict.member ? 0 : 1;
}

int run_invariance(const std::string& space_arg, const std::string& kind, std::ostream& out) {
    const std::string document = load_document(space_arg);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream stream(document);
    while (std::getline(stream, line)) {
        const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) lines.push_back(line);
    }
    std::size_t d = 1;
    for (const std::string& text : lines) d = std::max(d, parse_polynomial(text).dimension());
    std::vector<Polynomial> rows;
    rows.reserve(lines.size());
    for (const std::string& text : lines) rows.push_back(parse_polynomial(text, d));
    const PolySpace space = span_basis(rows, d);

    bool invariant = true;
    if (kind == "translation" || kind == "tdi") invariant = invariant && is_translation_invariant(space);
    if (kind == "dilation" || kind == "tdi") invariant = invariant && is_dilation_invariant(space);
    out << (invariant ? "true" : "false") << "\n";
    return invariant ? 0 : 1;
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    int trials = 8;
    int dimension = 0;
    int degree_bound = 3;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    SuiteConfig cfg;
    cfg.seed = args.seed;
    cfg.count = args.trials;
    cfg.fixed_dimension = args.dimension;
    cfg.degree_bound = args.degree_bound;

    using SuiteFn = SuiteReport (*)(const SuiteConfig&);
    const std::vector<std::pair<std::string, SuiteFn>> all = {
        {"lemma2", suite_translation_oracle},
        {"lemma3", suite_dilation_oracle},
        {"corollary6", suite_monomial_closure_oracle},
        {"taylor", suite_taylor_identity},
        {"delta", suite_difference_calculus},
    };

    int total_pass = 0;
    int total_fail = 0;
    for (const auto& [name, fn] : all) {
        if (args.suite != "all" && args.suite != name) continue;
        const SuiteReport report = fn(cfg);
        out << name << ": pass " << report.pass << " fail " << report.fail << "\n";
        for (const std::string& note : report.notes) err << name << ": " << note << "\n";
        total_pass += report.pass;
        total_fail += report.fail;
    }
    out << "total: pass " << total_pass << " fail " << total_fail << "\n";
    return total_fail == 0 ? 0 : 1;
}

int run_muntz(unsigned target, const std::vector<unsigned>& bounds, std::size_t grid,
              std::ostream& out) {
    const std::vector<FitReport> reports = run_demo(target, bounds, grid);
    out << "bound | #exponents | sum_sq_residual | sup_grid_error\n";
    for (const FitReport& report : reports) {
        out << report.exponent_bound << " | " << report.exponents.size() << " | "
            << sig6(report.sum_sq_residual) << " | " << sig6(report.sup_grid_error) << "\n";
    }
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact operator calculus on multivariate polynomials"};
    app.require_subcommand(1);

    OpArgs op_args;
    CLI::App* op = app.add_subcommand("op", "Apply an operator and print the result");
    op->add_option("--apply", op_args.apply, "Operator kind")
        ->required()
        ->check(CLI::IsMember({"translate", "dilate", "partial", "delta", "polyop"}));
    op->add_option("-p,--poly", op_args.poly, "Polynomial (inline or @file)")->required();
    op->add_option("--y", op_args.y, "Translation/dilation point, e.g. \"1,-1/2\"");
    op->add_option("--alpha", op_args.alpha, "Multi-index, e.g. \"2,1\"");
    op->add_option("--operator", op_args.op, "Operator polynomial for polyop");
    op->add_option("--mode", op_args.mode, "polyop mode: d (derivative) or diff (difference)")
        ->check(CLI::IsMember({"d", "diff"}));

    std::string orbit_kind;
    std::string orbit_poly;
    CLI::App* orbit = app.add_subcommand("orbit", "Print the smallest invariant space containing p");
    orbit->add_option("--kind", orbit_kind, "Invariance kind")
        ->required()
        ->check(CLI::IsMember({"tau", "sigma", "tausigma"}));
    orbit->add_option("-p,--poly", orbit_poly, "Polynomial (inline or @file)")->required();

    std::string member_poly;
    std::string member_omega;
    CLI::App* member = app.add_subcommand("member", "Test support containment in a staircase");
    member->add_option("-p,--poly", member_poly, "Polynomial (inline or @file)")->required();
    member->add_option("--omega", member_omega, "Staircase (inline JSON or @file)")->required();

    std::string closure_scenario;
    CLI::App* closure = app.add_subcommand("closure", "Check a pointwise-limit scenario");
    closure->add_option("--scenario", closure_scenario, "Scenario file or inline JSON")->required();

    std::string invariance_space;
    std::string invariance_kind;
    CLI::App* invariance = app.add_subcommand("invariance", "Test invariance of a spanned space");
    invariance->add_option("--space", invariance_space, "Basis file, one polynomial per line")
        ->required();
    invariance->add_option("--kind", invariance_kind, "Invariance kind")
        ->required()
        ->check(CLI::IsMember({"translation", "dilation", "tdi"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the oracle equivalence suites");
    verify->add_option("--suite", verify_args.suite, "Suite selector")
        ->check(CLI::IsMember({"lemma2", "lemma3", "corollary6", "taylor", "delta", "all"}));
    verify->add_option("--seed", verify_args.seed, "Base seed");
    verify->add_option("--trials", verify_args.trials, "Random cases per suite")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--d", verify_args.dimension, "Ambient dimension; 0 cycles 1,2,3")
        ->check(CLI::Range(0, 3));
    verify->add_option("--deg", verify_args.degree_bound, "Degree bound for random polynomials")
        ->check(CLI::Range(0, 8));

    unsigned muntz_target = 8;
    std::vector<unsigned> muntz_bounds = {10, 30, 100};
    std::size_t muntz_grid = 512;
    CLI::App* muntz = app.add_subcommand("muntz", "Least-squares demo over lacunary exponents");
    muntz->add_option("--target", muntz_target, "Target exponent M");
    muntz->add_option("--bounds", muntz_bounds, "Exponent bounds, e.g. 10,30,100")->delimiter(',');
    muntz->add_option("--grid", muntz_grid, "Grid size over [0,1]")->check(CLI::Range(2, 1000000));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tdi");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (op->parsed()) return run_op(op_args, out, err);
        if (orbit->parsed()) return run_orbit(orbit_kind, orbit_poly, out);
        if (member->parsed()) return run_member(member_poly, member_omega, out);
        if (closure->parsed()) return run_closure(closure_scenario, out);
        if (invariance->parsed()) return run_invariance(invariance_space, invariance_kind, out);
        if (verify->parsed()) return run_verify(verify_args, out, err);
        if (muntz->parsed()) return run_muntz(muntz_target, muntz_bounds, muntz_grid, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace tdi
