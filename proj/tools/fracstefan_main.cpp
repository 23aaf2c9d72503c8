// Command-line front end: reads a problem configuration, dispatches one of the
// solve/sweep/field/roundtrip/limit commands, and writes machine-readable
// reports (JSON) or plot-ready grids (CSV).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracstefan/fracstefan.hpp"
#include "fracstefan/report_io.hpp"

namespace {

using namespace fracstefan;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

CaseId resolve_case(const std::optional<int>& from_flag, const ParsedConfig& cfg) {
    if (from_flag) return CaseId(*from_flag);
    if (cfg.case_id) return CaseId(*cfg.case_id);
    throw SchemaError("no case selected: pass --case or put \"case\" in the config");
}

// alpha = 1 carries no memory: route to the classical solver and express its
// answer in the report shape of the fractional one (xi = 2 xi_star).
SolveReport solve_routed(CaseId cs, const ProblemData& data) {
    if (data.alpha < 1.0) return solve_case(cs, data);
    if (data.mu != 1.0 || data.nu != 1.0)
        throw SchemaError("alpha = 1 requires mu = 1 and nu = 1");
    const ClassicalSolution limit = solve_classical(cs, data);
    SolveReport report(cs);
    report.xi = 2.0 * limit.xi_star;
    report.coefficients = limit.coefficients;
    report.lambda = std::sqrt(limit.coefficients.k /
                              (limit.coefficients.rho * limit.coefficients.c));
    auto [r1, r2] = classical_system_residuals(limit, data);
    report.residual_eq1 = r1;
    report.residual_eq2 = r2;
    return report;
}

struct CommonOpts {
    std::string input, output, format = "json";
    std::optional<int> case_id;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool input_required) {
    auto* in = cmd->add_option("--input", opts.input, "problem configuration (JSON)");
    if (input_required) in->required();
    cmd->add_option("--output", opts.output, "output path (default: stdout)");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option_function<int>(
           "--case", [&opts](int v) { opts.case_id = v; },
           "determination case 1..6 (overrides the config)")
        ->check(CLI::Range(1, 6));
}

std::vector<double> parse_grid(const std::string& csv, const char* what) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw SchemaError(std::string("bad value in ") + what + ": " + item);
        }
    }
    if (grid.empty()) throw SchemaError(std::string(what) + " is empty");
    return grid;
}

void require_json_format(const CommonOpts& opts, const char* command) {
    if (opts.format != "json")
        throw SchemaError(std::string(command) + " emits a JSON report; --format csv is not available");
}

int run_solve(const CommonOpts& opts) {
    require_json_format(opts, "solve");
    const ParsedConfig cfg = parse_problem_config(read_file(opts.input));
    const CaseId cs = resolve_case(opts.case_id, cfg);
    const SolveReport report = solve_routed(cs, cfg.data);
    write_output(opts.output, solve_report_json(report));
    return 0;
}

int run_sweep(const CommonOpts& opts, const std::string& alpha_grid, double tol) {
    const ParsedConfig cfg = parse_problem_config(read_file(opts.input));
    const CaseId cs = resolve_case(opts.case_id, cfg);
    const std::vector<double> alphas = parse_grid(alpha_grid, "--alpha-grid");
    for (double a : alphas)
        if (!(a > 0.0 && a < 1.0))
            throw SchemaError(
                "sweep compares against the alpha -> 1 limit; --alpha-grid values "
                "must lie in (0, 1)");
    auto family = [&](double alpha) {
        ProblemData data = cfg.data;
        data.alpha = alpha;
        return data;
    };
    const auto rows = convergence_probe(cs, family, alphas, tol);
    write_output(opts.output, opts.format == "csv" ? convergence_table_csv(cs, rows)
                                                   : convergence_table_json(cs, rows));
    return 0;
}

int run_field(const CommonOpts& opts, const std::string& x_grid_csv,
              const std::string& t_grid_csv) {
    const ParsedConfig cfg = parse_problem_config(read_file(opts.input));
    const CaseId cs = resolve_case(opts.case_id, cfg);

    FieldSpec spec;
    spec.t_grid = t_grid_csv.empty() ? std::vector<double>{0.5, 1.0, 2.0}
                                     : parse_grid(t_grid_csv, "--t-grid");
    double s_min; // front position at the earliest requested time
    if (cfg.data.alpha < 1.0) {
        const SolveReport report = solve_case(cs, cfg.data);
        const SimilaritySolution sol = make_similarity_solution(cfg.data, report);
        s_min = moving_boundary(spec.t_grid.front(), sol.sigma, sol.alpha);
        spec.solution = sol;
    } else {
        if (cfg.data.mu != 1.0 || cfg.data.nu != 1.0)
            throw SchemaError("alpha = 1 requires mu = 1 and nu = 1");
        const ClassicalSolution limit = solve_classical(cs, cfg.data);
        const ClassicalField fld = make_classical_field(cfg.data, limit);
        s_min = moving_boundary(spec.t_grid.front(), fld.sigma, 1.0);
        spec.solution = fld;
    }
    if (x_grid_csv.empty()) {
        for (int i = 1; i <= 24; ++i) spec.x_grid.push_back(s_min * i / 25.0);
    } else {
        spec.x_grid = parse_grid(x_grid_csv, "--x-grid");
    }
    const auto samples = evaluate_field(spec);
    write_output(opts.output, opts.format == "csv" ? field_csv(samples)
                                                   : field_json(samples));
    return 0;
}

int run_roundtrip(const CommonOpts& opts, std::optional<double> alpha_flag, double tol) {
    require_json_format(opts, "roundtrip");
    Coefficients truth{1.0, 1.0, 1.0, 1.0};
    double alpha = alpha_flag.value_or(0.5);
    double mu = 1.0, nu = 1.0, T_m = 0.0, T_0 = 1.0;
    if (!opts.input.empty()) {
        const ParsedConfig cfg = parse_problem_config(read_file(opts.input));
        for (const char* name : {"k", "rho", "c", "l"})
            if (!cfg.data.known.by_name(name))
                throw SchemaError(
                    "roundtrip config must list all four coefficients under 'known'");
        truth = {*cfg.data.known.k, *cfg.data.known.rho, *cfg.data.known.c,
                 *cfg.data.known.l};
        if (!alpha_flag) alpha = cfg.data.alpha;
        mu = cfg.data.mu;
        nu = cfg.data.nu;
        T_m = cfg.data.T_m;
        T_0 = cfg.data.T_0;
    }
    if (!(alpha > 0.0 && alpha < 1.0))
        throw SchemaError("roundtrip needs alpha in (0, 1)");
    const RoundTripResult result = roundtrip_all_cases(truth, alpha, mu, nu, T_m, T_0);
    write_output(opts.output, roundtrip_json(result, tol));
    return result.max_rel_err <= tol ? 0 : 4;
}

int run_limit(const CommonOpts& opts, const std::string& alpha_grid, double tol) {
    require_json_format(opts, "limit");
    const ParsedConfig cfg = parse_problem_config(read_file(opts.input));
    const CaseId cs = resolve_case(opts.case_id, cfg);
    const ClassicalSolution limit = solve_classical(cs, cfg.data);
    std::vector<ConvergenceRow> rows;
    if (!alpha_grid.empty()) {
        const std::vector<double> alphas = parse_grid(alpha_grid, "--alpha-grid");
        for (double a : alphas)
            if (!(a > 0.0 && a < 1.0))
                throw SchemaError("--alpha-grid values must lie in (0, 1) for limit");
        auto family = [&](double alpha) {
            ProblemData data = cfg.data;
            data.alpha = alpha;
            return data;
        };
        rows = convergence_probe(cs, family, alphas, tol);
    }
    write_output(opts.output, classical_solution_json(limit, cs, rows));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermal-coefficient determination from a subdiffusive melting front"};
    app.require_subcommand(1);

    CommonOpts solve_opts, sweep_opts, field_opts, round_opts, limit_opts;
    std::string alpha_grid, x_grid, t_grid, limit_grid;
    double sweep_tol = 1e-2, round_tol = 1e-6, limit_tol = 1e-2;
    std::optional<double> round_alpha;

    auto* solve = app.add_subcommand("solve", "solve one determination case");
    add_common(solve, solve_opts, true);

    auto* sweep = app.add_subcommand("sweep", "tabulate the approach to the alpha -> 1 limit");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--alpha-grid", alpha_grid, "comma-separated alpha values")->required();
    sweep->add_option("--tol", sweep_tol, "final-row deviation tolerance");

    auto* field = app.add_subcommand("field", "evaluate the temperature field on a grid");
    field_opts.format = "csv"; // plot-ready by default
    add_common(field, field_opts, true);
    field->add_option("--x-grid", x_grid, "comma-separated x values (default: inside the front)");
    field->add_option("--t-grid", t_grid, "comma-separated t values (default: 0.5,1,2)");

    auto* roundtrip = app.add_subcommand(
        "roundtrip", "self-consistency check: hide and recover each coefficient pair");
    add_common(roundtrip, round_opts, false);
    roundtrip->add_option_function<double>(
        "--alpha", [&](double v) { round_alpha = v; }, "memory order (default 0.5)");
    roundtrip->add_option("--tol", round_tol, "pass threshold on recovery error");

    auto* limit = app.add_subcommand("limit", "classical (alpha = 1) solution and deviations");
    add_common(limit, limit_opts, true);
    limit->add_option("--alpha-grid", limit_grid, "alphas to compare against the limit");
    limit->add_option("--tol", limit_tol, "final-row deviation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (solve->parsed()) return run_solve(solve_opts);
        if (sweep->parsed()) return run_sweep(sweep_opts, alpha_grid, sweep_tol);
        if (field->parsed()) return run_field(field_opts, x_grid, t_grid);
        if (roundtrip->parsed()) return run_roundtrip(round_opts, round_alpha, round_tol);
        if (limit->parsed()) return run_limit(limit_opts, limit_grid, limit_tol);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingCoefficientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleError& e) {
        std::cerr << "error: inadmissible data, " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
