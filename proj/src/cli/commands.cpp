#include "bohr/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace bohr::cli {
namespace {

constexpr double kCellTolerance = 1e-5;
constexpr double kFourDecimalTolerance = 1e-4;

struct PrintedCell {
    int m;
    int q;
    double printed;
    double tolerance;
};

const std::vector<PrintedCell>& printed_cells(int which) {
    static const std::vector<PrintedCell> table1{{1, 0, 1.0 / 3.0, kCellTolerance},
                                                 {2, 0, 0.57735, kCellTolerance},
                                                 {3, 0, 0.693361, kCellTolerance},
                                                 {5, 0, 0.802742, kCellTolerance},
                                                 {7, 0, 0.854751, kCellTolerance}};
    static const std::vector<PrintedCell> table2{{1, 1, std::sqrt(2.0) - 1.0, kCellTolerance},
                                                 {3, 3, 0.745432, kCellTolerance},
                                                 {3, 2, 0.673348, kCellTolerance},
                                                 {5, 30, 0.948565, kCellTolerance},
                                                 {10, 30, 0.958906, kCellTolerance}};
    static const std::vector<PrintedCell> table3{{1, 1, (std::sqrt(5.0) - 1.0) / 2.0, kCellTolerance},
                                                 {3, 3, 0.8518, kFourDecimalTolerance},
                                                 {3, 2, 0.826031, kCellTolerance},
                                                 {5, 30, 0.962497, kCellTolerance},
                                                 {10, 30, 0.972272, kCellTolerance}};
    switch (which) {
        case 1: return table1;
        case 2: return table2;
        case 3: return table3;
        default: throw std::invalid_argument(fmt::format("table must be 1, 2 or 3, got {}", which));
    }
}

std::optional<double> cap_for(Variant variant, const Params& params) {
    switch (variant) {
        case Variant::Majorant:
        case Variant::ValueDeriv:
        case Variant::ValueSqDeriv: return cap_radius({variant, params});
        default: return std::nullopt;
    }
}

std::optional<OutputFormat> parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    return std::nullopt;
}

}  // namespace

double parse_dilatation_K(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("K must be a decimal number or \"inf\": " + text);
    }
    if (used != text.size() || !std::isfinite(value))
        throw std::invalid_argument("K must be a decimal number or \"inf\": " + text);
    if (value < 1.0) throw std::invalid_argument("K must be >= 1: " + text);
    return value;
}

std::vector<TableRow> table_rows(int which) {
    std::vector<TableRow> rows;
    for (const auto& cell : printed_cells(which)) {
        double value = 0.0;
        if (which == 1) {
            value = cap_radius({Variant::Majorant, Params(1, cell.m, 1, 1.0)});
        } else {
            const Variant cap = which == 2 ? Variant::CapRmq : Variant::CapR2mq;
            value = solve_radius({cap, Params(1, cell.m, cell.q, 1.0)}).value;
        }
        rows.push_back({cell.m, cell.q, value, cell.printed, cell.tolerance});
    }
    return rows;
}

OutputRecord radius_record(const RadiusArgs& args) {
    const Params params(args.p, args.m, args.q, args.K);
    const RadiusProblem problem{args.variant, params};
    const auto root = solve_radius(problem, args.solver);

    OutputRecord record;
    record.variant = std::string(to_string(args.variant));
    record.p = params.p();
    record.m = params.m();
    record.q = params.q();
    record.K = params.K();
    record.radius = root.value;
    record.cap = cap_for(args.variant, params);
    record.residual = root.residual;
    record.tol = args.solver.residual_tol;
    record.scan_step = args.solver.scan_step;

    std::vector<std::string> notes;
    if (params.boundary_regime()) notes.emplace_back("boundary regime k=1");
    if (record.cap && root.value > *record.cap + kCapComparisonTolerance) notes.emplace_back("radius exceeds cap");
    for (std::size_t i = 0; i < notes.size(); ++i) record.notes += (i ? "; " : "") + notes[i];
    return record;
}

int cmd_radius(const RadiusArgs& args, std::ostream& out, std::ostream& err) {
    try {
        write_record(out, radius_record(args), args.format);
        return kExitOk;
    } catch (const NoRootInUnitInterval& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoRoot;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<TableRow> rows;
    try {
        rows = table_rows(args.which);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    bool all_pass = true;
    if (args.format == OutputFormat::Json) {
        nlohmann::json j;
        j["table"] = args.which;
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r{{"m", row.m}};
            if (args.which != 1) r["q"] = row.q;
            r["value"] = row.value;
            if (args.check) {
                const double diff = std::abs(row.value - row.printed);
                r["printed"] = row.printed;
                r["abs_diff"] = diff;
                r["tolerance"] = row.tolerance;
                r["pass"] = diff <= row.tolerance;
                all_pass = all_pass && diff <= row.tolerance;
            }
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::string> header{"m"};
        if (args.which != 1) header.emplace_back("q");
        header.emplace_back("value");
        if (args.check) header.insert(header.end(), {"printed", "abs_diff", "tolerance", "pass"});
        write_csv_row(out, header);
        for (const auto& row : rows) {
            std::vector<std::string> fields{std::to_string(row.m)};
            if (args.which != 1) fields.push_back(std::to_string(row.q));
            fields.push_back(format_number(row.value));
            if (args.check) {
                const double diff = std::abs(row.value - row.printed);
                const bool pass = diff <= row.tolerance;
                all_pass = all_pass && pass;
                fields.push_back(format_number(row.printed));
                fields.push_back(format_number(diff));
                fields.push_back(format_number(row.tolerance));
                fields.emplace_back(pass ? "true" : "false");
            }
            write_csv_row(out, fields);
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (!(args.r_min >= 0.0 && args.r_min < args.r_max && args.r_max < 1.0)) {
        err << "error: sweep requires 0 <= r-min < r-max < 1\n";
        return kExitUsage;
    }
    if (args.steps < 1) {
        err << "error: steps must be >= 1\n";
        return kExitUsage;
    }

    struct Row {
        std::string kind;
        double r;
        double value;
    };
    std::vector<Row> rows;
    try {
        const Params params(args.p, args.m, args.q, args.K);
        const RadiusProblem problem{args.variant, params};
        for (int i = 0; i <= args.steps; ++i) {
            const double r = i == args.steps
                                 ? args.r_max
                                 : args.r_min + (args.r_max - args.r_min) * i / args.steps;
            rows.push_back({"sample", r, defining_function(problem, r)});
        }
        try {
            const auto root = solve_radius(problem, args.solver);
            rows.push_back({"root", root.value, root.residual});
        } catch (const NoRootInUnitInterval&) {
            // No marker row.
        }
        if (const auto cap = cap_for(args.variant, params); cap && *cap < 1.0)
            rows.push_back({"cap", *cap, defining_function(problem, *cap)});
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (args.format == OutputFormat::Json) {
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) arr.push_back({{"kind", row.kind}, {"r", row.r}, {"value", row.value}});
        out << arr.dump(2) << '\n';
    } else {
        write_csv_row(out, std::vector<std::string>{"kind", "r", "value"});
        for (const auto& row : rows)
            write_csv_row(out, std::vector<std::string>{row.kind, format_number(row.r), format_number(row.value)});
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<VerifyCheck> checks;
    try {
        checks = run_suite(args.suite, args.settings);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    out << verify_report(args.suite, args.settings, checks).dump(2) << '\n';
    const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    return all_pass ? kExitOk : kExitCheckFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bohr-type radii for K-quasiconformal harmonic mappings", "bohr"};
    app.require_subcommand(1);

    std::string variant_text = "majorant";
    std::string K_text = "1";
    std::string format_text = "csv";
    std::string suite_text = "all";
    int p = 1, m = 1, q = 1;
    SolverOptions solver;
    TableArgs table_args;
    SweepArgs sweep_args;
    VerifySettings verify_settings;

    auto add_problem_flags = [&](CLI::App* sub) {
        sub->add_option("--variant", variant_text, "majorant|value-deriv|value-sq-deriv|refined|cap-rmq|cap-r2mq|cap-thirdroot");
        sub->add_option("--p", p, "Exponent p")->check(CLI::PositiveNumber);
        sub->add_option("--m", m, "Exponent m")->check(CLI::PositiveNumber);
        sub->add_option("--q", q, "Exponent q")->check(CLI::PositiveNumber);
        sub->add_option("--K", K_text, "Dilatation bound K >= 1 or inf");
    };
    auto add_solver_flags = [&](CLI::App* sub) {
        sub->add_option("--tol", solver.residual_tol, "Residual tolerance")->check(CLI::NonNegativeNumber);
        sub->add_option("--grid-step", solver.scan_step, "Root scan step")->check(CLI::PositiveNumber);
        sub->add_option("--scan-limit", solver.upper, "Upper end of the root scan")->check(CLI::Range(0.0, 1.0));
    };
    auto add_format_flag = [&](CLI::App* sub) {
        sub->add_option("--out", format_text, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* radius = app.add_subcommand("radius", "Solve one radius equation");
    add_problem_flags(radius);
    add_solver_flags(radius);
    add_format_flag(radius);

    auto* table = app.add_subcommand("table", "Reproduce a published table");
    table->add_option("which", table_args.which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    table->add_flag("--check", table_args.check, "Compare against printed values");
    add_format_flag(table);

    auto* sweep = app.add_subcommand("sweep", "Sample a defining function");
    add_problem_flags(sweep);
    add_solver_flags(sweep);
    add_format_flag(sweep);
    sweep->add_option("--r-min", sweep_args.r_min, "Lower end of the sweep");
    sweep->add_option("--r-max", sweep_args.r_max, "Upper end of the sweep");
    sweep->add_option("--steps", sweep_args.steps, "Number of intervals");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite_text, "lemmas|sharpness|limits|all")
        ->check(CLI::IsMember({"lemmas", "sharpness", "limits", "all"}));
    verify->add_option("--seed", verify_settings.seed, "RNG seed");
    verify->add_option("--trials", verify_settings.trials, "Trials per lemma")->check(CLI::PositiveNumber);
    verify->add_option("--order", verify_settings.order, "Series truncation order")->check(CLI::PositiveNumber);
    add_solver_flags(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto format = parse_format(format_text).value_or(OutputFormat::Csv);

    if (*table) {
        table_args.format = format;
        return cmd_table(table_args, out, err);
    }
    if (*verify) {
        VerifyArgs args{*parse_suite(suite_text), verify_settings};
        args.settings.solver = solver;
        return cmd_verify(args, out, err);
    }

    const auto variant = parse_variant(variant_text);
    if (!variant) {
        err << "error: unknown variant: " << variant_text << '\n';
        return kExitUsage;
    }
    double K = 1.0;
    try {
        K = parse_dilatation_K(K_text);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (*radius) return cmd_radius({*variant, p, m, q, K, solver, format}, out, err);

    sweep_args.variant = *variant;
    sweep_args.p = p;
    sweep_args.m = m;
    sweep_args.q = q;
    sweep_args.K = K;
    sweep_args.solver = solver;
    sweep_args.format = format;
    return cmd_sweep(sweep_args, out, err);
}

}  // namespace bohr::cli
