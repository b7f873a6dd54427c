#pragma once

#include <ostream>
#include <vector>

#include "bohr/cli/output.hpp"
#include "bohr/cli/verify.hpp"
#include "bohr/radius_solver.hpp"

namespace bohr::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoRoot = 3;

struct RadiusArgs {
    Variant variant = Variant::Majorant;
    int p = 1;
    int m = 1;
    int q = 1;
    double K = 1.0;
    SolverOptions solver{};
    OutputFormat format = OutputFormat::Csv;
};

struct TableArgs {
    int which = 1;
    bool check = false;
    OutputFormat format = OutputFormat::Csv;
};

struct SweepArgs {
    Variant variant = Variant::Majorant;
    int p = 1;
    int m = 1;
    int q = 1;
    double K = 1.0;
    double r_min = 0.0;
    double r_max = 0.99;
    int steps = 99;
    SolverOptions solver{};
    OutputFormat format = OutputFormat::Csv;
};

struct VerifyArgs {
    Suite suite = Suite::All;
    VerifySettings settings{};
};

struct TableRow {
    int m;
    int q;  ///< 0 for table 1
    double value;
    double printed;
    double tolerance;
};

/// Computed rows of table 1 (3^{-1/m}), 2 (R_{m,q}) or 3 (R_{2,m,q}) next
/// to the published values.
std::vector<TableRow> table_rows(int which);

OutputRecord radius_record(const RadiusArgs& args);

int cmd_radius(const RadiusArgs& args, std::ostream& out, std::ostream& err);
int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv (radius | table | sweep | verify) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Decimal or "inf"; throws std::invalid_argument otherwise.
double parse_dilatation_K(const std::string& text);

}  // namespace bohr::cli
