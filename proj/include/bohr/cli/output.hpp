#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

namespace bohr::cli {

enum class OutputFormat { Csv, Json };

/// One solved radius as printed by `radius`.
struct OutputRecord {
    std::string variant;
    int p = 1;
    int m = 1;
    int q = 1;
    double K = 1.0;
    double radius = 0.0;
    std::optional<double> cap;
    double residual = 0.0;
    std::string notes;
    double tol = 0.0;
    double scan_step = 0.0;
};

/// Shortest round-trip decimal; "inf" for +infinity.
std::string format_number(double x);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);
void write_csv_row(std::ostream& os, std::span<const std::string> fields);

nlohmann::json number_json(double x);

void write_record(std::ostream& os, const OutputRecord& record, OutputFormat format);

}  // namespace bohr::cli
