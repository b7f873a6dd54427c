#include "bohr/cli/output.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace bohr::cli {

std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    return fmt::format("{}", x);
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_row(std::ostream& os, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) os << ',';
        os << csv_field(fields[i]);
    }
    os << "\r\n";
}

nlohmann::json number_json(double x) {
    if (!std::isfinite(x)) return format_number(x);
    return x;
}

void write_record(std::ostream& os, const OutputRecord& record, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json j;
        j["variant"] = record.variant;
        j["p"] = record.p;
        j["m"] = record.m;
        j["q"] = record.q;
        j["K"] = number_json(record.K);
        j["radius"] = record.radius;
        j["cap"] = record.cap ? nlohmann::json(*record.cap) : nlohmann::json(nullptr);
        j["residual"] = record.residual;
        j["notes"] = record.notes;
        j["tol"] = record.tol;
        j["scan_step"] = record.scan_step;
        os << j.dump(2) << '\n';
        return;
    }
    const std::vector<std::string> header{"variant", "p", "m", "q", "K", "radius", "cap",
                                          "residual", "notes", "tol", "scan_step"};
    const std::vector<std::string> row{record.variant,
                                       std::to_string(record.p),
                                       std::to_string(record.m),
                                       std::to_string(record.q),
                                       format_number(record.K),
                                       format_number(record.radius),
                                       record.cap ? format_number(*record.cap) : std::string{},
                                       format_number(record.residual),
                                       record.notes,
                                       format_number(record.tol),
                                       format_number(record.scan_step)};
    write_csv_row(os, header);
    write_csv_row(os, row);
}

}  // namespace bohr::cli
