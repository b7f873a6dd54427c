#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "bohr/cli/commands.hpp"
#include "bohr/cli/output.hpp"
#include "oracles.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bohr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = bohr::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        EXPECT_FALSE(line.empty());
        EXPECT_EQ(line.back(), '\r');
        line.pop_back();
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    field += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(field);
                field.clear();
            } else {
                field += c;
            }
        }
        fields.push_back(field);
        rows.push_back(fields);
    }
    return rows;
}

std::string column(const std::vector<std::vector<std::string>>& rows, std::size_t row, const std::string& name) {
    const auto& header = rows.at(0);
    const auto it = std::find(header.begin(), header.end(), name);
    EXPECT_NE(it, header.end()) << name;
    return rows.at(row).at(static_cast<std::size_t>(it - header.begin()));
}

}  // namespace

TEST(Output, CsvQuoting) {
    EXPECT_EQ(bohr::cli::csv_field("plain"), "plain");
    EXPECT_EQ(bohr::cli::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(bohr::cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(bohr::cli::format_number(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(bohr::cli::format_number(0.1), "0.1");
}

TEST(ParseK, DecimalAndInf) {
    EXPECT_EQ(bohr::cli::parse_dilatation_K("2.5"), 2.5);
    EXPECT_TRUE(std::isinf(bohr::cli::parse_dilatation_K("inf")));
    EXPECT_THROW(bohr::cli::parse_dilatation_K("2x"), std::invalid_argument);
    EXPECT_THROW(bohr::cli::parse_dilatation_K("0.5"), std::invalid_argument);
    EXPECT_THROW(bohr::cli::parse_dilatation_K(""), std::invalid_argument);
}

TEST(RadiusCommand, RefinedAndCap) {
    auto r = run({"radius", "--variant", "refined", "--p", "1", "--K", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_NEAR(std::stod(column(rows, 1, "radius")), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(column(rows, 1, "cap"), "");

    r = run({"radius", "--variant", "cap-rmq", "--m", "3", "--q", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(column(parse_csv(r.out), 1, "radius")), 0.673348, 1e-6);
}

TEST(RadiusCommand, MajorantAgreesWithScan) {
    const auto r = run({"radius", "--variant", "majorant", "--p", "1", "--m", "1", "--K", "3"});
    ASSERT_EQ(r.code, 0);
    const auto rows = parse_csv(r.out);
    const auto ref = oracle::scan_root(oracle::Eq::Majorant, 1, 1, 1, 3.0);
    ASSERT_TRUE(ref);
    EXPECT_NEAR(std::stod(column(rows, 1, "radius")), *ref, 1e-6);
    EXPECT_NEAR(std::stod(column(rows, 1, "cap")), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(column(rows, 1, "tol"), "1e-12");
}

TEST(RadiusCommand, JsonAndNotes) {
    const auto r = run({"radius", "--variant", "majorant", "--p", "3", "--m", "1", "--K", "inf", "--out", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["K"], "inf");
    EXPECT_GT(j["radius"].get<double>(), j["cap"].get<double>());
    const auto notes = j["notes"].get<std::string>();
    EXPECT_NE(notes.find("boundary regime"), std::string::npos);
    EXPECT_NE(notes.find("exceeds cap"), std::string::npos);
}

TEST(RadiusCommand, ExitCodes) {
    EXPECT_EQ(run({"radius", "--variant", "bogus"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"radius", "--K", "0.5"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"radius", "--K", "abc"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"radius", "--p", "0"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"radius", "--out", "xml"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"radius", "--scan-limit", "0.1"}).code, bohr::cli::kExitNoRoot);
}

TEST(TableCommand, ChecksPass) {
    for (const char* which : {"1", "2", "3"}) {
        const auto r = run({"table", which, "--check"});
        EXPECT_EQ(r.code, 0) << which;
        const auto rows = parse_csv(r.out);
        ASSERT_EQ(rows.size(), 6u);
        for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(column(rows, i, "pass"), "true");
    }
    const auto t1 = parse_csv(run({"table", "1"}).out);
    EXPECT_EQ(column(t1, 5, "m"), "7");
    EXPECT_NEAR(std::stod(column(t1, 5, "value")), 0.854751, 1e-6);
    const auto t2 = parse_csv(run({"table", "2"}).out);
    EXPECT_NEAR(std::stod(column(t2, 2, "value")), 0.745432, 1e-6);
    const auto t3 = parse_csv(run({"table", "3"}).out);
    EXPECT_NEAR(std::stod(column(t3, 4, "value")), 0.962497, 1e-6);
    EXPECT_EQ(run({"table", "4"}).code, bohr::cli::kExitUsage);
}

TEST(SweepCommand, RowsAndMarkers) {
    const auto r = run({"sweep", "--variant", "majorant", "--K", "1", "--r-min", "0", "--r-max", "0.5", "--steps", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 1u + 7u + 2u);
    EXPECT_EQ(column(rows, 1, "kind"), "sample");
    EXPECT_EQ(std::stod(column(rows, 1, "value")), -1.0);
    // The sign change must bracket 1/3.
    bool sign_change = false;
    for (std::size_t i = 2; i <= 7; ++i) {
        const double a = std::stod(column(rows, i - 1, "value")), b = std::stod(column(rows, i, "value"));
        const double ra = std::stod(column(rows, i - 1, "r")), rb = std::stod(column(rows, i, "r"));
        if (a < 0 && b >= 0) {
            sign_change = true;
            EXPECT_LE(ra, 1.0 / 3.0);
            EXPECT_GE(rb, 1.0 / 3.0);
        }
    }
    EXPECT_TRUE(sign_change);
    EXPECT_EQ(column(rows, 8, "kind"), "root");
    EXPECT_NEAR(std::stod(column(rows, 8, "r")), 1.0 / 3.0, 1e-12);
    EXPECT_EQ(column(rows, 9, "kind"), "cap");
    EXPECT_EQ(std::stod(column(rows, 9, "r")),
              bohr::cap_radius({bohr::Variant::Majorant, bohr::Params(1, 1, 1, 1.0)}));
}

TEST(SweepCommand, ValueAtOriginForAllVariants) {
    for (const char* v : {"majorant", "value-deriv", "value-sq-deriv", "refined", "cap-rmq", "cap-r2mq", "cap-thirdroot"}) {
        const auto r = run({"sweep", "--variant", v, "--m", "2", "--q", "3", "--K", "2", "--steps", "3"});
        ASSERT_EQ(r.code, 0) << v;
        EXPECT_EQ(std::stod(column(parse_csv(r.out), 1, "value")), -1.0) << v;
    }
}

TEST(SweepCommand, UsageErrors) {
    EXPECT_EQ(run({"sweep", "--r-min", "0.5", "--r-max", "0.5"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--r-max", "1"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--r-min", "-0.1"}).code, bohr::cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--steps", "0"}).code, bohr::cli::kExitUsage);
}

TEST(VerifyCommand, LimitsSuite) {
    const auto r = run({"verify", "--suite", "limits"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["suite"], "limits");
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["settings"]["tol"], 1e-12);
    bool found = false;
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
        if (c["name"] == "limit_m200" && c["params"]["variant"] == "value-deriv" && c["params"]["K"] == 2.0) {
            found = true;
            EXPECT_NEAR(c["params"]["limit"].get<double>(), 3.0 / 11.0, 1e-15);
        }
    }
    EXPECT_TRUE(found);
}

TEST(VerifyCommand, LemmaSuiteWithSeed) {
    const auto r = run({"verify", "--suite", "lemmas", "--seed", "42", "--trials", "30"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["checks"].size(), 12u);
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("slack"));
        EXPECT_TRUE(c.contains("params"));
    }
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, bohr::cli::kExitUsage);
}

TEST(Determinism, OutputsAreByteStable) {
    const std::vector<std::vector<std::string>> invocations{
        {"radius", "--variant", "value-sq-deriv", "--p", "2", "--m", "3", "--q", "1", "--K", "5", "--out", "json"},
        {"table", "3", "--check", "--out", "json"},
        {"sweep", "--variant", "value-deriv", "--steps", "50"},
        {"verify", "--suite", "lemmas", "--seed", "7", "--trials", "10"},
    };
    for (const auto& args : invocations) EXPECT_EQ(run(args).out, run(args).out) << args[0];
}
