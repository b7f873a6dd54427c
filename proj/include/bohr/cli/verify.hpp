#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bohr/power_series.hpp"
#include "bohr/radius_solver.hpp"

namespace bohr::cli {

enum class Suite { Lemmas, Sharpness, Limits, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct VerifyCheck {
    std::string name;
    nlohmann::json params;
    double slack;
    bool pass;
};

struct VerifySettings {
    std::uint64_t seed = 42;
    int trials = 200;
    int order = kDefaultOrder;
    SolverOptions solver{};
};

/// Sample grid of the sharpness suite: p, m, q in {1, 2, 3}, K in {1, 2, 5}.
std::vector<Params> sharpness_grid();

std::vector<VerifyCheck> run_lemma_checks(const VerifySettings& settings);
std::vector<VerifyCheck> run_sharpness_checks(const VerifySettings& settings);
std::vector<VerifyCheck> run_limit_checks(const VerifySettings& settings);
std::vector<VerifyCheck> run_suite(Suite suite, const VerifySettings& settings);

/// {suite, seed, settings, checks: [{name, params, slack, pass}]}
nlohmann::json verify_report(Suite suite, const VerifySettings& settings,
                             const std::vector<VerifyCheck>& checks);

}  // namespace bohr::cli
