#pragma once

/**
 * @file radius_solver.hpp
 * @brief Radius equations for the Bohr-type inequalities of K-quasiconformal
 *        harmonic mappings with Schwarz-function arguments.
 *
 * Every defining function is normalised so that it equals -1 at r = 0 and the
 * radius is its smallest root in (0, 1):
 *
 *   Majorant      2x/(1-x) + 2k (y/(1-y) + log(1-y)) - 1,      x = r^p, y = r^m
 *   ValueDeriv    2r^q/(1+r^m) + 2(k+r^p)(1+r^m) r^p/(1-r^p) - (1-r^m)
 *   ValueSqDeriv  -(1-r^{2m}-r^q)/(1+r^m)^2 + (r^p+k) r^p/(1-r^p)
 *   Refined       (2k+3) r^p - 1
 *   CapRmq        r^{2m} + 2r^q - 1
 *   CapR2mq       r^{2m} + r^q - 1
 *   CapThirdRoot  3 r^m - 1
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bohr {

enum class Variant {
    Majorant,
    ValueDeriv,
    ValueSqDeriv,
    Refined,
    CapRmq,
    CapR2mq,
    CapThirdRoot,
};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// True for the four theorem variants (the ones with a Bohr functional).
bool is_theorem_variant(Variant v);

/// (p, m, q, K). K may be +infinity, in which case k = 1 (boundary regime).
class Params {
public:
    /// Throws std::invalid_argument unless p, m, q >= 1 and K >= 1.
    Params(int p, int m, int q, double K);

    /// Builds the tuple from the dilatation bound k in [0, 1]; k = 1 maps to K = inf.
    static Params from_dilatation(int p, int m, int q, double k);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    double K() const { return K_; }
    double k() const;
    bool boundary_regime() const;

private:
    int p_;
    int m_;
    int q_;
    double K_;
};

struct RadiusProblem {
    Variant variant;
    Params params;
};

struct RootResult {
    double value;
    std::pair<double, double> bracket;
    double residual;
    int iterations;
};

struct SolverOptions {
    double residual_tol = 1e-12;
    double bracket_tol = 1e-14;
    double scan_step = 1e-3;
    double upper = 1.0 - 1e-9;
};

/// Absolute allowance for comparing a solved radius against a cap that it can
/// equal exactly (k = 0 with p = m gives r = 3^{-1/m}).
inline constexpr double kCapComparisonTolerance = 1e-12;

class NoRootInUnitInterval : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// y/(1-y) + log(1-y), evaluated through sum_{n>=2} (1-1/n) y^n for y < 1e-2.
double log_defect(double y);

double defining_function(const RadiusProblem& problem, double r);

/// Smallest root in (0, 1): grid scan for the first sign change, then bisection.
/// Refined is returned in closed form.
RootResult solve_radius(const RadiusProblem& problem, const SolverOptions& options = {});

/// 3^{-1/m} for Majorant, R_{m,q} for ValueDeriv and R_{2,m,q} for ValueSqDeriv.
double cap_radius(const RadiusProblem& problem);

/// m -> infinity limit with p = q = 1.
double limiting_radius(Variant variant, const Params& params);

/// (1 - r^{2m})^2 / (8 r^{2m}) at the refined radius r = (2k+3)^{-1/p}.
double refined_constant(const Params& params);

}  // namespace bohr
