#pragma once

/**
 * @file functional_eval.hpp
 * @brief Left-hand Bohr functionals for concrete harmonic mappings f = h + conj(g)
 *        and their closed forms on the Möbius extremal family.
 *
 * The extremal family uses h_a(z) = (a + z)/(1 + a z) and omega_j(z) = z^j.
 * Its co-analytic partner is g' = k z h_a' (Majorant) or g = k (h_a - a)
 * (the other three variants).
 */

#include <optional>
#include <span>
#include <vector>

#include "bohr/power_series.hpp"
#include "bohr/radius_solver.hpp"

namespace bohr {

enum class DilatationMode {
    Standard,   ///< |g'| <= k |h'|, g(0) = 0
    Vanishing,  ///< |g'| <= k |z h'|, g(0) = g'(0) = 0
};

/// Analytic part h, co-analytic part g and the dilatation bound k.
class HarmonicMappingModel {
public:
    /// Throws std::invalid_argument if k is outside [0, 1] or g violates the
    /// vanishing conditions of `mode`.
    HarmonicMappingModel(TruncatedSeries h, TruncatedSeries g, DilatationMode mode, double k);

    const TruncatedSeries& h() const { return h_; }
    const TruncatedSeries& g() const { return g_; }
    DilatationMode mode() const { return mode_; }
    double k() const { return k_; }

private:
    TruncatedSeries h_;
    TruncatedSeries g_;
    DilatationMode mode_;
    double k_;
};

/// omega(z) = z^degree * factor(z); |omega(z)| <= |z|^degree on the disk.
class SchwarzFunction {
public:
    explicit SchwarzFunction(int degree, std::optional<BoundedFunction> factor = std::nullopt);

    int degree() const { return degree_; }
    Complex operator()(Complex z) const;

private:
    int degree_;
    std::optional<BoundedFunction> factor_;
};

struct SchwarzTriple {
    SchwarzFunction omega_p;
    SchwarzFunction omega_m;
    SchwarzFunction omega_q;

    static SchwarzTriple monomial(int p, int m, int q);
};

/// Functional of a theorem variant at the point z = r, the point where the
/// extremal family attains its bound. `mu` only affects Refined and defaults to
/// refined_constant for the triple's degrees and the mapping's k.
double eval_functional(Variant variant, const HarmonicMappingModel& mapping,
                       const SchwarzTriple& schwarz, double r,
                       std::optional<double> mu = std::nullopt);

/// Same functional at an arbitrary point of the disk.
double eval_functional_at(Variant variant, const HarmonicMappingModel& mapping,
                          const SchwarzTriple& schwarz, Complex z,
                          std::optional<double> mu = std::nullopt);

/// Closed-form functional of the extremal family at parameter a.
double extremal_value(Variant variant, double a, const Params& params, double r,
                      std::optional<double> mu = std::nullopt);

/// Truncated series of the extremal mapping, for cross-checking extremal_value.
HarmonicMappingModel extremal_mapping(Variant variant, double a, const Params& params,
                                      int order = kDefaultOrder);

struct SweepResult {
    double max_value;
    double argmax_a;
};

/// Maximum of extremal_value over a_grid; ties resolve to the smallest a.
SweepResult sharpness_sweep(Variant variant, const Params& params, double r,
                            std::span<const double> a_grid,
                            std::optional<double> mu = std::nullopt);

/// 10^3 uniform points on [0, 0.999] followed by a refinement toward a = 1.
std::vector<double> default_a_grid();

}  // namespace bohr
