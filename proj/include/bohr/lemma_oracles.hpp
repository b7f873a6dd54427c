#pragma once

/**
 * @file lemma_oracles.hpp
 * @brief Numerical oracles for the coefficient inequalities consumed by the
 *        radius theorems, evaluated on sampled bounded analytic functions.
 *
 * Each check returns a CheckReport whose worst_slack is min(rhs - lhs) over
 * every evaluated instance; truncation tails are added to the left-hand side
 * whenever the series carries a tail bound. A check passes when
 * worst_slack >= -kSlackTolerance.
 */

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bohr/functional_eval.hpp"
#include "bohr/power_series.hpp"

namespace bohr {

inline constexpr double kSlackTolerance = 1e-9;

/// Tail radius used when expanding oracle inputs (sample points stay below it).
inline constexpr double kOracleTailRadius = 0.99;

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    double worst_slack = 0.0;
    double tail = 0.0;  ///< largest truncation allowance folded into a left-hand side
    int evaluations = 0;
    bool pass = true;
};

/// Seeded source of disk points and random Blaschke products. Uses the raw
/// mt19937_64 stream so samples are identical across standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed, std::uint64_t stream = 0);

    double uniform();  ///< [0, 1)
    int uniform_int(int lo, int hi);  ///< inclusive
    Complex disk_point(double max_modulus);
    Complex unimodular();
    BoundedFunction blaschke(int min_degree, int max_degree, double max_modulus);

private:
    std::mt19937_64 engine_;
};

struct PairSample {
    BoundedFunction h;
    BoundedFunction phi;  ///< dilatation shape, |phi| <= 1
    double k;
    DilatationMode mode;
    std::uint64_t seed = 0;
};

struct HarmonicPair {
    TruncatedSeries h;
    TruncatedSeries g;
    double k;
};

/// g' = scale k phi h' (Standard) or g' = scale k z phi h' (Vanishing), g(0) = 0.
HarmonicPair build_pair(const PairSample& sample, int order = kDefaultOrder, double dilatation_scale = 1.0);

/// |f(z)| <= (|f(0)| + |z|) / (1 + |f(0)||z|) at `samples` seeded disk points.
CheckReport check_pick(const BoundedFunction& f, int samples, std::uint64_t seed);

/// Same inequality at caller-supplied points.
CheckReport check_pick_at(const BoundedFunction& f, std::span<const Complex> points);

/// |a_n| <= 1 - |a_0|^2 for 1 <= n <= n_max and
/// |f^{(n)}(z)|/n! <= (1 - |f(z)|^2) / ((1 - |z|)^{n-1} (1 - |z|^2)) at each z.
CheckReport check_coeff_and_derivative_bounds(const BoundedFunction& f, std::span<const Complex> z_samples,
                                              int n_max, int order = kDefaultOrder);

/// sum |b_n|^2 r^n <= k^2 sum |a_n|^2 r^n. Requires Standard mode.
CheckReport check_l2_dilatation(const PairSample& sample, std::span<const double> r_grid);
CheckReport check_l2_dilatation(const HarmonicPair& pair, std::span<const double> r_grid);

/// sum n |b_n| r^{n-1} <= k sum n |a_n| r^n for r <= 1/3. Requires Vanishing
/// mode; rejects grid points above 1/3.
CheckReport check_weighted_l1(const PairSample& sample, std::span<const double> r_grid);
CheckReport check_weighted_l1(const HarmonicPair& pair, std::span<const double> r_grid);

/// Refined majorant inequality with t = floor((N-1)/2), evaluated with |a_0|.
CheckReport check_refined(const BoundedFunction& f, int N, std::span<const double> r_grid,
                          int order = kDefaultOrder);

/// Seeded Monte Carlo run of all five oracles (aggregated per oracle), their
/// equality cases, and the deliberate violation of the weighted l1 bound.
std::vector<CheckReport> run_lemma_suite(std::uint64_t seed, int trials = 200, int order = kDefaultOrder);

}  // namespace bohr
