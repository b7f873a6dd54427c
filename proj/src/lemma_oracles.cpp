#include "bohr/lemma_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bohr {
namespace {

struct SlackTracker {
    double worst = std::numeric_limits<double>::infinity();
    double tail = 0.0;
    int evaluations = 0;

    void add(double lhs, double rhs, double lhs_tail = 0.0) {
        worst = std::min(worst, rhs - (lhs + lhs_tail));
        tail = std::max(tail, lhs_tail);
        ++evaluations;
    }

    CheckReport report(std::string name, std::vector<std::pair<std::string, double>> params) const {
        CheckReport r;
        r.name = std::move(name);
        r.params = std::move(params);
        r.worst_slack = evaluations > 0 ? worst : 0.0;
        r.tail = tail;
        r.evaluations = evaluations;
        r.pass = r.worst_slack >= -kSlackTolerance;
        return r;
    }
};

double sum_abs(const TruncatedSeries& u, double x, int start, int coeff_power, int index_power,
               int exponent_shift = 0) {
    // sum_{n>=start} n^index_power |c_n|^coeff_power x^{n + exponent_shift}
    double s = 0.0;
    for (int n = u.order(); n >= start; --n) {
        const double c = std::abs(u[n]);
        const double w = index_power == 1 ? double(n) : 1.0;
        s += w * (coeff_power == 2 ? c * c : c) * std::pow(x, n + exponent_shift);
    }
    return s;
}

// Tail of sum_{j>N} C(j, n) |c_j| |z|^{j-n} from |c_j| <= T / rho^j.
double derivative_tail(const TruncatedSeries& u, double modulus, int n) {
    const auto& t = u.tail();
    if (!t) return std::numeric_limits<double>::infinity();
    if (t->bound == 0.0) return 0.0;
    if (modulus >= t->radius) return std::numeric_limits<double>::infinity();
    if (modulus == 0.0) return 0.0;
    const double q = modulus / t->radius;
    double sum = 0.0;
    for (int j = u.order() + 1; j < u.order() + 100000; ++j) {
        const double log_binom = std::lgamma(j + 1.0) - std::lgamma(n + 1.0) - std::lgamma(j - n + 1.0);
        const double term = std::exp(log_binom + j * std::log(q) - n * std::log(modulus));
        sum += term;
        if (term < 1e-30 * std::max(sum, 1e-300) && j > u.order() + 10) break;
    }
    return t->bound * sum;
}

void require_grid(std::span<const double> r_grid, double upper, const char* where) {
    for (const double r : r_grid) {
        if (!(r >= 0.0 && r <= upper))
            throw std::invalid_argument(std::string(where) + ": grid point outside the admissible range");
    }
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

double SampleRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int SampleRng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Complex SampleRng::disk_point(double max_modulus) {
    const double r = max_modulus * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

Complex SampleRng::unimodular() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

BoundedFunction SampleRng::blaschke(int min_degree, int max_degree, double max_modulus) {
    const int degree = uniform_int(min_degree, max_degree);
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) zeros.push_back(disk_point(max_modulus));
    return BoundedFunction::blaschke(std::move(zeros), unimodular());
}

HarmonicPair build_pair(const PairSample& sample, int order, double dilatation_scale) {
    if (order < 1) throw std::invalid_argument("build_pair: order must be >= 1");
    if (!(sample.k >= 0.0 && sample.k < 1.0)) throw std::invalid_argument("build_pair: k must lie in [0, 1)");
    auto h = expand(sample.h, order, kOracleTailRadius);
    const auto phi = expand(sample.phi, order - 1, kOracleTailRadius);
    auto integrand = series_mul(phi, series_derivative(h));
    if (sample.mode == DilatationMode::Vanishing)
        integrand = series_mul(expand(BoundedFunction::monomial(1), order - 1, kOracleTailRadius), integrand);
    auto g = series_antiderivative(integrand).scaled(sample.k * dilatation_scale);
    return HarmonicPair{std::move(h), std::move(g), sample.k};
}

CheckReport check_pick_at(const BoundedFunction& f, std::span<const Complex> points) {
    const double f0 = std::abs(f.value_at_zero());
    SlackTracker t;
    for (const auto& z : points) {
        const double m = std::abs(z);
        t.add(std::abs(f(z)), (f0 + m) / (1.0 + f0 * m));
    }
    return t.report("pick", {{"samples", double(points.size())}});
}

CheckReport check_pick(const BoundedFunction& f, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("check_pick: samples must be >= 1");
    SampleRng rng(seed);
    std::vector<Complex> points;
    points.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) points.push_back(rng.disk_point(0.999));
    auto report = check_pick_at(f, points);
    report.params.emplace_back("seed", double(seed));
    return report;
}

CheckReport check_coeff_and_derivative_bounds(const BoundedFunction& f, std::span<const Complex> z_samples,
                                              int n_max, int order) {
    if (n_max < 1) throw std::invalid_argument("check_coeff_and_derivative_bounds: n_max must be >= 1");
    if (n_max > order) throw std::invalid_argument("check_coeff_and_derivative_bounds: n_max exceeds order");
    const auto series = expand(f, order, kOracleTailRadius);
    const double a0 = std::abs(series[0]);

    SlackTracker t;
    for (int n = 1; n <= n_max; ++n) t.add(std::abs(series[n]), 1.0 - a0 * a0);

    for (const auto& z : z_samples) {
        const double m = std::abs(z);
        if (!(m < 1.0)) throw std::invalid_argument("check_coeff_and_derivative_bounds: z outside the disk");
        const double fz = std::abs(f(z));
        for (int n = 1; n <= n_max; ++n) {
            const double lhs = std::abs(series.taylor_coefficient_at(z, n));
            const double rhs = (1.0 - fz * fz) / (std::pow(1.0 - m, n - 1) * (1.0 - m * m));
            t.add(lhs, rhs, derivative_tail(series, m, n));
        }
    }
    return t.report("coeff_and_derivative", {{"n_max", double(n_max)}, {"points", double(z_samples.size())}});
}

CheckReport check_l2_dilatation(const HarmonicPair& pair, std::span<const double> r_grid) {
    require_grid(r_grid, std::nextafter(1.0, 0.0), "check_l2_dilatation");
    SlackTracker t;
    for (const double r : r_grid) {
        const double lhs = pair.g.order() >= 1 ? sum_abs(pair.g, r, 1, 2, 0) : 0.0;
        const double rhs = pair.k * pair.k * sum_abs(pair.h, r, 1, 2, 0);
        t.add(lhs, rhs, tail_weighted_sum(pair.g, r, 2, 0));
    }
    return t.report("l2_dilatation", {{"k", pair.k}});
}

CheckReport check_l2_dilatation(const PairSample& sample, std::span<const double> r_grid) {
    if (sample.mode != DilatationMode::Standard)
        throw std::invalid_argument("check_l2_dilatation: requires the standard dilatation mode");
    auto report = check_l2_dilatation(build_pair(sample), r_grid);
    report.params.emplace_back("seed", double(sample.seed));
    return report;
}

CheckReport check_weighted_l1(const HarmonicPair& pair, std::span<const double> r_grid) {
    require_grid(r_grid, 1.0 / 3.0, "check_weighted_l1");
    SlackTracker t;
    for (const double r : r_grid) {
        const double lhs = sum_abs(pair.g, r, 1, 1, 1, -1);
        const double rhs = pair.k * sum_abs(pair.h, r, 1, 1, 1);
        const double tail = r > 0.0 ? tail_weighted_sum(pair.g, r, 1, 1) / r : 0.0;
        t.add(lhs, rhs, tail);
    }
    return t.report("weighted_l1", {{"k", pair.k}});
}

CheckReport check_weighted_l1(const PairSample& sample, std::span<const double> r_grid) {
    if (sample.mode != DilatationMode::Vanishing)
        throw std::invalid_argument("check_weighted_l1: requires the vanishing dilatation mode");
    require_grid(r_grid, 1.0 / 3.0, "check_weighted_l1");
    auto report = check_weighted_l1(build_pair(sample), r_grid);
    report.params.emplace_back("seed", double(sample.seed));
    return report;
}

CheckReport check_refined(const BoundedFunction& f, int N, std::span<const double> r_grid, int order) {
    if (N < 1) throw std::invalid_argument("check_refined: N must be >= 1");
    if (N > order) throw std::invalid_argument("check_refined: N exceeds the truncation order");
    require_grid(r_grid, std::nextafter(1.0, 0.0), "check_refined");
    const auto h = expand(f, order, kOracleTailRadius);
    const double a0 = std::abs(h[0]);
    const int t = (N - 1) / 2;

    SlackTracker tracker;
    for (const double r : r_grid) {
        const double geometric = 1.0 / (1.0 - r);
        double lhs = sum_abs(h, r, N, 1, 0);
        double lhs_tail = tail_weighted_sum(h, r, 1, 0);
        if (t > 0) {
            double head = 0.0;
            for (int n = 1; n <= t; ++n) head += std::norm(h[n]);
            lhs += head * std::pow(r, N) * geometric;
        }
        const double weight = 1.0 / (1.0 + a0) + r * geometric;
        lhs += weight * sum_abs(h, r * r, t + 1, 2, 0);
        lhs_tail += weight * tail_weighted_sum(h, r * r, 2, 0);
        tracker.add(lhs, (1.0 - a0 * a0) * std::pow(r, N) * geometric, lhs_tail);
    }
    return tracker.report("refined", {{"N", double(N)}, {"t", double(t)}});
}

std::vector<CheckReport> run_lemma_suite(std::uint64_t seed, int trials, int order) {
    if (trials < 1) throw std::invalid_argument("run_lemma_suite: trials must be >= 1");
    constexpr std::array<double, 4> kDilatations{0.0, 0.3, 0.7, 0.95};
    constexpr double kMaxZeroModulus = 0.8;
    constexpr int kMaxDegree = 5;
    const std::vector<double> l2_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const std::vector<double> l1_grid{0.05, 0.15, 1.0 / 3.0};
    std::vector<double> refined_grid;
    for (int i = 1; i <= 18; ++i) refined_grid.push_back(0.05 * i);

    struct Aggregate {
        std::string name;
        double worst = std::numeric_limits<double>::infinity();
        double tail = 0.0;
        int evaluations = 0;
        void absorb(const CheckReport& r) {
            worst = std::min(worst, r.worst_slack);
            tail = std::max(tail, r.tail);
            evaluations += r.evaluations;
        }
    };
    Aggregate pick{"lemma1_pick"}, coeff{"lemma2_coeff_derivative"}, l2{"lemma3_l2_dilatation"},
        l1{"lemma4_weighted_l1"}, refined{"lemma5_refined"};

    for (int trial = 0; trial < trials; ++trial) {
        SampleRng rng(seed, static_cast<std::uint64_t>(trial));
        const double k = kDilatations[static_cast<std::size_t>(trial) % kDilatations.size()];
        // Every fifth trial uses a Möbius map (a degree-one Blaschke product
        // with its zero at -a) so the extremal family is sampled too.
        const auto f = trial % 5 == 4 ? BoundedFunction::mobius(kMaxZeroModulus * rng.uniform())
                                      : rng.blaschke(1, kMaxDegree, kMaxZeroModulus);
        const auto phi = rng.blaschke(0, kMaxDegree, kMaxZeroModulus);

        pick.absorb(check_pick(f, 50, seed + static_cast<std::uint64_t>(trial)));

        std::vector<Complex> points;
        for (int i = 0; i < 8; ++i) points.push_back(rng.disk_point(0.9));
        coeff.absorb(check_coeff_and_derivative_bounds(f, points, 8, order));

        l2.absorb(check_l2_dilatation(build_pair(PairSample{f, phi, k, DilatationMode::Standard}, order), l2_grid));
        l1.absorb(check_weighted_l1(build_pair(PairSample{f, phi, k, DilatationMode::Vanishing}, order), l1_grid));
        refined.absorb(check_refined(f, rng.uniform_int(1, 6), refined_grid, order));
    }

    std::vector<CheckReport> out;
    for (const Aggregate* a : {&pick, &coeff, &l2, &l1, &refined}) {
        CheckReport r;
        r.name = a->name;
        r.params = {{"trials", double(trials)}, {"seed", double(seed)}};
        r.worst_slack = a->worst;
        r.tail = a->tail;
        r.evaluations = a->evaluations;
        r.pass = a->worst >= -kSlackTolerance;
        out.push_back(std::move(r));
    }

    // Equality cases: |slack| must vanish to 1e-12.
    constexpr double kEqualityTol = 1e-12;
    auto equality = [&](std::string name, CheckReport r) {
        r.name = std::move(name);
        r.pass = std::abs(r.worst_slack) <= kEqualityTol;
        out.push_back(std::move(r));
    };
    const auto identity = BoundedFunction::monomial(1);
    const auto constant_one = BoundedFunction::blaschke({});
    const std::vector<Complex> real_points{0.1, 0.25, 0.5, 0.75, 0.9};
    equality("lemma1_equality_identity", check_pick_at(identity, real_points));
    equality("lemma1_equality_mobius", check_pick_at(BoundedFunction::mobius(0.6), real_points));
    equality("lemma2_equality_identity",
             check_coeff_and_derivative_bounds(identity, std::vector<Complex>{0.0}, 1));
    equality("lemma3_equality_constant_dilatation",
             check_l2_dilatation(PairSample{identity, constant_one, 0.7, DilatationMode::Standard}, l2_grid));
    equality("lemma4_equality_identity",
             check_weighted_l1(PairSample{identity, constant_one, 0.7, DilatationMode::Vanishing}, l1_grid));
    equality("lemma5_equality_identity", check_refined(identity, 1, refined_grid));

    // g' = 1.5 k z h' must be flagged.
    const PairSample violating{identity, constant_one, 0.5, DilatationMode::Vanishing};
    auto detected = check_weighted_l1(build_pair(violating, order, 1.5), l1_grid);
    detected.name = "lemma4_detects_violation";
    detected.pass = detected.worst_slack < -kSlackTolerance;
    out.push_back(std::move(detected));
    return out;
}

}  // namespace bohr
