#include "bohr/radius_solver.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace bohr {
namespace {

constexpr double kSeriesSwitch = 1e-2;

struct VariantName {
    Variant variant;
    std::string_view name;
};

constexpr std::array<VariantName, 7> kVariantNames{{
    {Variant::Majorant, "majorant"},
    {Variant::ValueDeriv, "value-deriv"},
    {Variant::ValueSqDeriv, "value-sq-deriv"},
    {Variant::Refined, "refined"},
    {Variant::CapRmq, "cap-rmq"},
    {Variant::CapR2mq, "cap-r2mq"},
    {Variant::CapThirdRoot, "cap-thirdroot"},
}};

double refined_closed_form(const Params& params) {
    return std::pow(1.0 / (2.0 * params.k() + 3.0), 1.0 / params.p());
}

}  // namespace

std::string_view to_string(Variant v) {
    for (const auto& entry : kVariantNames) {
        if (entry.variant == v) return entry.name;
    }
    return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (const auto& entry : kVariantNames) {
        if (entry.name == name) return entry.variant;
    }
    return std::nullopt;
}

bool is_theorem_variant(Variant v) {
    return v == Variant::Majorant || v == Variant::ValueDeriv || v == Variant::ValueSqDeriv ||
           v == Variant::Refined;
}

Params::Params(int p, int m, int q, double K) : p_(p), m_(m), q_(q), K_(K) {
    if (p < 1 || m < 1 || q < 1) throw std::invalid_argument("Params: p, m, q must be >= 1");
    if (!(K >= 1.0)) throw std::invalid_argument("Params: K must be >= 1 (or inf)");
}

Params Params::from_dilatation(int p, int m, int q, double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("Params: k must lie in [0, 1]");
    const double K = k == 1.0 ? std::numeric_limits<double>::infinity() : (1.0 + k) / (1.0 - k);
    return Params(p, m, q, K);
}

double Params::k() const {
    if (std::isinf(K_)) return 1.0;
    return (K_ - 1.0) / (K_ + 1.0);
}

bool Params::boundary_regime() const { return std::isinf(K_); }

double log_defect(double y) {
    if (y < kSeriesSwitch) {
        // sum_{n>=2} (1 - 1/n) y^n; both naive terms are O(y), the sum is O(y^2).
        double sum = 0.0;
        double yn = y * y;
        for (int n = 2; n < 40; ++n) {
            const double term = (1.0 - 1.0 / n) * yn;
            sum += term;
            if (term <= 1e-18 * sum) break;
            yn *= y;
        }
        return sum;
    }
    return y / (1.0 - y) + std::log1p(-y);
}

double defining_function(const RadiusProblem& problem, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("defining_function: r must lie in [0, 1)");
    const Params& pr = problem.params;
    const double k = pr.k();
    const double rp = std::pow(r, pr.p());
    const double rm = std::pow(r, pr.m());
    const double rq = std::pow(r, pr.q());

    switch (problem.variant) {
        case Variant::Majorant:
            return 2.0 * rp / (1.0 - rp) + 2.0 * k * log_defect(rm) - 1.0;
        case Variant::ValueDeriv:
            return 2.0 * rq / (1.0 + rm) + 2.0 * (k + rp) * (1.0 + rm) * rp / (1.0 - rp) - (1.0 - rm);
        case Variant::ValueSqDeriv:
            return -(1.0 - rm * rm - rq) / ((1.0 + rm) * (1.0 + rm)) + (rp + k) * rp / (1.0 - rp);
        case Variant::Refined:
            return (2.0 * k + 3.0) * rp - 1.0;
        case Variant::CapRmq:
            return rm * rm + 2.0 * rq - 1.0;
        case Variant::CapR2mq:
            return rm * rm + rq - 1.0;
        case Variant::CapThirdRoot:
            return 3.0 * rm - 1.0;
    }
    throw std::invalid_argument("defining_function: unknown variant");
}

RootResult solve_radius(const RadiusProblem& problem, const SolverOptions& options) {
    if (!(options.residual_tol >= 0.0) || !(options.bracket_tol > 0.0) || !(options.scan_step > 0.0))
        throw std::invalid_argument("solve_radius: tolerances and scan step must be positive");
    if (!(options.upper > 0.0 && options.upper < 1.0))
        throw std::invalid_argument("solve_radius: upper scan limit must lie in (0, 1)");

    auto f = [&](double r) { return defining_function(problem, r); };

    if (problem.variant == Variant::Refined) {
        const double r = refined_closed_form(problem.params);
        return RootResult{r, {r, r}, f(r), 0};
    }

    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    for (long i = 1;; ++i) {
        hi = std::min(i * options.scan_step, options.upper);
        const double fh = f(hi);
        if (fh == 0.0) return RootResult{hi, {hi, hi}, 0.0, 0};
        if (fh > 0.0) {
            bracketed = true;
            break;
        }
        lo = hi;
        if (hi >= options.upper) break;
    }
    if (!bracketed) {
        throw NoRootInUnitInterval(fmt::format(
            "no sign change of the {} defining function on [0, {}]", to_string(problem.variant),
            options.upper));
    }

    int iterations = 0;
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    while (hi - lo > options.bracket_tol && std::abs(fm) > options.residual_tol) {
        if (fm < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        const double next = 0.5 * (lo + hi);
        ++iterations;
        if (next == mid) break;
        mid = next;
        fm = f(mid);
    }
    return RootResult{mid, {lo, hi}, fm, iterations};
}

double cap_radius(const RadiusProblem& problem) {
    const Params& pr = problem.params;
    switch (problem.variant) {
        case Variant::Majorant:
            return std::pow(3.0, -1.0 / pr.m());
        case Variant::ValueDeriv:
            return solve_radius({Variant::CapRmq, pr}).value;
        case Variant::ValueSqDeriv:
            return solve_radius({Variant::CapR2mq, pr}).value;
        default:
            throw std::invalid_argument(
                fmt::format("cap_radius: variant {} has no cap", to_string(problem.variant)));
    }
}

double limiting_radius(Variant variant, const Params& params) {
    if (params.p() != 1 || params.q() != 1)
        throw std::invalid_argument("limiting_radius: closed form only for p = q = 1");
    const double k = params.k();
    switch (variant) {
        case Variant::Majorant:
            return 1.0 / 3.0;
        case Variant::ValueDeriv:
            return 1.0 / (3.0 + 2.0 * k);  // (K+1)/(5K+1)
        case Variant::ValueSqDeriv:
            return 1.0 / (2.0 + k);  // (K+1)/(3K+1)
        default:
            throw std::invalid_argument(
                fmt::format("limiting_radius: no limit for variant {}", to_string(variant)));
    }
}

double refined_constant(const Params& params) {
    // w = r^{2m} with r = (2k+3)^{-1/p}
    const double log_w = -2.0 * params.m() / params.p() * std::log(2.0 * params.k() + 3.0);
    const double w = std::exp(log_w);
    const double one_minus_w = -std::expm1(log_w);
    return one_minus_w * one_minus_w / (8.0 * w);
}

}  // namespace bohr
