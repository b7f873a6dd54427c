#include "bohr/functional_eval.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace bohr {
namespace {

constexpr double kZeroCoefficient = 1e-14;

void require_theorem_variant(Variant variant, const char* where) {
    if (!is_theorem_variant(variant))
        throw std::invalid_argument(
            fmt::format("{}: {} is not a theorem variant", where, to_string(variant)));
}

DilatationMode required_mode(Variant variant) {
    return variant == Variant::Majorant ? DilatationMode::Vanishing : DilatationMode::Standard;
}

// sum_{n=start}^{N} w(n) |c_n|^power x^n
template <typename Weight>
double weighted_sum(const TruncatedSeries& u, double x, int start, int power, Weight weight) {
    double s = 0.0;
    for (int n = u.order(); n >= start; --n) {
        const double c = std::abs(u[n]);
        s += weight(n) * (power == 2 ? c * c : c) * std::pow(x, n);
    }
    return s;
}

double abs_sum(const TruncatedSeries& u, double x, int start, int power = 1) {
    return weighted_sum(u, x, start, power, [](int) { return 1.0; });
}

// [a y + (1 - a y) log(1 - a y)] / (a^2 (1 - a y)), finite at a = 0 (limit y^2/2).
double scaled_log_defect(double a, double y) {
    const double t = a * y;
    if (t < 1e-2) {
        // sum_{n>=2} (1 - 1/n) a^{n-2} y^n
        double sum = 0.0;
        double term_base = y * y;
        for (int n = 2; n < 40; ++n) {
            const double term = (1.0 - 1.0 / n) * term_base;
            sum += term;
            if (term <= 1e-18 * sum) break;
            term_base *= t;
        }
        return sum;
    }
    return log_defect(t) / (a * a);
}

}  // namespace

HarmonicMappingModel::HarmonicMappingModel(TruncatedSeries h, TruncatedSeries g, DilatationMode mode,
                                           double k)
    : h_(std::move(h)), g_(std::move(g)), mode_(mode), k_(k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("HarmonicMappingModel: k must lie in [0, 1]");
    if (std::abs(g_[0]) > kZeroCoefficient)
        throw std::invalid_argument("HarmonicMappingModel: co-analytic part must vanish at 0");
    if (mode == DilatationMode::Vanishing && g_.order() >= 1 && std::abs(g_[1]) > kZeroCoefficient)
        throw std::invalid_argument("HarmonicMappingModel: vanishing mode requires b_1 = 0");
}

SchwarzFunction::SchwarzFunction(int degree, std::optional<BoundedFunction> factor)
    : degree_(degree), factor_(std::move(factor)) {
    if (degree < 1) throw std::invalid_argument("SchwarzFunction: degree must be >= 1");
}

Complex SchwarzFunction::operator()(Complex z) const {
    Complex w = std::pow(z, degree_);
    if (factor_) w *= (*factor_)(z);
    return w;
}

SchwarzTriple SchwarzTriple::monomial(int p, int m, int q) {
    return SchwarzTriple{SchwarzFunction(p), SchwarzFunction(m), SchwarzFunction(q)};
}

double eval_functional(Variant variant, const HarmonicMappingModel& mapping, const SchwarzTriple& schwarz,
                       double r, std::optional<double> mu) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("eval_functional: r must lie in [0, 1)");
    return eval_functional_at(variant, mapping, schwarz, Complex{r, 0.0}, mu);
}

double eval_functional_at(Variant variant, const HarmonicMappingModel& mapping, const SchwarzTriple& schwarz,
                          Complex z, std::optional<double> mu) {
    require_theorem_variant(variant, "eval_functional");
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("eval_functional: z must lie in the unit disk");
    if (mapping.mode() != required_mode(variant))
        throw std::invalid_argument(fmt::format("eval_functional: dilatation mode does not match variant {}",
                                                to_string(variant)));

    const auto& h = mapping.h();
    const auto& g = mapping.g();
    const double xp = std::abs(schwarz.omega_p(z));
    const double xm = std::abs(schwarz.omega_m(z));
    const double xq = std::abs(schwarz.omega_q(z));

    switch (variant) {
        case Variant::Majorant:
            return abs_sum(h, xp, 0) + (g.order() >= 2 ? abs_sum(g, xm, 2) : 0.0);
        case Variant::ValueDeriv:
        case Variant::ValueSqDeriv: {
            const Complex w = schwarz.omega_m(z);
            const double hw = std::abs(h.evaluate(w));
            const double dhw = std::abs(h.taylor_coefficient_at(w, 1));
            const double head = variant == Variant::ValueDeriv ? hw : hw * hw;
            const double tail_a = h.order() >= 2 ? abs_sum(h, xp, 2) : 0.0;
            return head + dhw * xq + tail_a + abs_sum(g, xp, 1);
        }
        case Variant::Refined: {
            const double weight = mu ? *mu
                                     : refined_constant(Params::from_dilatation(
                                           schwarz.omega_p.degree(), schwarz.omega_m.degree(),
                                           schwarz.omega_q.degree(), mapping.k()));
            const double a0 = std::abs(h[0]);
            const double sq = h.order() >= 1 ? abs_sum(h, xp * xp, 1, 2) : 0.0;
            const double area = h.order() >= 1
                                    ? weighted_sum(h, xm * xm, 1, 2, [](int n) { return double(n); })
                                    : 0.0;
            return abs_sum(h, xp, 0) + abs_sum(g, xp, 1) + (1.0 / (1.0 + a0) + xp / (1.0 - xp)) * sq +
                   weight * area;
        }
        default:
            break;
    }
    throw std::invalid_argument("eval_functional: unsupported variant");
}

double extremal_value(Variant variant, double a, const Params& params, double r, std::optional<double> mu) {
    require_theorem_variant(variant, "extremal_value");
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("extremal_value: a must lie in [0, 1)");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("extremal_value: r must lie in [0, 1)");

    const double k = params.k();
    const double x = std::pow(r, params.p());
    const double y = std::pow(r, params.m());
    const double rq = std::pow(r, params.q());

    switch (variant) {
        case Variant::Majorant: {
            const double h3 = (1.0 + a) * x / (1.0 - a * x) + (1.0 + a) * k * scaled_log_defect(a, y) - 1.0;
            return 1.0 + (1.0 - a) * h3;
        }
        case Variant::ValueDeriv: {
            const double d = 1.0 + a * y;
            const double f2 = (1.0 + a) * rq / (d * d) + (1.0 + a) * a * x * x / (1.0 - a * x) +
                              (1.0 + a) * k * x / (1.0 - a * x) - (1.0 - y) / d;
            return 1.0 + (1.0 - a) * f2;
        }
        case Variant::ValueSqDeriv: {
            const double d = 1.0 + a * y;
            const double f4 = -(1.0 - y * y - rq) / (d * d) + (k + a * x) * x / (1.0 - a * x);
            return 1.0 + (1.0 - a * a) * f4;
        }
        case Variant::Refined: {
            const double weight = mu ? *mu : refined_constant(params);
            const double w = y * y;
            const double e = 1.0 - a * a * w;
            const double f7 = (1.0 + k) * (1.0 + a) * x / (1.0 - a * x) +
                              (1.0 - a * a) * x * x / ((1.0 - x) * (1.0 - a * x)) +
                              (1.0 - a * a) * (1.0 + a) * weight * w / (e * e) - 1.0;
            return 1.0 + (1.0 - a) * f7;
        }
        default:
            break;
    }
    throw std::invalid_argument("extremal_value: unsupported variant");
}

HarmonicMappingModel extremal_mapping(Variant variant, double a, const Params& params, int order) {
    require_theorem_variant(variant, "extremal_mapping");
    if (order < 2) throw std::invalid_argument("extremal_mapping: order must be >= 2");
    const double k = params.k();
    auto h = expand(BoundedFunction::mobius(a), order);

    if (variant == Variant::Majorant) {
        // g' = k z h'
        const auto z = expand(BoundedFunction::monomial(1), order - 1);
        auto g = series_antiderivative(series_mul(z, series_derivative(h))).scaled(k);
        return HarmonicMappingModel(std::move(h), std::move(g), DilatationMode::Vanishing, k);
    }
    // g = k (h - a)
    std::vector<Complex> c(h.coeffs().begin(), h.coeffs().end());
    c[0] = 0.0;
    TruncatedSeries g(std::move(c), h.tail());
    return HarmonicMappingModel(std::move(h), g.scaled(k), DilatationMode::Standard, k);
}

SweepResult sharpness_sweep(Variant variant, const Params& params, double r, std::span<const double> a_grid,
                            std::optional<double> mu) {
    if (a_grid.empty()) throw std::invalid_argument("sharpness_sweep: empty a-grid");
    SweepResult best{extremal_value(variant, a_grid[0], params, r, mu), a_grid[0]};
    for (const double a : a_grid.subspan(1)) {
        const double v = extremal_value(variant, a, params, r, mu);
        if (v > best.max_value || (v == best.max_value && a < best.argmax_a)) best = {v, a};
    }
    return best;
}

std::vector<double> default_a_grid() {
    constexpr int kUniform = 1000;
    constexpr double kUniformEnd = 0.999;
    std::vector<double> grid;
    grid.reserve(kUniform + 120);
    for (int i = 0; i < kUniform; ++i) grid.push_back(kUniformEnd * i / (kUniform - 1));
    // 1 - 10^{-t} for t in (3, 9]
    for (int j = 1; j <= 120; ++j) grid.push_back(1.0 - std::pow(10.0, -(3.0 + j / 20.0)));
    return grid;
}

}  // namespace bohr
