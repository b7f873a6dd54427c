#include "bohr/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bohr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// sum_{n>N} n q^n for 0 <= q < 1.
double index_weighted_geometric_tail(double q, int order) {
    const double n = order;
    return std::pow(q, n + 1.0) * ((n + 1.0) - n * q) / ((1.0 - q) * (1.0 - q));
}

// Tail of u re-expressed on a radius x <= rho.
std::optional<double> tail_on(const TruncatedSeries& u, double x) {
    const auto& t = u.tail();
    if (!t || x > t->radius) return std::nullopt;
    if (t->bound == 0.0 || x == 0.0) return 0.0;
    return t->bound * std::pow(x / t->radius, u.order() + 1.0);
}

double majorant(const TruncatedSeries& u, double x) {
    double s = 0.0;
    double xn = 1.0;
    for (const auto& c : u.coeffs()) {
        s += std::abs(c) * xn;
        xn *= x;
    }
    return s;
}

// Cauchy estimate |c_n| <= M(s)/s^n for a Blaschke product, optimised over s.
// On s <= 1 the sup-norm bound M = 1 applies; beyond the unit circle the
// factors are bounded by (s + |alpha|) / (1 - |alpha| s) up to 1/max|alpha|.
double blaschke_tail(const std::vector<Complex>& zeros, int order, double rho) {
    double max_mod = 0.0;
    for (const auto& z : zeros) max_mod = std::max(max_mod, std::abs(z));
    const double n1 = order + 1.0;

    auto log_bound = [&](double s, double log_m) {
        const double q = rho / s;
        return log_m + n1 * std::log(q) - std::log1p(-q);
    };

    double best = log_bound(1.0, 0.0);
    if (max_mod > 0.0) {
        const double outer = 1.0 / max_mod;
        constexpr int kSteps = 400;
        for (int i = 1; i < kSteps; ++i) {
            const double s = 1.0 + (outer - 1.0) * i / kSteps;
            double log_m = 0.0;
            for (const auto& z : zeros) {
                const double m = std::abs(z);
                log_m += std::log(s + m) - std::log1p(-m * s);
            }
            best = std::min(best, log_bound(s, log_m));
        }
    }
    return std::exp(best);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, std::optional<TailBound> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient sequence");
    for (const auto& c : coeffs_) {
        if (!is_finite(c)) throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
    }
    if (tail_) {
        if (!(tail_->bound >= 0.0) || !std::isfinite(tail_->bound))
            throw std::invalid_argument("TruncatedSeries: tail bound must be finite and >= 0");
        if (!(tail_->radius > 0.0 && tail_->radius < 1.0))
            throw std::invalid_argument("TruncatedSeries: tail radius must lie in (0, 1)");
    }
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries::zero: negative order");
    return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1),
                           TailBound{0.0, kDefaultTailRadius});
}

Complex TruncatedSeries::evaluate(Complex z) const {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex TruncatedSeries::taylor_coefficient_at(Complex z, int n) const {
    if (n < 0) throw std::invalid_argument("taylor_coefficient_at: negative derivative order");
    // sum_{j>=n} C(j, n) c_j z^{j-n}, Horner in z with running binomials.
    Complex acc{0.0, 0.0};
    for (int j = order(); j >= n; --j) {
        double binom = 1.0;
        for (int i = 1; i <= n; ++i) binom = binom * (j - n + i) / i;
        acc = acc * z + binom * coeffs_[static_cast<std::size_t>(j)];
    }
    return acc;
}

TruncatedSeries TruncatedSeries::scaled(Complex factor) const {
    std::vector<Complex> out(coeffs_);
    for (auto& c : out) c *= factor;
    std::optional<TailBound> t = tail_;
    if (t) t->bound *= std::abs(factor);
    return TruncatedSeries(std::move(out), t);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0) throw std::invalid_argument("truncated: negative order");
    if (new_order >= order()) return *this;
    std::vector<Complex> out(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    std::optional<TailBound> t = tail_;
    if (t) {
        double dropped = 0.0;
        for (int n = new_order + 1; n <= order(); ++n)
            dropped += std::abs(coeffs_[static_cast<std::size_t>(n)]) * std::pow(t->radius, n);
        t->bound += dropped;
    }
    return TruncatedSeries(std::move(out), t);
}

BoundedFunction BoundedFunction::mobius(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("mobius: parameter must lie in [0, 1)");
    return BoundedFunction(Mobius{a});
}

BoundedFunction BoundedFunction::blaschke(std::vector<Complex> zeros, Complex rotation) {
    for (const auto& z : zeros) {
        if (!is_finite(z) || !(std::abs(z) < 1.0))
            throw std::invalid_argument("blaschke: zeros must have modulus < 1");
    }
    if (!is_finite(rotation) || std::abs(std::abs(rotation) - 1.0) > 1e-12)
        throw std::invalid_argument("blaschke: rotation must be unimodular");
    return BoundedFunction(Blaschke{std::move(zeros), rotation});
}

BoundedFunction BoundedFunction::monomial(int degree) {
    if (degree < 1) throw std::invalid_argument("monomial: degree must be positive");
    return BoundedFunction(Monomial{degree});
}

Complex BoundedFunction::operator()(Complex z) const {
    struct Visitor {
        Complex z;
        Complex operator()(const Mobius& f) const { return (f.a + z) / (1.0 + f.a * z); }
        Complex operator()(const Blaschke& f) const {
            Complex acc = f.rotation;
            for (const auto& alpha : f.zeros) acc *= (z - alpha) / (1.0 - std::conj(alpha) * z);
            return acc;
        }
        Complex operator()(const Monomial& f) const { return std::pow(z, f.degree); }
    };
    return std::visit(Visitor{z}, kind_);
}

TruncatedSeries expand(const BoundedFunction& f, int order, double tail_radius) {
    if (order < 0) throw std::invalid_argument("expand: order must be >= 0");
    if (!(tail_radius > 0.0 && tail_radius < 1.0))
        throw std::invalid_argument("expand: tail radius must lie in (0, 1)");
    const auto n = static_cast<std::size_t>(order) + 1;

    struct Visitor {
        std::size_t n;
        int order;
        double rho;

        TruncatedSeries operator()(const Mobius& f) const {
            const double a = f.a;
            std::vector<Complex> c(n);
            c[0] = a;
            double an = 1.0 - a * a;  // (1 - a^2)(-a)^{k-1}
            for (std::size_t k = 1; k < n; ++k) {
                c[k] = an;
                an *= -a;
            }
            const double tail = (1.0 - a * a) * rho * std::pow(a * rho, order) / (1.0 - a * rho);
            return TruncatedSeries(std::move(c), TailBound{tail, rho});
        }

        TruncatedSeries operator()(const Monomial& f) const {
            std::vector<Complex> c(n);
            double tail = std::pow(rho, f.degree);
            if (f.degree <= order) {
                c[static_cast<std::size_t>(f.degree)] = 1.0;
                tail = 0.0;
            }
            return TruncatedSeries(std::move(c), TailBound{tail, rho});
        }

        TruncatedSeries operator()(const Blaschke& f) const {
            int zeros_at_origin = 0;
            for (const auto& z : f.zeros) {
                if (!(std::abs(z) < 1.0))
                    throw std::invalid_argument("expand: Blaschke zeros must have modulus < 1");
                if (z == Complex{0.0, 0.0}) ++zeros_at_origin;
            }
            std::vector<Complex> unit(n);
            unit[0] = f.rotation;
            TruncatedSeries acc(std::move(unit));
            for (const auto& alpha : f.zeros) {
                // (z - alpha) * sum (conj(alpha) z)^j
                std::vector<Complex> c(n);
                c[0] = -alpha;
                Complex power{1.0, 0.0};
                const double scale = 1.0 - std::norm(alpha);
                for (std::size_t k = 1; k < n; ++k) {
                    c[k] = power * scale;
                    power *= std::conj(alpha);
                }
                acc = series_mul(acc, TruncatedSeries(std::move(c)));
            }
            std::vector<Complex> coeffs(acc.coeffs().begin(), acc.coeffs().end());
            // rotation * z^d is a polynomial; its tail is exact.
            double tail = 0.0;
            if (zeros_at_origin == static_cast<int>(f.zeros.size())) {
                if (zeros_at_origin > order) tail = std::pow(rho, zeros_at_origin);
            } else {
                tail = blaschke_tail(f.zeros, order, rho);
            }
            return TruncatedSeries(std::move(coeffs), TailBound{tail, rho});
        }
    };
    return std::visit(Visitor{n, order, tail_radius}, f.kind());
}

TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int order = std::min(u.order(), v.order());
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) out[static_cast<std::size_t>(i + j)] += u[i] * v[j];
    }

    std::optional<TailBound> tail;
    if (u.tail() && v.tail()) {
        const double rho = std::min(u.tail()->radius, v.tail()->radius);
        const double tu = *tail_on(u, rho);
        const double tv = *tail_on(v, rho);
        // Products of retained coefficients that land beyond the new order.
        std::vector<double> weighted_v(static_cast<std::size_t>(v.order()) + 1);
        for (int j = 0; j <= v.order(); ++j) weighted_v[static_cast<std::size_t>(j)] = std::abs(v[j]) * std::pow(rho, j);
        double cross = 0.0;
        for (int i = 0; i <= u.order(); ++i) {
            double row = 0.0;
            for (int j = std::max(0, order + 1 - i); j <= v.order(); ++j) row += weighted_v[static_cast<std::size_t>(j)];
            cross += std::abs(u[i]) * std::pow(rho, i) * row;
        }
        const double bound = majorant(u, rho) * tv + tu * majorant(v, rho) + tu * tv + cross;
        tail = TailBound{bound, rho};
    }
    return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries series_antiderivative(const TruncatedSeries& u) {
    std::vector<Complex> out(static_cast<std::size_t>(u.order()) + 2);
    for (int n = 0; n <= u.order(); ++n) out[static_cast<std::size_t>(n) + 1] = u[n] / double(n + 1);
    std::optional<TailBound> tail = u.tail();
    if (tail) tail->bound *= tail->radius / (u.order() + 2.0);
    return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries series_derivative(const TruncatedSeries& u) {
    if (u.order() < 1) throw std::invalid_argument("series_derivative: order must be >= 1");
    std::vector<Complex> out(static_cast<std::size_t>(u.order()));
    for (int n = 1; n <= u.order(); ++n) out[static_cast<std::size_t>(n) - 1] = double(n) * u[n];

    // |c_n| <= T / rho^n beyond N, so the derivative's tail is controlled on rho^2.
    std::optional<TailBound> tail;
    if (const auto& t = u.tail()) {
        const double inner = t->radius * t->radius;
        tail = TailBound{t->bound / inner * index_weighted_geometric_tail(t->radius, u.order()), inner};
    }
    return TruncatedSeries(std::move(out), tail);
}

MajorantSum abs_sum_at(const TruncatedSeries& u, double x, int start) {
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("abs_sum_at: x must lie in [0, 1)");
    if (start < 0 || start > u.order())
        throw std::invalid_argument("abs_sum_at: start must lie in [0, order]");
    double s = 0.0;
    for (int n = u.order(); n >= start; --n) s += std::abs(u[n]) * std::pow(x, n);
    return MajorantSum{s, tail_on(u, x)};
}

double tail_weighted_sum(const TruncatedSeries& u, double x, int coeff_power, int index_power) {
    if (coeff_power < 1 || coeff_power > 2 || index_power < 0 || index_power > 1)
        throw std::invalid_argument("tail_weighted_sum: unsupported powers");
    const auto& t = u.tail();
    if (!t) return kInf;
    if (x == 0.0 || t->bound == 0.0) return 0.0;
    const double rho = t->radius;
    const int order = u.order();

    if (coeff_power == 1) {
        if (index_power == 0) {
            const auto on = tail_on(u, x);
            return on ? *on : kInf;
        }
        const double q = x / rho;
        return q < 1.0 ? t->bound * index_weighted_geometric_tail(q, order) : kInf;
    }
    if (index_power == 0) {
        // sum a_n^2 <= (sum a_n)^2 with a_n = |c_n| x^{n/2}
        const double sx = std::sqrt(x);
        if (sx > rho) return kInf;
        const double s = t->bound * std::pow(sx / rho, order + 1.0);
        return s * s;
    }
    const double q = x / (rho * rho);
    return q < 1.0 ? t->bound * t->bound * index_weighted_geometric_tail(q, order) : kInf;
}

}  // namespace bohr
