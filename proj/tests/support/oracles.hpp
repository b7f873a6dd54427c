#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library: every formula is written out directly from the
// defining equations, and roots come from a plain fixed-step sign scan.

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace oracle {

enum class Eq { Majorant, ValueDeriv, ValueSqDeriv, Refined, CapRmq, CapR2mq, CapThirdRoot };

inline double dilatation_k(double K) { return std::isinf(K) ? 1.0 : (K - 1.0) / (K + 1.0); }

// sum_{n>=2} (1 - 1/n) y^n, summed term by term.
inline double log_defect_series(double y) {
    double sum = 0.0;
    double yn = y;
    for (int n = 2; n < 200000; ++n) {
        yn *= y;
        const double term = (1.0 - 1.0 / n) * yn;
        sum += term;
        if (term < 1e-18 * (sum > 0 ? sum : 1.0)) break;
    }
    return sum;
}

inline double value(Eq eq, int p, int m, int q, double K, double r) {
    const double k = dilatation_k(K);
    const double x = std::pow(r, p);
    const double y = std::pow(r, m);
    const double rq = std::pow(r, q);
    switch (eq) {
        case Eq::Majorant: {
            const double defect = y < 0.5 ? log_defect_series(y) : y / (1.0 - y) + std::log(1.0 - y);
            return 2.0 * x / (1.0 - x) + 2.0 * k * defect - 1.0;
        }
        case Eq::ValueDeriv:
            return 2.0 * rq / (1.0 + y) + 2.0 * (k + x) * (1.0 + y) * x / (1.0 - x) - (1.0 - y);
        case Eq::ValueSqDeriv:
            return -(1.0 - y * y - rq) / ((1.0 + y) * (1.0 + y)) + (x + k) * x / (1.0 - x);
        case Eq::Refined: return (2.0 * k + 3.0) * x - 1.0;
        case Eq::CapRmq: return y * y + 2.0 * rq - 1.0;
        case Eq::CapR2mq: return y * y + rq - 1.0;
        case Eq::CapThirdRoot: return 3.0 * y - 1.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// First grid cell [r_i, r_i + step] on which the function turns non-negative;
// returns its midpoint.
template <class F>
std::optional<double> scan_root(F f, double step = 1e-6, double upper = 1.0 - 1e-9) {
    double prev = 0.0;
    for (long i = 1;; ++i) {
        const double r = std::min(i * step, upper);
        if (f(r) >= 0.0) return 0.5 * (prev + r);
        if (r >= upper) return std::nullopt;
        prev = r;
    }
}

inline std::optional<double> scan_root(Eq eq, int p, int m, int q, double K, double step = 1e-6) {
    return scan_root([&](double r) { return value(eq, p, m, q, K, r); }, step);
}

// Direct sums over the Möbius coefficients a_0 = a, a_n = (1 - a^2)(-a)^{n-1}.
inline double mobius_coeff_abs(double a, int n) {
    return n == 0 ? a : (1.0 - a * a) * std::pow(a, n - 1);
}

}  // namespace oracle
