#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated complex power series and the bounded test functions
 *        (Möbius automorphisms, finite Blaschke products, monomials) that
 *        expand into them.
 *
 * A TruncatedSeries stores c_0..c_N exactly. Optionally it carries a tail
 * bound T valid on a radius rho in (0,1):
 *
 *     sum_{n>N} |c_n| rho^n <= T
 *
 * which also gives |c_n| <= T / rho^n for every n > N. Every tail estimate
 * in this module is derived from that single inequality.
 */

#include <complex>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 256;
inline constexpr double kDefaultTailRadius = 0.96;

struct TailBound {
    double bound;   ///< upper bound for sum_{n>N} |c_n| radius^n
    double radius;  ///< in (0, 1)
};

class TruncatedSeries {
public:
    /// Throws std::invalid_argument on an empty coefficient vector,
    /// non-finite coefficients, or a malformed tail bound.
    explicit TruncatedSeries(std::vector<Complex> coeffs,
                             std::optional<TailBound> tail = std::nullopt);

    static TruncatedSeries zero(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    const Complex& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::optional<TailBound>& tail() const { return tail_; }

    /// Horner evaluation of the truncated polynomial.
    Complex evaluate(Complex z) const;

    /// f^{(n)}(z)/n! of the truncated polynomial.
    Complex taylor_coefficient_at(Complex z, int n) const;

    TruncatedSeries scaled(Complex factor) const;
    TruncatedSeries truncated(int order) const;

private:
    std::vector<Complex> coeffs_;
    std::optional<TailBound> tail_;
};

struct Mobius {
    double a;  // (a + z) / (1 + a z)
};

struct Blaschke {
    std::vector<Complex> zeros;  // rotation * prod (z - alpha) / (1 - conj(alpha) z)
    Complex rotation{1.0, 0.0};
};

struct Monomial {
    int degree;
};

/// A unit-norm analytic self-map of the disk with a closed form.
class BoundedFunction {
public:
    using Kind = std::variant<Mobius, Blaschke, Monomial>;

    static BoundedFunction mobius(double a);
    static BoundedFunction blaschke(std::vector<Complex> zeros, Complex rotation = {1.0, 0.0});
    static BoundedFunction monomial(int degree);

    const Kind& kind() const { return kind_; }

    /// Closed-form value; exact up to rounding, no truncation.
    Complex operator()(Complex z) const;

    Complex value_at_zero() const { return (*this)(Complex{0.0, 0.0}); }

private:
    explicit BoundedFunction(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/// Result of a majorant sum together with the truncation uncertainty, when known.
struct MajorantSum {
    double value;
    std::optional<double> uncertainty;
};

/// Taylor coefficients of f about 0 up to `order`, with a tail bound on
/// `tail_radius`.
TruncatedSeries expand(const BoundedFunction& f, int order,
                       double tail_radius = kDefaultTailRadius);

/// Cauchy product truncated at min(order(u), order(v)).
TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v);

TruncatedSeries series_antiderivative(const TruncatedSeries& u);

/// Throws std::invalid_argument for order-0 input.
TruncatedSeries series_derivative(const TruncatedSeries& u);

/// sum_{n=start}^{order} |c_n| x^n; rejects x outside [0, 1) and start outside [0, order].
MajorantSum abs_sum_at(const TruncatedSeries& u, double x, int start = 0);

/// Upper bound for sum_{n>N} n^index_power |c_n|^coeff_power x^n derived from
/// the tail metadata. coeff_power is 1 or 2, index_power 0 or 1. Returns
/// +inf when no tail is attached or the bound does not converge at x.
double tail_weighted_sum(const TruncatedSeries& u, double x, int coeff_power, int index_power);

}  // namespace bohr
