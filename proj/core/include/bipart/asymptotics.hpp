#ifndef BIPART_ASYMPTOTICS_HPP
#define BIPART_ASYMPTOTICS_HPP

#include <cmath>
#include <compare>
#include <cstddef>
#include <limits>
#include <numbers>

#include "bipart/bigint.hpp"

namespace bipart {

/// A positive real stored as its natural logarithm. The bottom value
/// (log = -inf) stands for 0.
class LogValue {
public:
    constexpr LogValue() = default;
    static constexpr LogValue from_log(double log_val) { return LogValue(log_val); }
    static LogValue from_double(double v);  // v >= 0
    static constexpr LogValue zero() { return LogValue(-std::numeric_limits<double>::infinity()); }

    constexpr double log() const noexcept { return log_; }
    constexpr bool is_zero() const noexcept { return log_ == -std::numeric_limits<double>::infinity(); }

    /// exp(log()); overflows to +inf for large values.
    double to_double() const;

    friend constexpr LogValue operator*(LogValue a, LogValue b) { return LogValue(a.log_ + b.log_); }
    friend constexpr LogValue operator/(LogValue a, LogValue b) { return LogValue(a.log_ - b.log_); }
    friend constexpr auto operator<=>(LogValue a, LogValue b) = default;

private:
    constexpr explicit LogValue(double log_val) : log_(log_val) {}
    double log_ = 0.0;  // represents 1
};

/// c = 2 pi sqrt(5/12), the exponential rate for pi(m, n) and D(m, n).
inline const double kRateC = 2.0 * std::numbers::pi * std::sqrt(5.0 / 12.0);
/// kappa = 2^-4 3^-3/2 5^5/2, minus the quadratic coefficient of f at 2/5.
inline const double kKappa = std::pow(2.0, -4) * std::pow(3.0, -1.5) * std::pow(5.0, 2.5);

/// Hardy-Ramanujan: p(n) ~ e^{2 pi sqrt(n/6)} / (4 sqrt(3) n). n >= 1.
LogValue asym_p(std::size_t n);

/// Cubic partitions: c(n) ~ e^{pi sqrt(n)} / (8 n^{5/4}). n >= 1.
LogValue asym_c(std::size_t n);

/// f(x) = sqrt(1 - x) + sqrt(2x/3) on [0, 1]. Throws std::domain_error outside.
double f_saddle(double x);

/// Sampled monotonicity of f_saddle: increasing on [0, 2/5], decreasing on
/// [2/5, 1], checked on a uniform grid.
struct SaddleMonotonicity {
    bool increasing_before = false;
    bool decreasing_after = false;
    std::size_t samples = 0;
};
SaddleMonotonicity check_f_saddle_monotone(double step);

/// M(k, k + l) ~ pi/(12 sqrt 2) (1 + e^{-pi k / sqrt(6 l)})^{-2} e^{2 pi sqrt(l/6)} / l^{3/2}.
/// Throws std::domain_error if l == 0.
LogValue asym_M(std::size_t k, std::size_t l);

/// Uniform D(m, n) asymptotic with mu = min(m, 2n - m):
///   (5c/96) e^{c sqrt(mu)} / mu^2 (1 + e^{-c |n - m| / (2 sqrt(mu))})^{-2}.
/// Throws std::domain_error unless 1 <= m < 2n.
LogValue asym_D(std::size_t m, std::size_t n);

/// Uniform pi(m, n) asymptotic with mu = min(m, n):
///   (5/48) e^{c sqrt(mu)} / mu^{3/2} (1 + e^{-c |n - m| / (2 sqrt(mu))})^{-1}.
/// Equals the tabulated A(m, n) when m <= n. Throws std::domain_error if
/// min(m, n) == 0.
LogValue asym_pi(std::size_t m, std::size_t n);

/// Natural log of a positive big integer, to double precision.
/// Throws std::domain_error for v <= 0.
LogValue log_of_bigint(const BigInt& v);

/// log((1 + e^{-z})^{-power}) for z >= 0, stable for large z.
double log_damping(double z, double power);

}  // namespace bipart

#endif  // BIPART_ASYMPTOTICS_HPP
