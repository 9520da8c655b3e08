#include "bipart/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bipart {

LogValue LogValue::from_double(double v) {
    if (!(v >= 0.0)) throw std::domain_error("LogValue::from_double: negative value");
    return v == 0.0 ? zero() : from_log(std::log(v));
}

double LogValue::to_double() const { return std::exp(log_); }

double log_damping(double z, double power) {
    // log1p(e^{-z}) underflows gracefully to 0 for large z.
    return -power * std::log1p(std::exp(-z));
}

LogValue asym_p(std::size_t n) {
    if (n == 0) throw std::domain_error("asym_p: n must be positive");
    const double x = static_cast<double>(n);
    return LogValue::from_log(2.0 * std::numbers::pi * std::sqrt(x / 6.0) -
                              std::log(4.0 * std::sqrt(3.0) * x));
}

LogValue asym_c(std::size_t n) {
    if (n == 0) throw std::domain_error("asym_c: n must be positive");
    const double x = static_cast<double>(n);
    return LogValue::from_log(std::numbers::pi * std::sqrt(x) - std::log(8.0) - 1.25 * std::log(x));
}

double f_saddle(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("f_saddle: x must lie in [0, 1]");
    return std::sqrt(1.0 - x) + std::sqrt(2.0 * x / 3.0);
}

SaddleMonotonicity check_f_saddle_monotone(double step) {
    if (!(step > 0.0 && step < 1.0)) throw std::domain_error("check_f_saddle_monotone: bad step");
    const auto count = static_cast<std::size_t>(std::llround(1.0 / step));
    // Grid points are i / count; the peak 2/5 is inserted explicitly so both
    // halves share it as an endpoint.
    std::vector<double> grid;
    for (std::size_t i = 0; i <= count; ++i) {
        grid.push_back(static_cast<double>(i) / static_cast<double>(count));
    }
    grid.push_back(0.4);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    SaddleMonotonicity out{true, true, grid.size()};
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double a = grid[i];
        const double b = grid[i + 1];
        const double fa = f_saddle(a);
        const double fb = f_saddle(b);
        if (b <= 0.4 && !(fa < fb)) out.increasing_before = false;
        if (a >= 0.4 && !(fa > fb)) out.decreasing_after = false;
    }
    return out;
}

LogValue asym_M(std::size_t k, std::size_t l) {
    if (l == 0) throw std::domain_error("asym_M: l must be positive");
    const double lf = static_cast<double>(l);
    const double kf = static_cast<double>(k);
    const double lead = std::log(std::numbers::pi / (12.0 * std::sqrt(2.0)));
    return LogValue::from_log(lead + 2.0 * std::numbers::pi * std::sqrt(lf / 6.0) - 1.5 * std::log(lf) +
                              log_damping(std::numbers::pi * kf / std::sqrt(6.0 * lf), 2.0));
}

LogValue asym_D(std::size_t m, std::size_t n) {
    if (m == 0 || m >= 2 * n) {
        throw std::domain_error("asym_D: requires 1 <= m < 2n so that min(m, 2n - m) >= 1");
    }
    const double mu = static_cast<double>(std::min(m, 2 * n - m));
    const double gap = std::fabs(static_cast<double>(n) - static_cast<double>(m));
    const double lead = std::log(5.0 * kRateC / 96.0);
    return LogValue::from_log(lead + kRateC * std::sqrt(mu) - 2.0 * std::log(mu) +
                              log_damping(kRateC * gap / (2.0 * std::sqrt(mu)), 2.0));
}

LogValue asym_pi(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw std::domain_error("asym_pi: requires min(m, n) >= 1");
    const double mu = static_cast<double>(std::min(m, n));
    const double gap = std::fabs(static_cast<double>(n) - static_cast<double>(m));
    const double lead = std::log(5.0 / 48.0);
    return LogValue::from_log(lead + kRateC * std::sqrt(mu) - 1.5 * std::log(mu) +
                              log_damping(kRateC * gap / (2.0 * std::sqrt(mu)), 1.0));
}

LogValue log_of_bigint(const BigInt& v) {
    if (sgn(v) <= 0) throw std::domain_error("log_of_bigint: value must be positive");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
    return LogValue::from_log(std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2);
}

}  // namespace bipart
