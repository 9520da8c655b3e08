#ifndef BIPART_SERIES_HPP
#define BIPART_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "bipart/bigint.hpp"

namespace bipart {

/// Truncated power series in q with big-integer coefficients.
///
/// Holds the coefficients of q^0 .. q^N, where N is the (inclusive)
/// truncation order. Binary operations on series of different orders
/// produce a result at the smaller order.
class BigSeries {
public:
    /// Zero series of order `order`.
    explicit BigSeries(std::size_t order);

    /// Series whose coefficients are `coeffs`; the order is coeffs.size() - 1.
    /// Throws std::invalid_argument if `coeffs` is empty.
    explicit BigSeries(std::vector<BigInt> coeffs);

    /// The constant series 1 at the given order.
    static BigSeries one(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const BigInt& operator[](std::size_t j) const { return coeffs_[j]; }
    BigInt& operator[](std::size_t j) { return coeffs_[j]; }

    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Copy truncated to a smaller order. Throws if `order` exceeds order().
    BigSeries truncated(std::size_t order) const;

    /// Multiplies in place by 1/(1 - q^step).
    void divide_by_one_minus_power(std::size_t step);

    friend bool operator==(const BigSeries&, const BigSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Schoolbook product truncated at min(a.order(), b.order()).
BigSeries mul(const BigSeries& a, const BigSeries& b);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
/// Throws std::domain_error for any other constant term.
BigSeries invert(const BigSeries& a);

/// (q^s; q^s)_inf = prod_{j >= 1} (1 - q^{s j}) truncated at `order`.
/// Built from Euler's pentagonal number theorem. Throws std::invalid_argument
/// if `step` is 0.
BigSeries euler_product(std::size_t step, std::size_t order);

/// Same product as euler_product, expanded factor by factor. Used as an
/// independent check of the pentagonal construction.
BigSeries euler_product_direct(std::size_t step, std::size_t order);

/// Box-truncated power series in two variables x, y.
///
/// Stores coefficients of x^i y^j for 0 <= i <= max_x, 0 <= j <= max_y.
class BiSeries {
public:
    BiSeries(std::size_t max_x, std::size_t max_y);

    static BiSeries one(std::size_t max_x, std::size_t max_y);

    std::size_t max_x() const noexcept { return max_x_; }
    std::size_t max_y() const noexcept { return max_y_; }

    const BigInt& operator()(std::size_t i, std::size_t j) const {
        return coeffs_[i * (max_y_ + 1) + j];
    }
    BigInt& operator()(std::size_t i, std::size_t j) { return coeffs_[i * (max_y_ + 1) + j]; }

    /// Multiplies in place by 1/(1 - x^dx y^dy). (dx, dy) must not be (0, 0).
    void divide_by_one_minus_monomial(std::size_t dx, std::size_t dy);

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    std::size_t max_x_;
    std::size_t max_y_;
    std::vector<BigInt> coeffs_;
};

/// Box-truncated product. Throws std::invalid_argument on shape mismatch.
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);

/// Power series in q truncated at q^N whose coefficients are Laurent
/// polynomials in zeta with exponents in [-N, N].
///
/// The coefficient of zeta^m q^n lives at storage index (m + N, n).
class LaurentQSeries {
public:
    explicit LaurentQSeries(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    long zeta_span() const noexcept { return static_cast<long>(order_); }

    /// Coefficient of zeta^m q^n; |m| <= order(), n <= order().
    const BigInt& at(long m, std::size_t n) const { return coeffs_[index(m, n)]; }
    BigInt& at(long m, std::size_t n) { return coeffs_[index(m, n)]; }

    /// Multiplies in place by a series in q alone (zeta-free).
    void mul_q_series(const BigSeries& s);

    /// Multiplies in place by 1/(1 - zeta^e q^j) with j >= 1. Terms whose zeta
    /// exponent leaves [-N, N] are dropped.
    void divide_by_one_minus(long zeta_exp, std::size_t q_exp);

    friend bool operator==(const LaurentQSeries&, const LaurentQSeries&) = default;

private:
    std::size_t index(long m, std::size_t n) const {
        return static_cast<std::size_t>(m + zeta_span()) * (order_ + 1) + n;
    }

    std::size_t order_;
    std::vector<BigInt> coeffs_;
};

}  // namespace bipart

#endif  // BIPART_SERIES_HPP
