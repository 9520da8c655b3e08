#include "bipart/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bipart {

namespace {

void add_product(BigInt& acc, const BigInt& a, const BigInt& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

BigSeries::BigSeries(std::size_t order) : coeffs_(order + 1) {}

BigSeries::BigSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("BigSeries: coefficient vector must be non-empty");
    }
}

BigSeries BigSeries::one(std::size_t order) {
    BigSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

BigSeries BigSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw std::invalid_argument("BigSeries::truncated: order exceeds series order");
    }
    return BigSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void BigSeries::divide_by_one_minus_power(std::size_t step) {
    if (step == 0) {
        throw std::invalid_argument("divide_by_one_minus_power: step must be positive");
    }
    for (std::size_t n = step; n < coeffs_.size(); ++n) {
        coeffs_[n] += coeffs_[n - step];
    }
}

BigSeries mul(const BigSeries& a, const BigSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    BigSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            add_product(out[i + j], a[i], b[j]);
        }
    }
    return out;
}

BigSeries invert(const BigSeries& a) {
    const BigInt& a0 = a[0];
    if (a0 != 1 && a0 != -1) {
        throw std::domain_error("invert: constant term must be +1 or -1");
    }
    const std::size_t order = a.order();
    BigSeries b(order);
    // a0 is its own inverse.
    b[0] = a0;
    BigInt acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(a[k]) == 0) continue;
            add_product(acc, a[k], b[n - k]);
        }
        b[n] = -a0 * acc;
    }
    return b;
}

BigSeries euler_product(std::size_t step, std::size_t order) {
    if (step == 0) {
        throw std::invalid_argument("euler_product: exponent step must be positive");
    }
    BigSeries out = BigSeries::one(order);
    // sum over k in Z of (-1)^k q^{step k(3k-1)/2}
    for (std::size_t k = 1;; ++k) {
        const std::size_t g1 = step * (k * (3 * k - 1) / 2);
        if (g1 > order) break;
        const int sign = (k % 2 == 1) ? -1 : 1;
        out[g1] += sign;
        const std::size_t g2 = step * (k * (3 * k + 1) / 2);
        if (g2 <= order) out[g2] += sign;
    }
    return out;
}

BigSeries euler_product_direct(std::size_t step, std::size_t order) {
    if (step == 0) {
        throw std::invalid_argument("euler_product_direct: exponent step must be positive");
    }
    BigSeries out = BigSeries::one(order);
    for (std::size_t e = step; e <= order; e += step) {
        for (std::size_t n = order; n >= e; --n) {
            out[n] -= out[n - e];
        }
    }
    return out;
}

BiSeries::BiSeries(std::size_t max_x, std::size_t max_y)
    : max_x_(max_x), max_y_(max_y), coeffs_((max_x + 1) * (max_y + 1)) {}

BiSeries BiSeries::one(std::size_t max_x, std::size_t max_y) {
    BiSeries s(max_x, max_y);
    s(0, 0) = 1;
    return s;
}

void BiSeries::divide_by_one_minus_monomial(std::size_t dx, std::size_t dy) {
    if (dx == 0 && dy == 0) {
        throw std::invalid_argument("divide_by_one_minus_monomial: monomial must be non-constant");
    }
    // Row-major ascending order visits (i - dx, j - dy) before (i, j).
    for (std::size_t i = dx; i <= max_x_; ++i) {
        for (std::size_t j = dy; j <= max_y_; ++j) {
            (*this)(i, j) += (*this)(i - dx, j - dy);
        }
    }
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    if (a.max_x() != b.max_x() || a.max_y() != b.max_y()) {
        throw std::invalid_argument("bi_mul: box shapes differ");
    }
    const std::size_t mx = a.max_x();
    const std::size_t my = a.max_y();
    BiSeries out(mx, my);
    for (std::size_t i1 = 0; i1 <= mx; ++i1) {
        for (std::size_t j1 = 0; j1 <= my; ++j1) {
            const BigInt& lhs = a(i1, j1);
            if (sgn(lhs) == 0) continue;
            for (std::size_t i2 = 0; i1 + i2 <= mx; ++i2) {
                for (std::size_t j2 = 0; j1 + j2 <= my; ++j2) {
                    add_product(out(i1 + i2, j1 + j2), lhs, b(i2, j2));
                }
            }
        }
    }
    return out;
}

LaurentQSeries::LaurentQSeries(std::size_t order)
    : order_(order), coeffs_((2 * order + 1) * (order + 1)) {}

void LaurentQSeries::mul_q_series(const BigSeries& s) {
    const long span = zeta_span();
    const std::size_t top = std::min(order_, s.order());
    BigInt acc;
    for (long m = -span; m <= span; ++m) {
        BigInt* row = &coeffs_[index(m, 0)];
        // Descending n keeps row[n - k] (k >= 1) unmodified while row[n] is formed.
        for (std::size_t n = order_ + 1; n-- > 0;) {
            if (n > top) {
                row[n] = 0;
                continue;
            }
            acc = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                if (sgn(s[k]) == 0 || sgn(row[n - k]) == 0) continue;
                add_product(acc, s[k], row[n - k]);
            }
            row[n] = acc;
        }
    }
}

void LaurentQSeries::divide_by_one_minus(long zeta_exp, std::size_t q_exp) {
    if (q_exp == 0) {
        throw std::invalid_argument("LaurentQSeries::divide_by_one_minus: q exponent must be positive");
    }
    const long span = zeta_span();
    for (std::size_t n = q_exp; n <= order_; ++n) {
        for (long m = -span; m <= span; ++m) {
            const long src = m - zeta_exp;
            if (src < -span || src > span) continue;
            const BigInt& prev = at(src, n - q_exp);
            if (sgn(prev) != 0) at(m, n) += prev;
        }
    }
}

}  // namespace bipart
