#include "bipart/crank.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "bipart/classic_partitions.hpp"

namespace bipart {

namespace {

const BigInt kZero{0};

struct SparseTerm {
    std::size_t exponent;
    long coeff;
};

// Zeta^m column of T(zeta, q) = sum_{n != 0} (-1)^n q^{n(n+1)/2} / (1 - zeta q^n),
// with each denominator expanded as a geometric series in the direction that
// converges as a power series in q:
//   n >= 1:       sum_{r >= 0} zeta^r q^{n r}
//   n = -k <= -1: -sum_{r >= 1} zeta^{-r} q^{k r}
// Column m >= 0 is sum_{n >= 1} (-1)^n q^{n(n+1)/2 + n m};
// column m = -r < 0 is sum_{k >= 1} (-1)^{k+1} q^{k(k-1)/2 + k r}.
void append_t_column(long m, std::size_t order, long scale, std::vector<SparseTerm>& out) {
    if (m >= 0) {
        const auto um = static_cast<std::size_t>(m);
        for (std::size_t n = 1;; ++n) {
            const std::size_t e = n * (n + 1) / 2 + n * um;
            if (e > order) break;
            out.push_back({e, scale * ((n % 2 == 0) ? 1 : -1)});
        }
    } else {
        const auto r = static_cast<std::size_t>(-m);
        for (std::size_t k = 1;; ++k) {
            const std::size_t e = k * (k - 1) / 2 + k * r;
            if (e > order) break;
            out.push_back({e, scale * ((k % 2 == 1) ? 1 : -1)});
        }
    }
}

// Zeta^m column of S = 1 + (1 - zeta) T, i.e. the Lambert sum with the n = 0
// term (1 - zeta)/(1 - zeta) = 1 already cancelled.
std::vector<SparseTerm> lambert_column(long m, std::size_t order) {
    std::vector<SparseTerm> terms;
    if (m == 0) terms.push_back({0, 1});
    append_t_column(m, order, 1, terms);
    append_t_column(m - 1, order, -1, terms);
    return terms;
}

std::vector<BigInt> column_times_p(const std::vector<SparseTerm>& terms, std::size_t first_n,
                                   std::size_t order, const PartitionTable& p) {
    std::vector<BigInt> col(order + 1 - first_n);
    for (std::size_t n = first_n; n <= order; ++n) {
        BigInt& acc = col[n - first_n];
        for (const SparseTerm& t : terms) {
            if (t.exponent > n) continue;
            const BigInt& pv = p(static_cast<long>(n - t.exponent));
            if (t.coeff > 0) {
                mpz_addmul_ui(acc.get_mpz_t(), pv.get_mpz_t(), static_cast<unsigned long>(t.coeff));
            } else {
                mpz_submul_ui(acc.get_mpz_t(), pv.get_mpz_t(), static_cast<unsigned long>(-t.coeff));
            }
        }
    }
    return col;
}

}  // namespace

CrankTable::CrankTable(std::size_t max_order) : max_order_(max_order), columns_(max_order + 1) {}

bool CrankTable::has_column(long m) const noexcept {
    const auto am = static_cast<std::size_t>(std::labs(m));
    return am <= max_order_ && !columns_[am].empty();
}

const BigInt& CrankTable::value(long m, long n) const {
    if (n < 0 || static_cast<std::size_t>(n) > max_order_) {
        throw std::out_of_range("crank table covers orders 0.." + std::to_string(max_order_) +
                                ", requested n = " + std::to_string(n));
    }
    const long am = std::labs(m);
    if (am > n) return kZero;
    const auto& col = columns_[static_cast<std::size_t>(am)];
    if (col.empty()) {
        throw std::out_of_range("crank column " + std::to_string(am) + " was not built");
    }
    return col[static_cast<std::size_t>(n - am)];
}

LaurentQSeries expand_crank_product(std::size_t order) {
    LaurentQSeries s(order);
    const BigSeries numerator = euler_product(1, order);
    for (std::size_t n = 0; n <= order; ++n) s.at(0, n) = numerator[n];
    for (std::size_t j = 1; j <= order; ++j) {
        s.divide_by_one_minus(1, j);
        s.divide_by_one_minus(-1, j);
    }
    return s;
}

LaurentQSeries expand_crank_lambert(std::size_t order) {
    const long span = static_cast<long>(order);
    LaurentQSeries t(order);
    for (std::size_t n = 1; n * (n + 1) / 2 <= order; ++n) {
        const long sign = (n % 2 == 0) ? 1 : -1;
        for (std::size_t r = 0;; ++r) {
            const std::size_t e = n * (n + 1) / 2 + n * r;
            if (e > order) break;
            t.at(static_cast<long>(r), e) += sign;
        }
    }
    for (std::size_t k = 1;; ++k) {
        const std::size_t base = k * (k - 1) / 2;
        if (base + k > order) break;
        const long sign = (k % 2 == 1) ? 1 : -1;
        for (std::size_t r = 1;; ++r) {
            const std::size_t e = base + k * r;
            if (e > order) break;
            t.at(-static_cast<long>(r), e) += sign;
        }
    }

    // S = 1 + (1 - zeta) T. T has support |m| <= n, so the zeta^{N+1} column
    // of zeta*T vanishes below q^{N+1} and nothing is lost at the clamp.
    LaurentQSeries s(order);
    for (long m = -span; m <= span; ++m) {
        for (std::size_t n = 0; n <= order; ++n) {
            BigInt v = t.at(m, n);
            if (m - 1 >= -span) v -= t.at(m - 1, n);
            s.at(m, n) = std::move(v);
        }
    }
    s.at(0, 0) += 1;

    s.mul_q_series(invert(euler_product(1, order)));
    return s;
}

CrankTable crank_table_from_expansion(const LaurentQSeries& expansion) {
    const std::size_t order = expansion.order();
    CrankTable table(order);
    for (std::size_t n = 0; n <= order; ++n) {
        for (long m = 1; m <= static_cast<long>(order); ++m) {
            if (expansion.at(m, n) != expansion.at(-m, n)) {
                throw std::logic_error("crank expansion is not symmetric in zeta at (m, n) = (" +
                                       std::to_string(m) + ", " + std::to_string(n) + ")");
            }
            if (static_cast<std::size_t>(m) > n && sgn(expansion.at(m, n)) != 0) {
                throw std::logic_error("crank expansion has support outside |m| <= n at (m, n) = (" +
                                       std::to_string(m) + ", " + std::to_string(n) + ")");
            }
        }
    }
    for (std::size_t m = 0; m <= order; ++m) {
        auto& col = table.columns_[m];
        col.reserve(order + 1 - m);
        for (std::size_t n = m; n <= order; ++n) col.push_back(expansion.at(static_cast<long>(m), n));
    }
    return table;
}

CrankTable build_crank_table(std::size_t order, CrankExpansion method) {
    if (method == CrankExpansion::kProductQuotient) {
        return crank_table_from_expansion(expand_crank_product(order));
    }
    std::vector<std::size_t> all(order + 1);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return build_crank_columns(order, all);
}

CrankTable build_crank_columns(std::size_t order, std::span<const std::size_t> columns) {
    CrankTable table(order);
    const PartitionTable p = build_p_table(order);
    for (std::size_t m : columns) {
        if (m > order) {
            throw std::out_of_range("build_crank_columns: column " + std::to_string(m) +
                                    " exceeds order " + std::to_string(order));
        }
        if (!table.columns_[m].empty()) continue;
        table.columns_[m] = column_times_p(lambert_column(static_cast<long>(m), order), m, order, p);
    }
    return table;
}

}  // namespace bipart
