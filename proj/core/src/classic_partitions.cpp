#include "bipart/classic_partitions.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "bipart/series.hpp"

namespace bipart {

namespace {

const BigInt kZero{0};

}  // namespace

SequenceTable::SequenceTable(std::vector<BigInt> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("SequenceTable: table must hold at least index 0");
    }
}

const BigInt& SequenceTable::operator()(long n) const {
    if (n < 0) return kZero;
    if (n > max_index()) {
        throw std::out_of_range("sequence table covers indices up to " +
                                std::to_string(max_index()) + ", requested " +
                                std::to_string(n));
    }
    return values_[static_cast<std::size_t>(n)];
}

PartitionTable build_p_table(std::size_t max_n) {
    std::vector<BigInt> p(max_n + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        BigInt& acc = p[n];
        // p(n) = sum_{k >= 1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const std::size_t g2 = g1 + k;
            if (k % 2 == 1) {
                acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
    }
    return PartitionTable(std::move(p));
}

PartitionTable build_p_table_by_inversion(std::size_t max_n) {
    const BigSeries p = invert(euler_product(1, max_n));
    return PartitionTable(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()));
}

CubicTable build_c_table(std::size_t max_n, const PartitionTable& p) {
    if (p.max_index() < static_cast<long>(max_n)) {
        throw std::out_of_range("build_c_table: partition table too short");
    }
    std::vector<BigInt> c(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (std::size_t b = 0; 2 * b <= n; ++b) {
            mpz_addmul(c[n].get_mpz_t(), p(static_cast<long>(n - 2 * b)).get_mpz_t(),
                       p(static_cast<long>(b)).get_mpz_t());
        }
    }
    return CubicTable(std::move(c));
}

CubicTable build_c_table(std::size_t max_n) { return build_c_table(max_n, build_p_table(max_n)); }

CubicTable build_c_table_by_inversion(std::size_t max_n) {
    const BigSeries c = invert(mul(euler_product(1, max_n), euler_product(2, max_n)));
    return CubicTable(std::vector<BigInt>(c.coeffs().begin(), c.coeffs().end()));
}

}  // namespace bipart
