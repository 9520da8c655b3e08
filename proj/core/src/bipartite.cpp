#include "bipart/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "bipart/series.hpp"

namespace bipart {

bool SteadyPair::is_valid() const noexcept {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto [a, b] = parts[i];
        if (a == 0 && b == 0) return false;
        if (i + 1 < parts.size()) {
            const auto [na, nb] = parts[i + 1];
            if (std::min(a, b) < std::max(na, nb)) return false;
        }
    }
    return true;
}

BipartiteTable::BipartiteTable(std::size_t max_m, std::size_t max_n)
    : max_m_(max_m), max_n_(max_n), values_((max_m + 1) * (max_n + 1)) {}

BigInt alpha(std::size_t s, std::size_t k, const PartitionTable& p) {
    if (p.max_index() < static_cast<long>(k)) {
        throw std::out_of_range("alpha: partition table does not cover k = " + std::to_string(k));
    }
    BigInt out;
    for (std::size_t l = 0;; ++l) {
        const std::size_t shift = l * (l + 1) / 2 + l * s;
        if (shift > k) break;
        const BigInt& term = p(static_cast<long>(k - shift));
        if (l % 2 == 0) {
            out += term;
        } else {
            out -= term;
        }
    }
    return out;
}

const BigInt& AlphaCache::get(std::size_t s, std::size_t k) {
    const auto key = std::make_pair(s, k);
    auto it = values_.find(key);
    if (it == values_.end()) it = values_.emplace(key, alpha(s, k, *p_)).first;
    return it->second;
}

namespace {

template <class AlphaFn>
BigInt pi_sum(std::size_t m, std::size_t n, const CubicTable& c, AlphaFn&& alpha_at) {
    const std::size_t mu = std::min(m, n);
    const std::size_t s = (m > n) ? m - n : n - m;
    if (c.max_index() < static_cast<long>(mu)) {
        throw std::out_of_range("pi_value: cubic table does not cover min(m, n) = " +
                                std::to_string(mu));
    }
    BigInt out;
    for (std::size_t k = 0; k <= mu; ++k) {
        const BigInt& a = alpha_at(s, k);
        if (sgn(a) == 0) continue;
        mpz_addmul(out.get_mpz_t(), c(static_cast<long>(mu - k)).get_mpz_t(), a.get_mpz_t());
    }
    return out;
}

}  // namespace

BigInt pi_value(std::size_t m, std::size_t n, const CubicTable& c, const PartitionTable& p) {
    return pi_sum(m, n, c, [&p](std::size_t s, std::size_t k) { return alpha(s, k, p); });
}

BigInt pi_value(std::size_t m, std::size_t n, const CubicTable& c, AlphaCache& alphas) {
    return pi_sum(m, n, c,
                  [&alphas](std::size_t s, std::size_t k) -> const BigInt& { return alphas.get(s, k); });
}

BigInt d_value(std::size_t m, std::size_t n, const CubicTable& c, const CrankTable& crank) {
    if (m > 2 * n) return 0;
    const std::size_t level = std::min(2 * n - m, m);
    const std::size_t first = n - level;  // crank column and starting order
    if (c.max_index() < static_cast<long>(level)) {
        throw std::out_of_range("d_value: cubic table does not cover L = " + std::to_string(level));
    }
    if (crank.max_order() < n) {
        throw std::out_of_range("d_value: crank table does not reach order n = " + std::to_string(n));
    }
    BigInt out;
    for (std::size_t k = 0; k <= level; ++k) {
        const BigInt& mv = crank.value(static_cast<long>(first), static_cast<long>(first + k));
        if (sgn(mv) == 0) continue;
        mpz_addmul(out.get_mpz_t(), c(static_cast<long>(level - k)).get_mpz_t(), mv.get_mpz_t());
    }
    return out;
}

BigInt d_value_by_difference(std::size_t m, std::size_t n, const CubicTable& c,
                             const PartitionTable& p) {
    BigInt out = pi_value(m, n, c, p);
    if (m > 0) out -= pi_value(m - 1, n, c, p);
    return out;
}

namespace {

class SteadyWalker {
public:
    SteadyWalker(bool collect, SteadyEnumeration& out) : collect_(collect), out_(out) {}

    void walk(std::size_t rem_m, std::size_t rem_n, std::size_t bound) {
        if (rem_m == 0 && rem_n == 0) {
            ++out_.count;
            if (collect_) out_.pairs.push_back(current_);
            return;
        }
        const std::size_t top_a = std::min(bound, rem_m);
        const std::size_t top_b = std::min(bound, rem_n);
        for (std::size_t a = 0; a <= top_a; ++a) {
            for (std::size_t b = (a == 0) ? 1 : 0; b <= top_b; ++b) {
                if (collect_) current_.parts.emplace_back(a, b);
                walk(rem_m - a, rem_n - b, std::min(a, b));
                if (collect_) current_.parts.pop_back();
            }
        }
    }

private:
    bool collect_;
    SteadyEnumeration& out_;
    SteadyPair current_;
};

}  // namespace

SteadyEnumeration enumerate_steady(std::size_t m, std::size_t n, bool collect, std::size_t cap) {
    if (m + n > cap) {
        throw std::invalid_argument("enumerate_steady: weight m + n = " + std::to_string(m + n) +
                                    " exceeds the enumeration cap " + std::to_string(cap));
    }
    SteadyEnumeration out;
    SteadyWalker walker(collect, out);
    walker.walk(m, n, std::numeric_limits<std::size_t>::max());
    return out;
}

BipartiteTable gf_table(std::size_t max_m, std::size_t max_n, std::size_t cap) {
    if (max_m > cap || max_n > cap) {
        throw std::invalid_argument("gf_table: box " + std::to_string(max_m) + "x" +
                                    std::to_string(max_n) + " exceeds the product cap " +
                                    std::to_string(cap));
    }
    BiSeries s = BiSeries::one(max_m, max_n);
    // 1/(x; xy)_inf: factor j has monomial x^{j+1} y^j, inside the box iff
    // j + 1 <= max_m and j <= max_n.
    for (std::size_t j = 0; j + 1 <= max_m && j <= max_n; ++j) {
        s.divide_by_one_minus_monomial(j + 1, j);
    }
    // 1/(y; xy)_inf: monomial x^j y^{j+1}, inside iff j <= max_m and j + 1 <= max_n.
    for (std::size_t j = 0; j <= max_m && j + 1 <= max_n; ++j) {
        s.divide_by_one_minus_monomial(j, j + 1);
    }
    // 1/(x^2y^2; x^2y^2)_inf: monomial x^{2j} y^{2j}, j >= 1, inside iff 2j <= min(max_m, max_n).
    for (std::size_t j = 1; 2 * j <= std::min(max_m, max_n); ++j) {
        s.divide_by_one_minus_monomial(2 * j, 2 * j);
    }
    BipartiteTable table(max_m, max_n);
    for (std::size_t i = 0; i <= max_m; ++i) {
        for (std::size_t j = 0; j <= max_n; ++j) table(i, j) = s(i, j);
    }
    return table;
}

BipartiteTable pi_table(std::size_t max_m, std::size_t max_n, const CubicTable& c,
                        const PartitionTable& p) {
    BipartiteTable table(max_m, max_n);
    AlphaCache alphas(p);
    for (std::size_t m = 0; m <= max_m; ++m) {
        for (std::size_t n = 0; n <= max_n; ++n) table(m, n) = pi_value(m, n, c, alphas);
    }
    return table;
}

}  // namespace bipart
