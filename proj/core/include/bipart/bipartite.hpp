#ifndef BIPART_BIPARTITE_HPP
#define BIPART_BIPARTITE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bipart/bigint.hpp"
#include "bipart/classic_partitions.hpp"
#include "bipart/crank.hpp"

namespace bipart {

/// A partition of the bipartite number (m, n) into steadily decreasing
/// part-pairs: min(a_i, b_i) >= max(a_{i+1}, b_{i+1}). Parts may be zero
/// individually but a (0, 0) pair never appears.
struct SteadyPair {
    std::vector<std::pair<unsigned, unsigned>> parts;

    /// True when the sequence satisfies the steadily decreasing condition
    /// and contains no (0, 0) pair.
    bool is_valid() const noexcept;

    friend bool operator==(const SteadyPair&, const SteadyPair&) = default;
};

/// pi(m, n) over the box 0 <= m <= max_m, 0 <= n <= max_n.
class BipartiteTable {
public:
    BipartiteTable(std::size_t max_m, std::size_t max_n);

    std::size_t max_m() const noexcept { return max_m_; }
    std::size_t max_n() const noexcept { return max_n_; }

    const BigInt& operator()(std::size_t m, std::size_t n) const { return values_[m * (max_n_ + 1) + n]; }
    BigInt& operator()(std::size_t m, std::size_t n) { return values_[m * (max_n_ + 1) + n]; }

    friend bool operator==(const BipartiteTable&, const BipartiteTable&) = default;

private:
    std::size_t max_m_;
    std::size_t max_n_;
    std::vector<BigInt> values_;
};

/// alpha(s, k) = sum_{l >= 0} (-1)^l p(k - l(l+1)/2 - l s).
/// Throws std::out_of_range if `p` does not cover k.
BigInt alpha(std::size_t s, std::size_t k, const PartitionTable& p);

/// Memo of alpha(s, k) over a shared partition table. Not thread-safe; use
/// one cache per thread.
class AlphaCache {
public:
    explicit AlphaCache(const PartitionTable& p) : p_(&p) {}

    const BigInt& get(std::size_t s, std::size_t k);

    std::size_t size() const noexcept { return values_.size(); }

private:
    const PartitionTable* p_;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> values_;
};

/// pi(m, n) = sum_{0 <= k <= min(m,n)} c(min(m,n) - k) alpha(|m - n|, k).
BigInt pi_value(std::size_t m, std::size_t n, const CubicTable& c, const PartitionTable& p);
BigInt pi_value(std::size_t m, std::size_t n, const CubicTable& c, AlphaCache& alphas);

/// D(m, n) = pi(m, n) - pi(m - 1, n) through the crank convolution
///   D(m, n) = sum_{0 <= k <= L} c(L - k) M(n - L, n - L + k),  L = min(2n - m, m),
/// and D(m, n) = 0 for m > 2n. The crank table must reach order n and hold
/// column |n - m| (unless m > 2n).
BigInt d_value(std::size_t m, std::size_t n, const CubicTable& c, const CrankTable& crank);

/// D(m, n) as the plain difference pi(m, n) - pi(m - 1, n), pi(-1, n) = 0.
BigInt d_value_by_difference(std::size_t m, std::size_t n, const CubicTable& c,
                             const PartitionTable& p);

/// Limits for the brute-force enumeration of steadily decreasing pairs.
inline constexpr std::size_t kDefaultEnumerationCap = 40;
/// Limit on each box bound for the generating-function expansion.
inline constexpr std::size_t kDefaultProductCap = 60;

struct SteadyEnumeration {
    std::uint64_t count = 0;
    std::vector<SteadyPair> pairs;  // filled only when requested
};

/// Depth-first enumeration of all steadily decreasing pair sequences of
/// weight (m, n). Throws std::invalid_argument if m + n exceeds `cap`.
SteadyEnumeration enumerate_steady(std::size_t m, std::size_t n, bool collect = false,
                                   std::size_t cap = kDefaultEnumerationCap);

/// pi(m, n) on the whole box from the bivariate generating function
///   1 / ((x; xy)_inf (x^2 y^2; x^2 y^2)_inf (y; xy)_inf).
/// Throws std::invalid_argument if either bound exceeds `cap`.
BipartiteTable gf_table(std::size_t max_m, std::size_t max_n,
                        std::size_t cap = kDefaultProductCap);

/// pi(m, n) on the whole box through pi_value.
BipartiteTable pi_table(std::size_t max_m, std::size_t max_n, const CubicTable& c,
                        const PartitionTable& p);

}  // namespace bipart

#endif  // BIPART_BIPARTITE_HPP
