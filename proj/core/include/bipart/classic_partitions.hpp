#ifndef BIPART_CLASSIC_PARTITIONS_HPP
#define BIPART_CLASSIC_PARTITIONS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "bipart/bigint.hpp"

namespace bipart {

/// Memoized table of a nonnegative-index integer sequence, with a total
/// accessor: negative indices read as 0, indices past the table throw
/// std::out_of_range.
class SequenceTable {
public:
    explicit SequenceTable(std::vector<BigInt> values);

    long max_index() const noexcept { return static_cast<long>(values_.size()) - 1; }

    const BigInt& operator()(long n) const;

    std::span<const BigInt> values() const noexcept { return values_; }

    friend bool operator==(const SequenceTable&, const SequenceTable&) = default;

protected:
    std::vector<BigInt> values_;
};

/// p(n), the number of partitions of n.
class PartitionTable : public SequenceTable {
public:
    using SequenceTable::SequenceTable;
};

/// c(n), the number of cubic partitions of n (even parts in two colours).
class CubicTable : public SequenceTable {
public:
    using SequenceTable::SequenceTable;
};

/// p(0..max_n) by Euler's pentagonal recurrence.
PartitionTable build_p_table(std::size_t max_n);

/// p(0..max_n) by inverting the truncated Euler product.
PartitionTable build_p_table_by_inversion(std::size_t max_n);

/// c(n) = sum_{a + 2b = n} p(a) p(b). Throws std::out_of_range if `p` is
/// shorter than max_n.
CubicTable build_c_table(std::size_t max_n, const PartitionTable& p);

/// Convenience overload building its own p table.
CubicTable build_c_table(std::size_t max_n);

/// c(0..max_n) as coefficients of 1/((q;q)_inf (q^2;q^2)_inf).
CubicTable build_c_table_by_inversion(std::size_t max_n);

}  // namespace bipart

#endif  // BIPART_CLASSIC_PARTITIONS_HPP
