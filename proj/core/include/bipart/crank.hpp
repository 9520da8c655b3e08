#ifndef BIPART_CRANK_HPP
#define BIPART_CRANK_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "bipart/bigint.hpp"
#include "bipart/series.hpp"

namespace bipart {

/// Which expansion of the crank generating function to use.
enum class CrankExpansion {
    /// (q;q)_inf / ((zeta q;q)_inf (zeta^{-1} q;q)_inf), factor by factor.
    /// O(N^3); intended for orders up to a few hundred.
    kProductQuotient,
    /// (1 - zeta)/(q;q)_inf * sum_{n in Z} (-1)^n q^{n(n+1)/2} / (1 - zeta q^n).
    /// Each zeta-column is a sparse series times p(n); roughly O(N^2 log N).
    kLambertSum,
};

/// Crank generating-function coefficients M(m, n) for 0 <= n <= max_order.
///
/// These are the coefficients of the generating function, so row n = 1 reads
/// M(0,1) = -1, M(+-1,1) = 1 rather than the combinatorial crank counts.
/// Only columns m >= 0 are stored; negative m is served by M(m,n) = M(-m,n).
/// A table may materialize a subset of columns (see build_crank_columns).
class CrankTable {
public:
    std::size_t max_order() const noexcept { return max_order_; }

    /// True when column |m| was materialized.
    bool has_column(long m) const noexcept;

    /// M(m, n). Returns 0 for |m| > n. Throws std::out_of_range if n is
    /// negative or beyond max_order(), or if column |m| was not built.
    const BigInt& value(long m, long n) const;

    friend bool operator==(const CrankTable&, const CrankTable&) = default;

private:
    friend CrankTable build_crank_table(std::size_t, CrankExpansion);
    friend CrankTable build_crank_columns(std::size_t, std::span<const std::size_t>);
    friend CrankTable crank_table_from_expansion(const LaurentQSeries&);

    explicit CrankTable(std::size_t max_order);

    std::size_t max_order_;
    // columns_[m][n - m] = M(m, n) for m <= n <= max_order; empty if not built.
    std::vector<std::vector<BigInt>> columns_;
};

/// Total accessor, same as table.value(m, n).
inline const BigInt& crank_value(const CrankTable& table, long m, long n) {
    return table.value(m, n);
}

/// Full Laurent expansion of the quotient-of-products form to order N.
LaurentQSeries expand_crank_product(std::size_t order);

/// Full Laurent expansion of the Lambert-sum form to order N.
LaurentQSeries expand_crank_lambert(std::size_t order);

/// Keeps the m >= 0 half of a crank expansion. Throws std::logic_error if
/// the expansion is not zeta-symmetric or has support outside |m| <= n.
CrankTable crank_table_from_expansion(const LaurentQSeries& expansion);

/// All columns 0 <= m <= order.
CrankTable build_crank_table(std::size_t order,
                             CrankExpansion method = CrankExpansion::kLambertSum);

/// Only the requested columns (m >= 0), via the Lambert-sum expansion.
CrankTable build_crank_columns(std::size_t order, std::span<const std::size_t> columns);

}  // namespace bipart

#endif  // BIPART_CRANK_HPP
