#include "bipart/crank.hpp"

#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "bipart/classic_partitions.hpp"
#include "oracles.hpp"

namespace bipart {
namespace {

class CrankTableTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() { table_ = new CrankTable(build_crank_table(100)); }
    static void TearDownTestSuite() {
        delete table_;
        table_ = nullptr;
    }
    static CrankTable* table_;
};

CrankTable* CrankTableTest::table_ = nullptr;

TEST_F(CrankTableTest, LowOrderCoefficients) {
    EXPECT_EQ(crank_value(*table_, 0, 0), 1);
    // (1 - q)(1 + zeta q)(1 + zeta^{-1} q) = 1 + (zeta + zeta^{-1} - 1) q + O(q^2)
    EXPECT_EQ(crank_value(*table_, 0, 1), -1);
    EXPECT_EQ(crank_value(*table_, 1, 1), 1);
    EXPECT_EQ(crank_value(*table_, -1, 1), 1);
}

TEST_F(CrankTableTest, RowFourSumsToPartitionCount) {
    BigInt total;
    for (long m = -4; m <= 4; ++m) total += crank_value(*table_, m, 4);
    EXPECT_EQ(total, 5);
}

TEST_F(CrankTableTest, SupportAndSymmetryAccessors) {
    EXPECT_EQ(crank_value(*table_, 7, 3), 0);
    EXPECT_EQ(crank_value(*table_, -7, 3), 0);
    EXPECT_EQ(crank_value(*table_, -2, 5), crank_value(*table_, 2, 5));
    for (long n = 2; n <= 100; ++n) EXPECT_EQ(crank_value(*table_, n, n), 1) << n;
}

TEST_F(CrankTableTest, OutOfRangeOrders) {
    EXPECT_THROW(table_->value(0, 101), std::out_of_range);
    EXPECT_THROW(table_->value(0, -1), std::out_of_range);
}

TEST_F(CrankTableTest, MarginalsEqualPartitionCounts) {
    const PartitionTable p = build_p_table(100);
    for (long n = 0; n <= 100; ++n) {
        BigInt total;
        for (long m = -n; m <= n; ++m) total += table_->value(m, n);
        EXPECT_EQ(total, p(n)) << n;
    }
}

TEST_F(CrankTableTest, MatchesCombinatorialCrankAboveOne) {
    for (int n = 2; n <= 60; ++n) {
        const auto hist = testing::crank_histogram(n);
        for (long m = -n; m <= n; ++m) {
            const auto it = hist.find(static_cast<int>(m));
            const unsigned long expected = it == hist.end() ? 0 : it->second;
            ASSERT_EQ(table_->value(m, n), expected) << "M(" << m << "," << n << ")";
        }
    }
}

TEST_F(CrankTableTest, OrderOneDiffersFromCombinatorialCounts) {
    // The single partition of 1 has crank -1; the generating function instead
    // gives zeta + zeta^{-1} - 1.
    const auto hist = testing::crank_histogram(1);
    ASSERT_EQ(hist.size(), 1u);
    EXPECT_EQ(hist.begin()->first, -1);
    EXPECT_NE(table_->value(0, 1), 0);
}

TEST(CrankExpansionTest, BothFormsAgreeToOrderHundred) {
    EXPECT_EQ(expand_crank_product(100), expand_crank_lambert(100));
}

TEST(CrankExpansionTest, TableBuildersAgree) {
    EXPECT_EQ(build_crank_table(60, CrankExpansion::kProductQuotient),
              build_crank_table(60, CrankExpansion::kLambertSum));
}

TEST(CrankExpansionTest, FromExpansionRejectsAsymmetry) {
    LaurentQSeries s = expand_crank_product(5);
    s.at(2, 4) += 1;
    EXPECT_THROW(crank_table_from_expansion(s), std::logic_error);
}

TEST(CrankExpansionTest, FromExpansionRejectsSupportViolation) {
    LaurentQSeries s = expand_crank_product(5);
    s.at(4, 2) += 1;
    s.at(-4, 2) += 1;
    EXPECT_THROW(crank_table_from_expansion(s), std::logic_error);
}

TEST(CrankColumnsTest, SubsetMatchesFullTable) {
    const CrankTable full = build_crank_table(80);
    const std::vector<std::size_t> cols{0, 3, 17, 80};
    const CrankTable subset = build_crank_columns(80, cols);
    for (std::size_t m : cols) {
        for (long n = 0; n <= 80; ++n) {
            EXPECT_EQ(subset.value(static_cast<long>(m), n), full.value(static_cast<long>(m), n));
            EXPECT_EQ(subset.value(-static_cast<long>(m), n), full.value(static_cast<long>(m), n));
        }
    }
    EXPECT_TRUE(subset.has_column(-3));
    EXPECT_FALSE(subset.has_column(4));
    EXPECT_THROW(subset.value(4, 10), std::out_of_range);
    // Outside the support no column is needed.
    EXPECT_EQ(subset.value(4, 3), 0);
}

TEST(CrankColumnsTest, ColumnBeyondOrderRejected) {
    const std::vector<std::size_t> cols{11};
    EXPECT_THROW(build_crank_columns(10, cols), std::out_of_range);
}

TEST(CrankColumnsTest, LargeOrderMarginals) {
    const std::size_t order = 400;
    const CrankTable t = build_crank_table(order);
    const PartitionTable p = build_p_table(order);
    for (long n : {150L, 299L, 400L}) {
        BigInt total;
        for (long m = -n; m <= n; ++m) total += t.value(m, n);
        EXPECT_EQ(total, p(n)) << n;
    }
}

}  // namespace
}  // namespace bipart
