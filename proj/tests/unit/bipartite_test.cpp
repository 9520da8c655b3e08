#include "bipart/bipartite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace bipart {
namespace {

class BipartiteTest : public ::testing::Test {
protected:
    static constexpr std::size_t kTop = 200;
    static void SetUpTestSuite() {
        p_ = new PartitionTable(build_p_table(kTop));
        c_ = new CubicTable(build_c_table(kTop, *p_));
        crank_ = new CrankTable(build_crank_table(70));
    }
    static void TearDownTestSuite() {
        delete p_;
        delete c_;
        delete crank_;
    }
    static PartitionTable* p_;
    static CubicTable* c_;
    static CrankTable* crank_;
};

PartitionTable* BipartiteTest::p_ = nullptr;
CubicTable* BipartiteTest::c_ = nullptr;
CrankTable* BipartiteTest::crank_ = nullptr;

TEST_F(BipartiteTest, AlphaSmallValues) {
    for (std::size_t s : {0u, 1u, 5u, 100u}) EXPECT_EQ(alpha(s, 0, *p_), 1) << s;
    EXPECT_EQ(alpha(0, 1, *p_), 0);
    EXPECT_EQ(alpha(1, 2, *p_), 1);
}

TEST_F(BipartiteTest, AlphaRejectsShortTable) {
    EXPECT_THROW(alpha(0, kTop + 1, *p_), std::out_of_range);
}

TEST_F(BipartiteTest, AlphaCacheMatchesDirect) {
    AlphaCache cache(*p_);
    for (std::size_t s = 0; s <= 12; ++s) {
        for (std::size_t k = 0; k <= 60; ++k) EXPECT_EQ(cache.get(s, k), alpha(s, k, *p_));
    }
    EXPECT_EQ(cache.size(), 13u * 61u);
    cache.get(0, 0);
    EXPECT_EQ(cache.size(), 13u * 61u);
}

TEST_F(BipartiteTest, PiEdgeValues) {
    for (std::size_t k = 0; k <= 50; ++k) {
        EXPECT_EQ(pi_value(0, k, *c_, *p_), 1) << k;
        EXPECT_EQ(pi_value(k, 0, *c_, *p_), 1) << k;
    }
    EXPECT_EQ(pi_value(2, 1, *c_, *p_), 2);
    EXPECT_EQ(pi_value(1, 2, *c_, *p_), 2);
}

TEST_F(BipartiteTest, PiRejectsShortTables) {
    EXPECT_THROW(pi_value(kTop + 1, kTop + 5, *c_, *p_), std::out_of_range);
}

TEST_F(BipartiteTest, PiHundredHundred) {
    // Cross-checked against the generating-function expansion below and an
    // independent arbitrary-precision script.
    const BigInt v = pi_value(100, 100, *c_, *p_);
    EXPECT_EQ(v, BigInt("20208198304276"));
    EXPECT_EQ(v, gf_table(100, 100, 100)(100, 100));
    EXPECT_EQ(pi_value(100, 110, *c_, *p_), BigInt("34292363349119"));
}

TEST_F(BipartiteTest, PiCacheAndDirectAgree) {
    AlphaCache cache(*p_);
    for (std::size_t m = 0; m <= 40; m += 3) {
        for (std::size_t n = 0; n <= 40; n += 7) {
            EXPECT_EQ(pi_value(m, n, *c_, cache), pi_value(m, n, *c_, *p_));
        }
    }
}

TEST_F(BipartiteTest, DEdgeValues) {
    for (std::size_t n = 0; n <= 60; ++n) EXPECT_EQ(d_value(0, n, *c_, *crank_), 1) << n;
    EXPECT_EQ(d_value(1, 1, *c_, *crank_), 0);
    EXPECT_EQ(d_value_by_difference(1, 1, *c_, *p_), 0);
    EXPECT_EQ(d_value(5, 2, *c_, *crank_), 0);
}

TEST_F(BipartiteTest, DRejectsShortCrankTable) {
    EXPECT_THROW(d_value(10, 71, *c_, *crank_), std::out_of_range);
}

TEST_F(BipartiteTest, DMatchesDifferenceAndTelescopes) {
    AlphaCache cache(*p_);
    for (std::size_t n = 0; n <= 60; ++n) {
        BigInt running;
        BigInt previous;
        for (std::size_t m = 0; m <= 3 * n; ++m) {
            const BigInt pi = pi_value(m, n, *c_, cache);
            const BigInt d = d_value(m, n, *c_, *crank_);
            ASSERT_EQ(d, pi - previous) << "D(" << m << "," << n << ")";
            running += d;
            ASSERT_EQ(running, pi) << "telescoping at (" << m << "," << n << ")";
            if (m > 2 * n) {
                ASSERT_EQ(d, 0) << "vanishing at (" << m << "," << n << ")";
            }
            previous = pi;
        }
    }
}

TEST_F(BipartiteTest, DebugDifferenceModeAgrees) {
    for (std::size_t n = 0; n <= 25; ++n) {
        for (std::size_t m = 0; m <= 3 * n; ++m) {
            ASSERT_EQ(d_value(m, n, *c_, *crank_), d_value_by_difference(m, n, *c_, *p_)) << m << "," << n;
        }
    }
}

// D(m, n) before the regime split is the convolution
//   sum_{0 <= l <= n} c(n - l) M(m - n, l);
// each regime's reduced form and the unified formula must agree with it.
TEST_F(BipartiteTest, RegimeFormsAgreeWithUnifiedFormula) {
    const auto& c = *c_;
    const auto& crank = *crank_;
    auto M = [&](long a, long b) { return crank.value(a, b); };
    for (long n = 0; n <= 50; ++n) {
        for (long m = 0; m <= 3 * n; ++m) {
            BigInt raw;
            for (long l = 0; l <= n; ++l) raw += c(n - l) * M(m - n, l);
            BigInt regime;
            if (m <= n) {
                for (long k = 0; k <= m; ++k) regime += c(m - k) * M(n - m, n - m + k);
            } else if (m <= 2 * n) {
                for (long k = 0; k <= 2 * n - m; ++k) regime += c(2 * n - m - k) * M(m - n, m - n + k);
            } else {
                for (long l = m - n; l <= n; ++l) regime += c(n - l) * M(m - n, l);
                EXPECT_EQ(regime, 0);
            }
            const BigInt unified = d_value(static_cast<std::size_t>(m), static_cast<std::size_t>(n), c, crank);
            ASSERT_EQ(raw, regime) << m << "," << n;
            ASSERT_EQ(raw, unified) << m << "," << n;
        }
    }
}

TEST(SteadyEnumerationTest, SmallCases) {
    EXPECT_EQ(enumerate_steady(0, 0).count, 1u);
    const auto zero_three = enumerate_steady(0, 3, true);
    ASSERT_EQ(zero_three.count, 1u);
    EXPECT_EQ(zero_three.pairs[0].parts, (std::vector<std::pair<unsigned, unsigned>>{{0, 3}}));

    const auto two_one = enumerate_steady(2, 1, true);
    ASSERT_EQ(two_one.count, 2u);
    std::set<std::vector<std::pair<unsigned, unsigned>>> found;
    for (const auto& sp : two_one.pairs) found.insert(sp.parts);
    const std::set<std::vector<std::pair<unsigned, unsigned>>> expected{{{2, 1}}, {{1, 1}, {1, 0}}};
    EXPECT_EQ(found, expected);
}

TEST(SteadyEnumerationTest, CapEnforced) {
    EXPECT_THROW(enumerate_steady(21, 20), std::invalid_argument);
    EXPECT_NO_THROW(enumerate_steady(3, 3, false, 6));
    EXPECT_THROW(enumerate_steady(4, 3, false, 6), std::invalid_argument);
}

TEST(SteadyEnumerationTest, CollectedPairsAreValidAndDistinct) {
    for (std::size_t m = 0; m <= 7; ++m) {
        for (std::size_t n = 0; n <= 7; ++n) {
            const auto e = enumerate_steady(m, n, true);
            ASSERT_EQ(e.pairs.size(), e.count);
            std::set<std::vector<std::pair<unsigned, unsigned>>> distinct;
            for (const SteadyPair& sp : e.pairs) {
                EXPECT_TRUE(sp.is_valid());
                std::size_t sm = 0;
                std::size_t sn = 0;
                for (auto [a, b] : sp.parts) {
                    sm += a;
                    sn += b;
                }
                EXPECT_EQ(sm, m);
                EXPECT_EQ(sn, n);
                distinct.insert(sp.parts);
            }
            EXPECT_EQ(distinct.size(), e.count);
        }
    }
}

TEST(SteadyEnumerationTest, MatchesPairsOfOrdinaryPartitions) {
    for (int m = 0; m <= 10; ++m) {
        for (int n = 0; n <= 10; ++n) {
            EXPECT_EQ(enumerate_steady(static_cast<std::size_t>(m), static_cast<std::size_t>(n)).count,
                      testing::count_steady_pairs_by_partitions(m, n))
                << m << "," << n;
        }
    }
}

TEST(SteadyPairTest, Validity) {
    EXPECT_TRUE((SteadyPair{{{3, 2}, {2, 0}}}).is_valid());
    EXPECT_FALSE((SteadyPair{{{3, 1}, {2, 0}}}).is_valid());
    EXPECT_FALSE((SteadyPair{{{1, 1}, {0, 0}}}).is_valid());
    EXPECT_TRUE(SteadyPair{}.is_valid());
}

TEST_F(BipartiteTest, GeneratingFunctionTable) {
    const BipartiteTable gf = gf_table(30, 25);
    const BipartiteTable direct = pi_table(30, 25, *c_, *p_);
    EXPECT_EQ(gf, direct);
    for (std::size_t k = 0; k <= 25; ++k) {
        EXPECT_EQ(gf(0, k), 1);
        EXPECT_EQ(gf(k, 0), 1);
    }
    for (std::size_t m = 0; m <= 25; ++m) {
        for (std::size_t n = 0; n <= 25; ++n) EXPECT_EQ(gf(m, n), gf(n, m));
    }
    for (std::size_t n = 0; n <= 14; ++n) {
        for (std::size_t m = 2 * n + 1; m <= 30; ++m) EXPECT_EQ(gf(m, n), gf(m - 1, n)) << m << "," << n;
    }
}

TEST(GfTableTest, ThreeWayAgreementOnBoxTen) {
    const PartitionTable p = build_p_table(10);
    const CubicTable c = build_c_table(10, p);
    const BipartiteTable gf = gf_table(10, 10);
    for (std::size_t m = 0; m <= 10; ++m) {
        for (std::size_t n = 0; n <= 10; ++n) {
            const BigInt e{enumerate_steady(m, n).count};
            EXPECT_EQ(e, pi_value(m, n, c, p)) << m << "," << n;
            EXPECT_EQ(e, gf(m, n)) << m << "," << n;
        }
    }
}

TEST(GfTableTest, CapEnforced) {
    EXPECT_THROW(gf_table(61, 10), std::invalid_argument);
    EXPECT_THROW(gf_table(10, 61), std::invalid_argument);
    EXPECT_NO_THROW(gf_table(61, 10, 61));
}

}  // namespace
}  // namespace bipart
