#include "bipart/format.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

namespace bipart {
namespace {

TEST(ScientificTest, ExactIntegers) {
    EXPECT_EQ(to_scientific(BigInt("20208198304276")), "2.02082e13");
    EXPECT_EQ(to_scientific(BigInt("34292363349119")), "3.42924e13");
    EXPECT_EQ(to_scientific(BigInt(42)), "4.20000e1");
    EXPECT_EQ(to_scientific(BigInt(7)), "7.00000e0");
    EXPECT_EQ(to_scientific(BigInt(0)), "0.00000e0");
    EXPECT_EQ(to_scientific(BigInt(-1234567)), "-1.23457e6");
}

TEST(ScientificTest, RoundHalfToEven) {
    EXPECT_EQ(to_scientific(BigInt(1234565)), "1.23456e6");
    EXPECT_EQ(to_scientific(BigInt(1234575)), "1.23458e6");
    EXPECT_EQ(to_scientific(BigInt("1234565001")), "1.23457e9");
    EXPECT_EQ(to_scientific(BigInt("1234564999")), "1.23456e9");
}

TEST(ScientificTest, CarryIntoExponent) {
    EXPECT_EQ(to_scientific(BigInt(9999995)), "1.00000e7");
    EXPECT_EQ(to_scientific(BigInt(9999985)), "9.99998e6");
    EXPECT_EQ(to_scientific(BigInt("99999951")), "1.00000e8");
}

TEST(ScientificTest, OtherPrecisions) {
    EXPECT_EQ(to_scientific(BigInt(125), 2), "1.2e2");
    EXPECT_EQ(to_scientific(BigInt(135), 2), "1.4e2");
    EXPECT_EQ(to_scientific(BigInt(5), 1), "5e0");
    EXPECT_THROW(to_scientific(BigInt(5), 0), std::invalid_argument);
}

TEST(ScientificTest, LogDomain) {
    EXPECT_EQ(to_scientific(LogValue::from_double(2.02082e13)), "2.02082e13");
    EXPECT_EQ(to_scientific(LogValue::from_double(1.0)), "1.00000e0");
    EXPECT_EQ(to_scientific(LogValue::from_double(0.00123456)), "1.23456e-3");
    EXPECT_EQ(to_scientific(LogValue::from_log(1000.0)), "1.97007e434");
    EXPECT_EQ(to_scientific(LogValue::zero()), "0.00000e0");
}

TEST(FixedTest, FourDecimals) {
    EXPECT_EQ(to_fixed(0.943612), "0.9436");
    EXPECT_EQ(to_fixed(0.90597), "0.9060");
    EXPECT_EQ(to_fixed(1.0), "1.0000");
}

}  // namespace
}  // namespace bipart
