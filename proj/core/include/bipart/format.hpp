#ifndef BIPART_FORMAT_HPP
#define BIPART_FORMAT_HPP

#include <string>

#include "bipart/asymptotics.hpp"
#include "bipart/bigint.hpp"

namespace bipart {

/// Scientific notation "d.ddddde<exp>" with `significant` digits, rounded
/// half-to-even on the last kept digit using the exact decimal expansion.
std::string to_scientific(const BigInt& v, int significant = 6);

/// Same layout for a log-domain value. Rounding is half-to-even on the
/// double-precision mantissa.
std::string to_scientific(LogValue v, int significant = 6);

/// Fixed-point with `decimals` digits after the point.
std::string to_fixed(double v, int decimals = 4);

}  // namespace bipart

#endif  // BIPART_FORMAT_HPP
