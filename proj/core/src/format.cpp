#include "bipart/format.hpp"

#include <cfenv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace bipart {

namespace {

std::string assemble(bool negative, const std::string& digits, long exponent) {
    std::string out;
    if (negative) out += '-';
    out += digits[0];
    if (digits.size() > 1) {
        out += '.';
        out.append(digits, 1, std::string::npos);
    }
    out += 'e';
    out += std::to_string(exponent);
    return out;
}

// Adds one unit in the last place of a decimal digit string; returns true on
// overflow (all nines became zeros).
bool increment_digits(std::string& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] == '9') {
            digits[i] = '0';
        } else {
            ++digits[i];
            return false;
        }
    }
    return true;
}

}  // namespace

std::string to_scientific(const BigInt& v, int significant) {
    if (significant < 1) throw std::invalid_argument("to_scientific: need at least one digit");
    const auto sig = static_cast<std::size_t>(significant);
    if (sgn(v) == 0) return assemble(false, std::string(sig, '0'), 0);

    const bool negative = sgn(v) < 0;
    const std::string full = BigInt(abs(v)).get_str();
    long exponent = static_cast<long>(full.size()) - 1;
    if (full.size() <= sig) {
        return assemble(negative, full + std::string(sig - full.size(), '0'), exponent);
    }

    std::string digits = full.substr(0, sig);
    const char next = full[sig];
    const bool rest_nonzero = full.find_first_not_of('0', sig + 1) != std::string::npos;
    bool round_up = false;
    if (next > '5' || (next == '5' && rest_nonzero)) {
        round_up = true;
    } else if (next == '5') {
        round_up = ((digits.back() - '0') % 2) == 1;
    }
    if (round_up && increment_digits(digits)) {
        digits = "1" + std::string(sig - 1, '0');
        ++exponent;
    }
    return assemble(negative, digits, exponent);
}

std::string to_scientific(LogValue v, int significant) {
    if (significant < 1) throw std::invalid_argument("to_scientific: need at least one digit");
    if (v.is_zero()) return assemble(false, std::string(static_cast<std::size_t>(significant), '0'), 0);

    const double log10v = v.log() / std::numbers::ln10;
    auto exponent = static_cast<long>(std::floor(log10v));
    const double scale = std::pow(10.0, significant - 1);
    const int saved = std::fegetround();
    std::fesetround(FE_TONEAREST);
    double scaled = std::nearbyint(std::pow(10.0, log10v - static_cast<double>(exponent)) * scale);
    std::fesetround(saved);
    if (scaled >= 10.0 * scale) {
        scaled /= 10.0;
        ++exponent;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0f", scaled);
    return assemble(false, buf, exponent);
}

std::string to_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace bipart
