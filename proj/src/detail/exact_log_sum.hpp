#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace abc::detail {

// Sums doubles as 128-bit fixed point with 64 fractional bits. Every double
// >= 2^-11 is representable exactly at that scale, so for such terms the sum is
// exact and independent of grouping and order. The census only adds logs of
// integers >= 2, which are >= ln 2.
class ExactLogSum {
public:
    void add(double x) noexcept { acc_ += to_fixed(x); }
    void merge(const ExactLogSum& other) noexcept { acc_ += other.acc_; }

    double value() const noexcept { return to_double(acc_); }
    /// value() / divisor rounded once from the exact sum.
    double mean(std::uint64_t divisor) const noexcept
    {
        if (divisor == 0)
            return 0.0;
        return static_cast<double>(to_long_double(acc_) / static_cast<long double>(divisor));
    }

    __int128 raw() const noexcept { return acc_; }

private:
    // x * 2^64 straight from the IEEE-754 fields; tiny magnitudes truncate.
    static __int128 to_fixed(double x) noexcept
    {
        const auto bits = std::bit_cast<std::uint64_t>(x);
        const int biased = static_cast<int>((bits >> 52) & 0x7ff);
        if (biased == 0)
            return 0;  // zero and subnormals
        const auto mantissa = static_cast<__int128>((bits & ((std::uint64_t{1} << 52) - 1)) | (std::uint64_t{1} << 52));
        // value = mantissa * 2^(biased - 1075); scaled by 2^64
        const int shift = biased - 1075 + 64;
        __int128 v = shift >= 0 ? (shift < 74 ? mantissa << shift : 0) : (shift > -64 ? mantissa >> -shift : 0);
        return (bits >> 63) ? -v : v;
    }
    static long double to_long_double(__int128 v) noexcept
    {
        const bool neg = v < 0;
        const unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        const long double hi = std::ldexp(static_cast<long double>(static_cast<std::uint64_t>(mag >> 64)), 64);
        const long double lo = static_cast<long double>(static_cast<std::uint64_t>(mag));
        const long double r = std::ldexp(hi + lo, -64);
        return neg ? -r : r;
    }
    static double to_double(__int128 v) noexcept { return static_cast<double>(to_long_double(v)); }

    __int128 acc_ = 0;
};

} // namespace abc::detail
