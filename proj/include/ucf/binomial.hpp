#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace ucf {

namespace detail {
// Pascal's triangle up to n = 64; every C(n,k) with n <= 64 fits in 64 bits.
inline constexpr auto binom_table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int n = 0; n <= 64; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
}();
}  // namespace detail

/// C(n,k); zero outside 0 <= k <= n <= 64.
constexpr std::uint64_t binom(int n, int k) noexcept {
    if (n < 0 || k < 0 || k > n || n > 64) return 0;
    return detail::binom_table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// 2^e as an exact 64-bit value; e must be in [0,63].
inline std::uint64_t pow2(int e) {
    if (e < 0 || e > 63) throw std::domain_error("pow2 exponent outside [0,63]");
    return std::uint64_t{1} << e;
}

}  // namespace ucf
