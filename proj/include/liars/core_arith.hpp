#pragma once

// Exact unsigned integer primitives shared by the whole library.
// Everything here is pure and safe for concurrent use.

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace liars {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// v written as 2^k * odd with odd ... odd.
struct OddDecomposition {
    unsigned k;   // 2-adic valuation
    u64 odd;      // odd part

    u64 value() const { return odd << k; }
};

/// Split v >= 1 into its 2-adic valuation and odd part.
inline OddDecomposition odd_decompose(u64 v) {
    if (v == 0)
        throw std::invalid_argument("odd_decompose: v must be positive");
    unsigned k = static_cast<unsigned>(std::countr_zero(v));
    return {k, v >> k};
}

/// Odd part of v, for the common case where the valuation is not needed.
inline u64 odd_part(u64 v) { return v >> std::countr_zero(v); }

/// (a * b) mod n without overflow; n may be up to 2^63.
inline u64 mulmod(u64 a, u64 b, u64 n) {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
}

/// a^e mod n by repeated squaring.  a^0 = 1 mod n.
inline u64 mod_pow(u64 a, u64 e, u64 n) {
    if (n < 2)
        throw std::invalid_argument("mod_pow: modulus must be >= 2");
    a %= n;
    u64 result = 1;
    while (e > 0) {
        if (e & 1)
            result = mulmod(result, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return result;
}

/// Greatest common divisor with the usual gcd(0, b) = b convention.
inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

/// Jacobi symbol (a | n) for odd n >= 1, computed by binary reciprocity.
/// Returns 0 exactly when gcd(a, n) > 1.
inline int jacobi(u64 a, u64 n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: n must be positive and odd");
    a %= n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            u64 m = n % 8;
            if (m == 3 || m == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace liars
