#pragma once

#include <vector>

#include "liars/core_arith.hpp"

namespace liars {

struct PrimePower {
    u64 prime;
    u32 exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization as an ascending list of (prime, exponent) pairs.
struct Factorization {
    std::vector<PrimePower> factors;

    /// Number of distinct prime divisors.
    std::size_t distinct_primes() const { return factors.size(); }

    /// Total number of prime divisors counted with multiplicity.
    u64 total_prime_count() const {
        u64 total = 0;
        for (const auto& f : factors)
            total += f.exponent;
        return total;
    }

    /// Product of all p^e; the integer that was factored.
    u64 value() const {
        u64 v = 1;
        for (const auto& f : factors)
            for (u32 i = 0; i < f.exponent; ++i)
                v *= f.prime;
        return v;
    }

    bool is_squarefree() const {
        for (const auto& f : factors)
            if (f.exponent > 1)
                return false;
        return true;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Euler totient from a factorization: product of p^(e-1) * (p-1).
inline u64 euler_phi(const Factorization& f) {
    u64 phi = 1;
    for (const auto& pp : f.factors) {
        for (u32 i = 1; i < pp.exponent; ++i)
            phi *= pp.prime;
        phi *= pp.prime - 1;
    }
    return phi;
}

}  // namespace liars
