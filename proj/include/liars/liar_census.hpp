#pragma once

// Liar sets of the strong, Euler, and Fermat probable-prime tests for a
// single n: brute-force enumeration, closed-form counts, the two-liar
// predicates, and the worst-case classification.
//
// Throughout, n' is the odd part of n-1 (so n-1 = 2^k * n') and p' is the
// odd part of p-1 for a prime divisor p of n.

#include <algorithm>
#include <vector>

#include "liars/core_arith.hpp"
#include "liars/factorization.hpp"

namespace liars {

/// Brute-force enumerators are oracles, not bulk tools; refuse above this.
inline constexpr u64 kBruteForceLimit = 1'000'000;

namespace detail {

inline void check_enumerable(u64 n, u64 min_n = 3) {
    if (n < min_n)
        throw std::invalid_argument("liar enumeration requires n >= " + std::to_string(min_n));
    if (n > kBruteForceLimit)
        throw std::invalid_argument("liar enumeration is capped at n <= 10^6 by policy");
}

inline void check_factors(u64 n, const Factorization& f) {
    if (f.value() != n)
        throw std::invalid_argument("factorization does not multiply back to n");
}

inline void check_odd_composite(u64 n, const Factorization& f) {
    check_factors(n, f);
    if (n % 2 == 0)
        throw std::invalid_argument("predicate requires odd n");
    if (f.distinct_primes() == 1 && f.factors[0].exponent == 1)
        throw std::invalid_argument("predicate requires composite n");
}

}  // namespace detail

/// a is a strong liar for n when a^(n') = 1 or a^(2^i n') = -1 (mod n)
/// for some 0 <= i < k.  Returns the full set of such residues in [0, n-1],
/// ascending.  Accepts even n; the -1 branch is then vacuous since k = 0.
inline std::vector<u64> enumerate_strong_liars(u64 n) {
    detail::check_enumerable(n);
    auto [k, nprime] = odd_decompose(n - 1);
    std::vector<u64> liars;
    for (u64 a = 0; a < n; ++a) {
        u64 x = mod_pow(a, nprime, n);
        if (x == 1) {
            liars.push_back(a);
            continue;
        }
        for (unsigned i = 0; i < k; ++i) {
            if (x == n - 1) {
                liars.push_back(a);
                break;
            }
            x = mulmod(x, x, n);
        }
    }
    return liars;
}

/// Coprime residues with a^((n-1)/2) = (a|n) (mod n), ascending.  Odd n only.
inline std::vector<u64> enumerate_euler_liars(u64 n) {
    detail::check_enumerable(n);
    if (n % 2 == 0)
        throw std::invalid_argument("enumerate_euler_liars: n must be odd");
    std::vector<u64> liars;
    const u64 e = (n - 1) / 2;
    for (u64 a = 0; a < n; ++a) {
        if (gcd(a, n) != 1)
            continue;
        int j = jacobi(a, n);
        u64 target = j == 1 ? 1 : n - 1;
        if (mod_pow(a, e, n) == target)
            liars.push_back(a);
    }
    return liars;
}

/// Residues with a^(n-1) = 1 (mod n), ascending.
inline std::vector<u64> enumerate_fermat_liars(u64 n) {
    detail::check_enumerable(n);
    std::vector<u64> liars;
    for (u64 a = 0; a < n; ++a)
        if (mod_pow(a, n - 1, n) == 1)
            liars.push_back(a);
    return liars;
}

/// |S(n)| in closed form:
///   (1 + (2^(rv) - 1) / (2^r - 1)) * prod over p|n of gcd(n', p')
/// where r is the number of distinct primes of n and v = min ord_2(p-1).
/// Valid for any n >= 3; gives n-1 when n is prime.
inline u64 monier_strong_count(u64 n, const Factorization& f) {
    if (n < 3)
        throw std::invalid_argument("monier_strong_count: n must be >= 3");
    detail::check_factors(n, f);
    const u64 nprime = odd_part(n - 1);
    const unsigned r = static_cast<unsigned>(f.distinct_primes());
    unsigned v = 64;
    for (const auto& pp : f.factors)
        v = std::min(v, odd_decompose(pp.prime - 1).k);
    // geometric form of (2^(rv)-1)/(2^r-1); rv < 64 since n > 2^(rv)
    u64 prefactor = 1;
    u64 term = 1;
    for (unsigned i = 0; i < v; ++i) {
        prefactor += term;
        term <<= r;
    }
    u64 product = 1;
    for (const auto& pp : f.factors)
        product *= gcd(nprime, odd_part(pp.prime - 1));
    return prefactor * product;
}

/// |E(n)| in closed form: delta(n) * e(n) with
///   e(n) = prod over p|n of gcd((n-1)/2, p-1)
///   delta = 2 when min ord_2(p-1) equals ord_2(n-1),
///           1/2 when some p|n has ord_2(p-1) < ord_2(n-1) and odd exponent,
///           1 otherwise.
/// Odd n >= 3 only.
inline u64 monier_euler_count(u64 n, const Factorization& f) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("monier_euler_count: n must be odd and >= 3");
    detail::check_factors(n, f);
    const unsigned k = odd_decompose(n - 1).k;
    unsigned v = 64;
    bool half = false;
    for (const auto& pp : f.factors) {
        unsigned kp = odd_decompose(pp.prime - 1).k;
        v = std::min(v, kp);
        if (kp < k && pp.exponent % 2 == 1)
            half = true;
    }
    u64 e = 1;
    for (const auto& pp : f.factors)
        e *= gcd((n - 1) / 2, pp.prime - 1);
    if (v == k)
        return 2 * e;
    return half ? e / 2 : e;
}

/// |F(n)| = prod over p|n of gcd(n-1, p-1), the CRT count of solutions of
/// a^(n-1) = 1.  Works for even n too: the p = 2 factor is gcd(n-1, 1) = 1,
/// matching the lone solution a = 1 in the 2-power component.
inline u64 fermat_count(u64 n, const Factorization& f) {
    u64 count = 1;
    for (const auto& pp : f.factors)
        count *= gcd(n - 1, pp.prime - 1);
    return count;
}

/// |S(n)| = 2 test for odd composite n: some p | n with p = 3 (mod 4), and
/// gcd(p', n') = 1 for every p | n.  (gcd(p', n') = gcd(p', (n/p)'), so this
/// matches the quotient form of the characterization.)
inline bool has_two_strong_liars(u64 n, const Factorization& f) {
    detail::check_odd_composite(n, f);
    const u64 nprime = odd_part(n - 1);
    bool any_3mod4 = false;
    for (const auto& pp : f.factors) {
        if (pp.prime % 4 == 3)
            any_3mod4 = true;
        if (gcd(odd_part(pp.prime - 1), nprime) != 1)
            return false;
    }
    return any_3mod4;
}

/// |E(n)| = 2 test for odd composite n.  Delegates to the closed form,
/// which is authoritative; see two_euler_liar_characterization for the
/// structural test it is cross-checked against.
inline bool has_two_euler_liars(u64 n, const Factorization& f) {
    detail::check_odd_composite(n, f);
    return monier_euler_count(n, f) == 2;
}

/// Structural two-Euler-liar test: either n = 3 (mod 4) with trivial gcd
/// product, or n = 1 (mod 4) a product of two distinct primes both = 3
/// (mod 4) with trivial gcd product.  Misses some odd prime-power shapes
/// (9, 81, 189, ...); the verify command reports the disagreement set.
inline bool two_euler_liar_characterization(u64 n, const Factorization& f) {
    detail::check_odd_composite(n, f);
    const u64 nprime = odd_part(n - 1);
    u64 product = 1;
    for (const auto& pp : f.factors)
        product *= gcd(odd_part(pp.prime - 1), nprime);
    if (n % 4 == 3)
        return product == 1;
    return f.distinct_primes() == 2 && f.is_squarefree() &&
           f.factors[0].prime % 4 == 3 && f.factors[1].prime % 4 == 3 &&
           product == 1;
}

/// Korselt criterion: squarefree composite with p-1 | n-1 for all p | n.
inline bool is_carmichael(u64 n, const Factorization& f) {
    detail::check_factors(n, f);
    if (f.distinct_primes() < 2 || !f.is_squarefree())
        return false;
    for (const auto& pp : f.factors)
        if ((n - 1) % (pp.prime - 1) != 0)
            return false;
    return true;
}

enum class WorstCaseCategory {
    case1_m_2m,        // (m+1)(2m+1), both odd primes
    case2_m_3m,        // (m+1)(3m+1), both primes = 3 (mod 4)
    case3_carmichael3, // Carmichael with three primes, equal ord_2(p-1)
    case4_small_square, // 9, 25, 49
    none,
};

struct WorstCaseClass {
    WorstCaseCategory category;
    bool is_max;  // |S(n)| attains phi(n)/4

    friend bool operator==(const WorstCaseClass&, const WorstCaseClass&) = default;
};

inline const char* to_string(WorstCaseCategory c) {
    switch (c) {
        case WorstCaseCategory::case1_m_2m: return "case1_m_2m";
        case WorstCaseCategory::case2_m_3m: return "case2_m_3m";
        case WorstCaseCategory::case3_carmichael3: return "case3_carmichael3";
        case WorstCaseCategory::case4_small_square: return "case4_small_square";
        case WorstCaseCategory::none: return "none";
    }
    return "none";
}

/// Classify odd composite n against the known catalogue of composites with
/// |S(n)| > phi(n)/8; category none means n is not in that set.
inline WorstCaseClass classify_worst_case(u64 n, const Factorization& f) {
    detail::check_odd_composite(n, f);
    WorstCaseCategory cat = WorstCaseCategory::none;
    if (f.distinct_primes() == 2 && f.is_squarefree()) {
        u64 p = f.factors[0].prime, q = f.factors[1].prime;
        if (q == 2 * p - 1)
            cat = WorstCaseCategory::case1_m_2m;
        else if (q == 3 * p - 2 && p % 4 == 3 && q % 4 == 3)
            cat = WorstCaseCategory::case2_m_3m;
    } else if (f.distinct_primes() == 3 && is_carmichael(n, f)) {
        unsigned k0 = odd_decompose(f.factors[0].prime - 1).k;
        bool equal = true;
        for (const auto& pp : f.factors)
            equal = equal && odd_decompose(pp.prime - 1).k == k0;
        if (equal)
            cat = WorstCaseCategory::case3_carmichael3;
    }
    if (cat == WorstCaseCategory::none && (n == 9 || n == 25 || n == 49))
        cat = WorstCaseCategory::case4_small_square;
    bool is_max = 4 * monier_strong_count(n, f) == euler_phi(f);
    return {cat, is_max};
}

/// The triple (|S(n)|, |E(n)|, |F(n)|) by closed form; odd n only.
struct LiarCounts {
    u64 strong;
    u64 euler;
    u64 fermat;
};

inline LiarCounts liar_counts(u64 n, const Factorization& f) {
    return {monier_strong_count(n, f), monier_euler_count(n, f), fermat_count(n, f)};
}

}  // namespace liars
