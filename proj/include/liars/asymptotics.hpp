#pragma once

// Numeric evaluation of the closed-form constants and prediction formulas
// used by the census and semiprime tables.  log is natural throughout.

#include <cmath>

#include "liars/core_arith.hpp"
#include "liars/factor_sieve.hpp"

namespace liars {

/// Euler's constant, stored to 20 digits (double keeps ~17).
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// e^(-gamma), the sieve density constant in the two-liar asymptotic.
inline constexpr double kExpNegGamma = 0.56145948356688516982;

/// Hardy-Littlewood twin prime constant, prod over p>2 of (1 - 1/(p-1)^2),
/// fully converged; used for the semiprime prediction columns.
inline constexpr double kTwinPrimeConstant = 0.6601618158468696;

struct Constants {
    double euler_gamma;
    double exp_neg_gamma;
    double twin_prime_C;
    u64 twin_prime_truncation;  // prime bound the product was cut at
};

/// Truncated twin-prime product over odd primes up to `bound`.  Monotone
/// decreasing in the bound; at 10^7 it agrees with 0.66016 to 5 decimals.
inline double twin_prime_constant(u64 bound, const FactorTable& t) {
    if (bound < 3)
        throw std::invalid_argument("twin_prime_constant: bound must be >= 3");
    double product = 1.0;
    t.for_each_prime(bound, [&](u64 p) {
        if (p > 2) {
            double d = static_cast<double>(p - 1);
            product *= 1.0 - 1.0 / (d * d);
        }
    });
    return product;
}

inline constexpr u64 kDefaultTwinPrimeTruncation = 10'000'000;

inline Constants compute_constants(const FactorTable& t,
                                   u64 truncation = kDefaultTwinPrimeTruncation) {
    return {kEulerGamma, kExpNegGamma, twin_prime_constant(truncation, t), truncation};
}

namespace detail {
inline void check_loglog_domain(double x) {
    // need log(log(log(x))) > 0, i.e. x > e^e; 16 is the documented cutoff
    if (!(x > 16.0))
        throw std::invalid_argument("x must exceed 16 for the iterated-log formulas");
}
}  // namespace detail

/// x * e^(-gamma) / logloglog(x): predicted count of odd n <= x with
/// exactly two strong liars.
inline double predict_two_liar_count(double x) {
    detail::check_loglog_domain(x);
    return x * kExpNegGamma / std::log(std::log(std::log(x)));
}

/// C * x * loglog(x) / log(x): predicted count of odd semiprimes pq <= x
/// with gcd(p', q') = 1.
inline double predict_semiprime_coprime(double x, double twin_C = kTwinPrimeConstant) {
    detail::check_loglog_domain(x);
    return twin_C * x * std::log(std::log(x)) / std::log(x);
}

/// (C/4) * x * loglog(x) / log(x): the sub-count with p = q = 1 (mod 4).
inline double predict_semiprime_1mod4(double x, double twin_C = kTwinPrimeConstant) {
    return predict_semiprime_coprime(x, twin_C) / 4.0;
}

/// count * logloglog(x) / x, the normalization under which the two-liar
/// census converges to e^(-gamma).
inline double normalized_ratio(u64 count, double x) {
    detail::check_loglog_domain(x);
    return static_cast<double>(count) * std::log(std::log(std::log(x))) / x;
}

/// Exact product over primes p <= z of (1 - 1/p); approaches
/// e^(-gamma)/log(z) for large z.
inline double mertens_product(u64 z, const FactorTable& t) {
    double product = 1.0;
    if (z >= 2)
        t.for_each_prime(z, [&](u64 p) { product *= 1.0 - 1.0 / static_cast<double>(p); });
    return product;
}

}  // namespace liars
