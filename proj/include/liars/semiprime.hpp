#pragma once

// Exact counts of odd semiprimes n = pq <= x (p < q distinct odd primes)
// with gcd(p', q') = 1, the sub-count having p = q = 1 (mod 4), and the
// derived count with exactly two strong liars.
//
// Prime squares are excluded: the published tables this reproduces count
// distinct-factor semiprimes only (including p = q would add the squares
// of Fermat primes, 9, 25, 289, ..., and break the match).

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "liars/asymptotics.hpp"
#include "liars/core_arith.hpp"
#include "liars/factor_sieve.hpp"

namespace liars {

struct SemiprimeCounts {
    u64 limit;
    u64 count_coprime;    // pq <= x, p < q odd, gcd(p', q') = 1
    u64 count_1mod4;      // subset with p = q = 1 (mod 4)
    u64 count_two_liars;  // count_coprime - count_1mod4
    double predicted_coprime;  // C x loglog(x) / log(x)
    double predicted_1mod4;    // C/4 x loglog(x) / log(x)
};

/// Double loop over odd primes p <= sqrt(x) and q in (p, x/p], testing
/// gcd(p', q') = 1 per pair.  Partitions over outer primes when threaded;
/// counts are plain sums, so the result is partition-independent.
inline SemiprimeCounts count_semiprimes(u64 x, const FactorTable& t,
                                        unsigned threads = 1) {
    if (x > t.limit())
        throw std::invalid_argument("semiprime limit exceeds the factor table");

    // odd primes up to x/3 with precomputed odd parts of p-1
    std::vector<u32> primes;
    std::vector<u32> odd_parts;
    if (x / 3 >= 3)
        t.for_each_prime(x / 3, [&](u64 p) {
            if (p > 2) {
                primes.push_back(static_cast<u32>(p));
                odd_parts.push_back(static_cast<u32>(odd_part(p - 1)));
            }
        });

    std::atomic<u64> coprime_total{0}, onemod4_total{0};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        u64 coprime = 0, onemod4 = 0;
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= primes.size())
                break;
            const u64 p = primes[i];
            if (p * p > x)
                break;
            const u64 pp = odd_parts[i];
            const bool p1mod4 = p % 4 == 1;
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                const u64 q = primes[j];
                if (p * q > x)
                    break;
                if (gcd(pp, odd_parts[j]) == 1) {
                    ++coprime;
                    if (p1mod4 && q % 4 == 1)
                        ++onemod4;
                }
            }
        }
        coprime_total.fetch_add(coprime, std::memory_order_relaxed);
        onemod4_total.fetch_add(onemod4, std::memory_order_relaxed);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    const u64 c1 = coprime_total.load();
    const u64 c2 = onemod4_total.load();
    const double xd = static_cast<double>(x);
    const bool in_domain = x > 16;
    return {x,
            c1,
            c2,
            c1 - c2,
            in_domain ? predict_semiprime_coprime(xd) : std::numeric_limits<double>::quiet_NaN(),
            in_domain ? predict_semiprime_1mod4(xd) : std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace liars
