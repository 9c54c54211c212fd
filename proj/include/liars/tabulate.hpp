#pragma once

// Bulk census of odd n <= x with exactly two strong liars, by two routes:
//
//   algorithm1_census  per-n test: walk the prime divisors of each odd n,
//                      require gcd(p', n') = 1 for all of them plus a
//                      divisor p = 3 (mod 4).
//   algorithm2_census  progression sieve: eliminate n = p (mod 2pr) for
//                      every prime p and odd prime r | p-1 (phase A), then
//                      mark surviving odd multiples of primes = 3 (mod 4)
//                      as counted (phase B).
//
// Both count exactly #{odd n in [3, x] : |S(n)| = 2}; the only prime in
// that set is 3, which survives both phases by construction.  Checkpoint
// counts come from a final linear scan after the phases complete.

#include <atomic>
#include <map>
#include <thread>
#include <vector>

#include "liars/asymptotics.hpp"
#include "liars/core_arith.hpp"
#include "liars/factor_sieve.hpp"
#include "liars/liar_census.hpp"

namespace liars {

/// Three-state label per odd integer, packed 2 bits each (x = 10^9 takes
/// ~125 MB).  Even integers are implicitly eliminated by never being stored.
/// Writes are atomic and monotone (CANDIDATE -> ELIMINATED or COUNTED), so
/// the final state is independent of write order and thread count.
class SieveState {
public:
    enum State : u8 { kEliminated = 0, kCounted = 1, kCandidate = 2 };

    explicit SieveState(u64 limit)
        : limit_(limit), bytes_((limit / 2) / 4 + 1, 0xAA) {}  // 0xAA: four CANDIDATE fields

    u64 limit() const { return limit_; }

    State get(u64 n) const {
        u64 slot = n >> 1;
        return static_cast<State>((bytes_[slot >> 2] >> ((slot & 3) << 1)) & 3);
    }

    /// CANDIDATE -> ELIMINATED (idempotent; never touches COUNTED within
    /// the phase discipline, since elimination runs before counting).
    void eliminate(u64 n) {
        u64 slot = n >> 1;
        u8 mask = static_cast<u8>(~(u8{2} << ((slot & 3) << 1)));
        std::atomic_ref<u8>(bytes_[slot >> 2]).fetch_and(mask, std::memory_order_relaxed);
    }

    /// CANDIDATE -> COUNTED; leaves ELIMINATED and COUNTED entries alone.
    void mark_counted(u64 n) {
        u64 slot = n >> 1;
        unsigned shift = (slot & 3) << 1;
        std::atomic_ref<u8> ref(bytes_[slot >> 2]);
        u8 expected = ref.load(std::memory_order_relaxed);
        while (((expected >> shift) & 3) == kCandidate) {
            u8 desired = static_cast<u8>((expected & ~(u8{3} << shift)) | (u8{1} << shift));
            if (ref.compare_exchange_weak(expected, desired, std::memory_order_relaxed))
                return;
        }
    }

private:
    u64 limit_;
    std::vector<u8> bytes_;
};

struct CensusRow {
    u64 limit;
    u64 count;
    double normalized;  // count * logloglog(limit) / limit
    double predicted;   // limit * e^(-gamma) / logloglog(limit)
};

struct CensusReport {
    std::vector<CensusRow> rows;
};

struct Algorithm2Stats {
    u64 phase_a_updates = 0;  // elimination writes issued
    u64 phase_b_scans = 0;    // candidate probes issued
};

namespace detail {

/// Sorted, deduplicated checkpoints, all in (16, x].
inline std::vector<u64> validate_checkpoints(u64 x, std::vector<u64> cps) {
    if (cps.empty())
        cps.push_back(x);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    if (cps.back() > x)
        throw std::invalid_argument("checkpoint " + std::to_string(cps.back()) +
                                    " exceeds the census limit " + std::to_string(x));
    if (cps.front() <= 16)
        throw std::invalid_argument("checkpoints must exceed 16 for the ratio columns");
    return cps;
}

inline CensusRow make_row(u64 cp, u64 count) {
    return {cp, count, normalized_ratio(count, static_cast<double>(cp)),
            predict_two_liar_count(static_cast<double>(cp))};
}

/// Claim [lo, hi) in fixed-size chunks across `threads` workers.
template <class Fn>
void run_chunked(u64 lo, u64 hi, u64 chunk, unsigned threads, Fn&& fn) {
    if (threads <= 1) {
        for (u64 c = lo; c < hi; c += chunk)
            fn(c, std::min(c + chunk, hi));
        return;
    }
    std::atomic<u64> next{lo};
    auto worker = [&] {
        for (;;) {
            u64 c = next.fetch_add(chunk, std::memory_order_relaxed);
            if (c >= hi)
                return;
            fn(c, std::min(c + chunk, hi));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
}

}  // namespace detail

/// Per-n census.  For each odd n in [3, x], walks the distinct prime
/// divisors from the table, requiring gcd(p', n') = 1 for every one (the
/// incremental-gcd form of the prod p' test, which avoids building the
/// possibly overflowing product) and at least one divisor = 3 (mod 4).
inline CensusReport algorithm1_census(u64 x, const FactorTable& t,
                                      std::vector<u64> checkpoints) {
    if (x > t.limit())
        throw std::invalid_argument("census limit exceeds the factor table");
    auto cps = detail::validate_checkpoints(x, std::move(checkpoints));
    CensusReport report;
    u64 count = 0;
    std::size_t ci = 0;
    for (u64 n = 3; n <= x && ci < cps.size(); n += 2) {
        while (ci < cps.size() && cps[ci] < n) {
            report.rows.push_back(detail::make_row(cps[ci], count));
            ++ci;
        }
        if (ci == cps.size())
            break;
        const u64 nprime = odd_part(n - 1);
        bool any_3mod4 = false;
        bool coprime = true;
        for_each_distinct_prime(n, t, [&](u64 p) {
            if (p % 4 == 3)
                any_3mod4 = true;
            if (gcd(odd_part(p - 1), nprime) != 1) {
                coprime = false;
                return false;
            }
            return true;
        });
        if (coprime && any_3mod4)
            ++count;
    }
    for (; ci < cps.size(); ++ci)
        report.rows.push_back(detail::make_row(cps[ci], count));
    return report;
}

/// Progression-sieve census.  Identical counts to algorithm1_census.
inline CensusReport algorithm2_census(u64 x, const FactorTable& t,
                                      std::vector<u64> checkpoints,
                                      unsigned threads = 1,
                                      Algorithm2Stats* stats = nullptr) {
    if (x > t.limit())
        throw std::invalid_argument("census limit exceeds the factor table");
    auto cps = detail::validate_checkpoints(x, std::move(checkpoints));

    SieveState state(x);
    std::atomic<u64> a_updates{0}, b_scans{0};
    constexpr u64 kChunk = 1 << 16;

    // Phase A: for each odd prime p <= x and odd prime r | p-1, eliminate
    // the odd members of the progression n = p (mod pr), i.e. p, p + 2pr, ...
    detail::run_chunked(3, x + 1, kChunk, threads, [&](u64 lo, u64 hi) {
        u64 local = 0;
        for (u64 p = lo | 1; p < hi; p += 2) {
            if (!t.is_prime(p))
                continue;
            for_each_distinct_prime(odd_part(p - 1), t, [&](u64 r) {
                const u64 step = 2 * p * r;
                for (u64 n = p; n <= x; n += step) {
                    state.eliminate(n);
                    ++local;
                }
                return true;
            });
        }
        a_updates.fetch_add(local, std::memory_order_relaxed);
    });

    // Phase B: mark surviving odd multiples of primes = 3 (mod 4), the
    // prime itself included.  Only n = 3 among primes can still be a
    // candidate here (every prime p > 3 with p = 3 (mod 4) has an odd
    // prime factor in p-1 and was eliminated above).
    detail::run_chunked(3, x + 1, kChunk, threads, [&](u64 lo, u64 hi) {
        u64 local = 0;
        for (u64 p = lo | 1; p < hi; p += 2) {
            if (p % 4 != 3 || !t.is_prime(p))
                continue;
            for (u64 n = p; n <= x; n += 2 * p) {
                state.mark_counted(n);
                ++local;
            }
        }
        b_scans.fetch_add(local, std::memory_order_relaxed);
    });

    if (stats) {
        stats->phase_a_updates = a_updates.load();
        stats->phase_b_scans = b_scans.load();
    }

    // Final scan: counts are only valid once both phases are complete.
    CensusReport report;
    u64 count = 0;
    std::size_t ci = 0;
    for (u64 n = 3; n <= x && ci < cps.size(); n += 2) {
        while (ci < cps.size() && cps[ci] < n) {
            report.rows.push_back(detail::make_row(cps[ci], count));
            ++ci;
        }
        if (ci == cps.size())
            break;
        if (state.get(n) == SieveState::kCounted)
            ++count;
    }
    for (; ci < cps.size(); ++ci)
        report.rows.push_back(detail::make_row(cps[ci], count));
    return report;
}

/// Histogram of |S(n)| over the odd composite n <= x, by the closed form.
/// The values sum to the number of odd composites <= x.
inline std::map<u64, u64> strong_count_distribution(u64 x, const FactorTable& t) {
    if (x > t.limit())
        throw std::invalid_argument("distribution limit exceeds the factor table");
    std::map<u64, u64> histogram;
    for (u64 n = 9; n <= x; n += 2) {
        if (t.is_prime(n))
            continue;
        ++histogram[monier_strong_count(n, t.factorize(n))];
    }
    return histogram;
}

}  // namespace liars
