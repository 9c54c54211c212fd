#pragma once

// Index-addressed prime-divisor table over [2, x].  Built once, then
// immutable and shareable by any number of concurrent readers.
//
// entry[n] holds a prime divisor of n (the largest one <= sqrt(x), since
// marking runs over primes in ascending order), or 0 when n is prime.
// Factoring any n <= x is then a chain of table lookups.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "liars/core_arith.hpp"
#include "liars/factorization.hpp"

namespace liars {

class FactorTable {
public:
    /// Refuse tables above this many entries unless the caller raises the
    /// budget explicitly.  2e9 entries = 8 GiB of 32-bit slots.
    static constexpr u64 kDefaultMaxEntries = 2'000'000'000;

    explicit FactorTable(u64 limit, u64 max_entries = kDefaultMaxEntries)
        : limit_(limit) {
        if (limit < 4)
            throw std::invalid_argument("FactorTable: limit must be >= 4");
        if (limit + 1 > max_entries)
            throw std::length_error(
                "FactorTable: limit " + std::to_string(limit) +
                " exceeds the memory budget of " + std::to_string(max_entries) +
                " entries (" + std::to_string(max_entries * sizeof(u32) / (1024 * 1024)) +
                " MiB); raise the budget to proceed");
        entry_.assign(limit + 1, 0);
        for (u64 p = 2; p * p <= limit; ++p) {
            if (entry_[p] != 0)
                continue;  // composite
            for (u64 m = 2 * p; m <= limit; m += p)
                entry_[m] = static_cast<u32>(p);
        }
    }

    u64 limit() const { return limit_; }

    /// Stored prime divisor of n, or 0 when n is prime.
    u32 entry(u64 n) const {
        check_range(n);
        return entry_[n];
    }

    bool is_prime(u64 n) const {
        check_range(n);
        return entry_[n] == 0;
    }

    /// Full factorization of n by repeated table lookup, primes ascending.
    Factorization factorize(u64 n) const {
        check_range(n);
        Factorization f;
        while (n > 1) {
            u64 p = entry_[n];
            if (p == 0)
                p = n;  // prime remainder
            u32 e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.factors.push_back({p, e});
        }
        std::sort(f.factors.begin(), f.factors.end(),
                  [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
        return f;
    }

    /// Visit each prime in [2, hi] in ascending order.
    template <class Fn>
    void for_each_prime(u64 hi, Fn&& fn) const {
        check_range(hi);
        if (hi >= 2)
            fn(u64{2});
        for (u64 n = 3; n <= hi; n += 2)
            if (entry_[n] == 0)
                fn(n);
    }

    /// All primes in [2, hi], ascending.
    std::vector<u64> primes_up_to(u64 hi) const {
        std::vector<u64> primes;
        for_each_prime(hi, [&](u64 p) { primes.push_back(p); });
        return primes;
    }

    // ---- binary dump/load so repeated runs skip rebuilds ----------------
    //
    // 16-byte header (all little-endian): u32 magic, u32 version, u64 limit,
    // then (limit + 1) fixed-width u32 entries.

    static constexpr u32 kMagic = 0x4254464Cu;  // "LFTB"
    static constexpr u32 kVersion = 1;

    void save(const std::filesystem::path& path) const {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("FactorTable::save: cannot open " + path.string());
        write_u32(out, kMagic);
        write_u32(out, kVersion);
        write_u64(out, limit_);
        out.write(reinterpret_cast<const char*>(entry_.data()),
                  static_cast<std::streamsize>(entry_.size() * sizeof(u32)));
        if (!out)
            throw std::runtime_error("FactorTable::save: write failed for " + path.string());
    }

    static FactorTable load(const std::filesystem::path& path,
                            u64 max_entries = kDefaultMaxEntries) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("FactorTable::load: cannot open " + path.string());
        u32 magic = read_u32(in);
        u32 version = read_u32(in);
        u64 limit = read_u64(in);
        if (magic != kMagic)
            throw std::runtime_error("FactorTable::load: bad magic in " + path.string());
        if (version != kVersion)
            throw std::runtime_error("FactorTable::load: unsupported version in " + path.string());
        if (limit < 4 || limit + 1 > max_entries)
            throw std::length_error("FactorTable::load: stored limit exceeds memory budget");
        FactorTable t(private_tag{}, limit);
        t.entry_.resize(limit + 1);
        in.read(reinterpret_cast<char*>(t.entry_.data()),
                static_cast<std::streamsize>(t.entry_.size() * sizeof(u32)));
        if (!in || in.gcount() != static_cast<std::streamsize>(t.entry_.size() * sizeof(u32)))
            throw std::runtime_error("FactorTable::load: truncated file " + path.string());
        return t;
    }

private:
    struct private_tag {};
    FactorTable(private_tag, u64 limit) : limit_(limit) {}

    void check_range(u64 n) const {
        if (n < 2 || n > limit_)
            throw std::out_of_range("FactorTable: n=" + std::to_string(n) +
                                    " outside [2, " + std::to_string(limit_) + "]");
    }

    static void write_u32(std::ofstream& out, u32 v) {
        char b[4];
        for (int i = 0; i < 4; ++i)
            b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out.write(b, 4);
    }
    static void write_u64(std::ofstream& out, u64 v) {
        char b[8];
        for (int i = 0; i < 8; ++i)
            b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out.write(b, 8);
    }
    static u32 read_u32(std::ifstream& in) {
        unsigned char b[4] = {};
        in.read(reinterpret_cast<char*>(b), 4);
        u32 v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<u32>(b[i]) << (8 * i);
        return v;
    }
    static u64 read_u64(std::ifstream& in) {
        unsigned char b[8] = {};
        in.read(reinterpret_cast<char*>(b), 8);
        u64 v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<u64>(b[i]) << (8 * i);
        return v;
    }

    u64 limit_;
    std::vector<u32> entry_;
};

/// Walk the distinct prime divisors of n using the table, without building
/// a Factorization.  fn(p) is called once per distinct prime, ascending is
/// NOT guaranteed.  Returning false from fn stops the walk early.
template <class Fn>
inline void for_each_distinct_prime(u64 n, const FactorTable& t, Fn&& fn) {
    while (n > 1) {
        u64 p = t.entry(n);
        if (p == 0)
            p = n;
        if (!fn(p))
            return;
        while (n % p == 0)
            n /= p;
    }
}

}  // namespace liars
