// liarcensus: census runs, semiprime tables, single-n inspection, oracle
// verification, and algorithm benchmarking for probable-prime liar sets.
//
// Exit codes: 0 ok, 1 usage/config error, 2 resource refusal,
//             3 internal cross-check failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liars/liars.hpp"

namespace {

using liars::u64;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitCrossCheck = 3;

/// CLI-level failure of an internal consistency check (alg1 vs alg2
/// mismatch, oracle mismatch in verify).
struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json, markdown };

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

u64 memory_budget_entries() {
    if (const char* env = std::getenv("LIARCENSUS_MEMORY_BUDGET")) {
        char* end = nullptr;
        unsigned long long bytes = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || bytes < 64)
            throw std::invalid_argument(
                "LIARCENSUS_MEMORY_BUDGET must be a byte count >= 64");
        return bytes / sizeof(liars::u32);
    }
    return liars::FactorTable::kDefaultMaxEntries;
}

/// Build the factor table, or reuse a cached dump when it covers the limit.
liars::FactorTable acquire_table(u64 limit, const std::string& cache) {
    const u64 budget = memory_budget_entries();
    if (!cache.empty() && std::filesystem::exists(cache)) {
        try {
            auto t = liars::FactorTable::load(cache, budget);
            if (t.limit() >= limit)
                return t;
            std::cerr << "table cache covers only " << t.limit() << ", rebuilding\n";
        } catch (const std::length_error&) {
            throw;
        } catch (const std::exception& e) {
            std::cerr << "ignoring table cache: " << e.what() << "\n";
        }
    }
    liars::FactorTable t(std::max<u64>(limit, 4), budget);
    if (!cache.empty())
        t.save(cache);
    return t;
}

std::vector<u64> parse_checkpoints(const std::string& spec, u64 limit) {
    std::vector<u64> cps;
    if (spec == "pow10") {
        for (u64 cp = 100; cp <= limit; cp *= 10)
            cps.push_back(cp);
        cps.push_back(limit);
        return cps;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            cps.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad checkpoint value: '" + item + "'");
        }
    }
    if (cps.empty())
        throw std::invalid_argument("empty checkpoint list");
    return cps;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- census ---------------------------------------------------------------

void emit_census(const liars::CensusReport& report, Format fmt) {
    switch (fmt) {
        case Format::csv:
            std::cout << "x,count,normalized,predicted\n";
            for (const auto& row : report.rows)
                std::cout << row.limit << ',' << row.count << ','
                          << fixed(row.normalized, 4) << ',' << fixed(row.predicted, 4)
                          << '\n';
            break;
        case Format::markdown:
            std::cout << "| x | count | normalized | predicted |\n"
                      << "| ---: | ---: | ---: | ---: |\n";
            for (const auto& row : report.rows)
                std::cout << "| " << row.limit << " | " << row.count << " | "
                          << fixed(row.normalized, 4) << " | " << fixed(row.predicted, 4)
                          << " |\n";
            break;
        case Format::json: {
            json out = json::array();
            for (const auto& row : report.rows)
                out.push_back({{"x", row.limit},
                               {"count", row.count},
                               {"normalized", row.normalized},
                               {"predicted", row.predicted}});
            std::cout << out.dump(2) << '\n';
            break;
        }
    }
}

int run_census(u64 limit, const std::string& checkpoint_spec, Format fmt,
               const std::string& algorithm, unsigned threads,
               const std::string& cache) {
    auto cps = parse_checkpoints(checkpoint_spec, limit);
    auto table = acquire_table(limit, cache);

    std::optional<liars::CensusReport> report;
    if (algorithm == "alg1" || algorithm == "both") {
        auto t0 = std::chrono::steady_clock::now();
        report = liars::algorithm1_census(limit, table, cps);
        if (algorithm == "both")
            std::cerr << "alg1: " << fixed(elapsed_ms(t0), 1) << " ms\n";
    }
    if (algorithm == "alg2" || algorithm == "both") {
        auto t0 = std::chrono::steady_clock::now();
        auto r2 = liars::algorithm2_census(limit, table, cps, threads);
        if (algorithm == "both") {
            std::cerr << "alg2: " << fixed(elapsed_ms(t0), 1) << " ms\n";
            for (std::size_t i = 0; i < r2.rows.size(); ++i)
                if (r2.rows[i].count != report->rows[i].count)
                    throw CrossCheckFailure(
                        "algorithm disagreement at x=" + std::to_string(r2.rows[i].limit) +
                        ": alg1=" + std::to_string(report->rows[i].count) +
                        " alg2=" + std::to_string(r2.rows[i].count));
        }
        report = std::move(r2);
    }
    emit_census(*report, fmt);
    return kExitOk;
}

// ---- semiprimes -----------------------------------------------------------

int run_semiprimes(u64 limit, const std::string& checkpoint_spec, Format fmt,
                   unsigned threads, const std::string& cache) {
    auto cps = parse_checkpoints(checkpoint_spec, limit);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    if (cps.back() > limit)
        throw std::invalid_argument("checkpoint exceeds the limit");
    if (cps.front() <= 16)
        throw std::invalid_argument("checkpoints must exceed 16 for the prediction columns");
    auto table = acquire_table(limit, cache);

    std::vector<liars::SemiprimeCounts> rows;
    rows.reserve(cps.size());
    for (u64 cp : cps)
        rows.push_back(liars::count_semiprimes(cp, table, threads));

    switch (fmt) {
        case Format::csv:
            std::cout << "x,count1,prediction1,count2,prediction2\n";
            for (const auto& r : rows)
                std::cout << r.limit << ',' << r.count_coprime << ','
                          << fixed(r.predicted_coprime, 2) << ',' << r.count_1mod4 << ','
                          << fixed(r.predicted_1mod4, 2) << '\n';
            break;
        case Format::markdown:
            std::cout << "| x | count 1 | prediction | count 2 | prediction |\n"
                      << "| ---: | ---: | ---: | ---: | ---: |\n";
            for (const auto& r : rows)
                std::cout << "| " << r.limit << " | " << r.count_coprime << " | "
                          << fixed(r.predicted_coprime, 2) << " | " << r.count_1mod4
                          << " | " << fixed(r.predicted_1mod4, 2) << " |\n";
            break;
        case Format::json: {
            json out = json::array();
            for (const auto& r : rows)
                out.push_back({{"x", r.limit},
                               {"count_coprime", r.count_coprime},
                               {"prediction_coprime", r.predicted_coprime},
                               {"count_1mod4", r.count_1mod4},
                               {"prediction_1mod4", r.predicted_1mod4},
                               {"count_two_liars", r.count_two_liars}});
            std::cout << out.dump(2) << '\n';
            break;
        }
    }
    return kExitOk;
}

// ---- distribution ---------------------------------------------------------

int run_distribution(u64 limit, Format fmt, const std::string& cache) {
    auto table = acquire_table(limit, cache);
    auto histogram = liars::strong_count_distribution(limit, table);
    switch (fmt) {
        case Format::csv:
            std::cout << "liar_count,occurrences\n";
            for (const auto& [ell, cnt] : histogram)
                std::cout << ell << ',' << cnt << '\n';
            break;
        case Format::markdown:
            std::cout << "| liar count | occurrences |\n| ---: | ---: |\n";
            for (const auto& [ell, cnt] : histogram)
                std::cout << "| " << ell << " | " << cnt << " |\n";
            break;
        case Format::json: {
            json out = json::array();
            for (const auto& [ell, cnt] : histogram)
                out.push_back({{"liar_count", ell}, {"occurrences", cnt}});
            std::cout << out.dump(2) << '\n';
            break;
        }
    }
    return kExitOk;
}

// ---- inspect --------------------------------------------------------------

/// Sets are listed only below this; above it the closed forms still apply.
constexpr u64 kInspectSetLimit = 2000;

liars::Factorization factorize_single(u64 n) {
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (root * root > n)
        --root;
    while ((root + 1) * (root + 1) <= n)
        ++root;
    liars::Factorization f;
    u64 m = n;
    if (root >= 2) {
        liars::FactorTable small(std::max<u64>(root, 4));
        small.for_each_prime(root, [&](u64 p) {
            if (m % p == 0) {
                liars::u32 e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                f.factors.push_back({p, e});
            }
        });
    }
    if (m > 1)
        f.factors.push_back({m, 1});
    return f;
}

std::string factorization_string(const liars::Factorization& f) {
    std::string s;
    for (const auto& pp : f.factors) {
        if (!s.empty())
            s += " * ";
        s += std::to_string(pp.prime);
        if (pp.exponent > 1)
            s += "^" + std::to_string(pp.exponent);
    }
    return s;
}

std::string join(const std::vector<u64>& v) {
    std::string s;
    for (u64 x : v) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(x);
    }
    return s;
}

int run_inspect(u64 n, Format fmt) {
    if (n < 3)
        throw std::invalid_argument("inspect requires n >= 3");
    auto f = factorize_single(n);
    const bool prime = f.distinct_primes() == 1 && f.factors[0].exponent == 1;
    const bool odd = n % 2 == 1;
    auto decomposition = liars::odd_decompose(n - 1);

    std::vector<std::pair<std::string, std::string>> fields;
    json j;
    auto put = [&](const std::string& key, const std::string& val) {
        fields.emplace_back(key, val);
        j[key] = val;
    };
    auto put_num = [&](const std::string& key, u64 val) {
        fields.emplace_back(key, std::to_string(val));
        j[key] = val;
    };

    put_num("n", n);
    put("factorization", factorization_string(f));
    put("prime", prime ? "yes" : "no");
    put_num("k", decomposition.k);
    put_num("odd_part", decomposition.odd);
    put_num("phi", liars::euler_phi(f));
    put_num("strong_liars", liars::monier_strong_count(n, f));
    if (odd)
        put_num("euler_liars", liars::monier_euler_count(n, f));
    put_num("fermat_liars", liars::fermat_count(n, f));
    if (n <= kInspectSetLimit) {
        put("strong_liar_set", join(liars::enumerate_strong_liars(n)));
        if (odd)
            put("euler_liar_set", join(liars::enumerate_euler_liars(n)));
        put("fermat_liar_set", join(liars::enumerate_fermat_liars(n)));
    }
    if (odd && !prime) {
        put("two_strong_liars", liars::has_two_strong_liars(n, f) ? "yes" : "no");
        put("two_euler_liars", liars::has_two_euler_liars(n, f) ? "yes" : "no");
        auto wc = liars::classify_worst_case(n, f);
        put("worst_case", liars::to_string(wc.category));
        put("attains_phi_over_4", wc.is_max ? "yes" : "no");
    }

    switch (fmt) {
        case Format::csv:
            std::cout << "field,value\n";
            for (const auto& [k, v] : fields)
                std::cout << k << ",\"" << v << "\"\n";
            break;
        case Format::markdown:
            std::cout << "| field | value |\n| --- | --- |\n";
            for (const auto& [k, v] : fields)
                std::cout << "| " << k << " | " << v << " |\n";
            break;
        case Format::json:
            std::cout << j.dump(2) << '\n';
            break;
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(u64 bound, const std::string& cache) {
    if (bound > 1'000'000)
        throw std::invalid_argument("verify bound is capped at 10^6 by policy");
    if (bound < 9) {
        std::cout << "no odd composites <= " << bound << "\n";
        return kExitOk;
    }
    auto table = acquire_table(bound, cache);

    u64 checked = 0, mismatches = 0;
    std::vector<u64> disagreement;
    for (u64 n = 9; n <= bound; n += 2) {
        if (table.is_prime(n))
            continue;
        ++checked;
        auto f = table.factorize(n);
        u64 bs = liars::enumerate_strong_liars(n).size();
        u64 be = liars::enumerate_euler_liars(n).size();
        u64 bf = liars::enumerate_fermat_liars(n).size();
        u64 ms = liars::monier_strong_count(n, f);
        u64 me = liars::monier_euler_count(n, f);
        u64 mf = liars::fermat_count(n, f);
        if (bs != ms || be != me || bf != mf) {
            ++mismatches;
            std::cout << "MISMATCH n=" << n << " brute(S,E,F)=(" << bs << ',' << be
                      << ',' << bf << ") formula=(" << ms << ',' << me << ',' << mf
                      << ")\n";
        }
        if ((me == 2) != liars::two_euler_liar_characterization(n, f))
            disagreement.push_back(n);
    }

    std::cout << "checked " << checked << " odd composites <= " << bound << ": "
              << mismatches << " closed-form mismatches\n";
    std::cout << "two-Euler-liar characterization disagreement set (" << disagreement.size()
              << " values):";
    for (std::size_t i = 0; i < disagreement.size() && i < 25; ++i)
        std::cout << ' ' << disagreement[i];
    if (disagreement.size() > 25)
        std::cout << " ...";
    std::cout << '\n';

    if (mismatches != 0)
        throw CrossCheckFailure("closed-form counts disagree with brute force");
    return kExitOk;
}

// ---- bench ----------------------------------------------------------------

int run_bench(u64 limit, const std::string& checkpoint_spec, unsigned threads,
              const std::string& cache) {
    auto cps = parse_checkpoints(checkpoint_spec, limit);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    if (cps.back() > limit)
        throw std::invalid_argument("checkpoint exceeds the limit");
    auto table = acquire_table(limit, cache);

    std::cout << "x,count,alg1_ms,alg2_ms,alg1_over_alg2,phase_a_updates,"
                 "updates_per_x_loglog\n";
    for (u64 cp : cps) {
        auto t1 = std::chrono::steady_clock::now();
        auto r1 = liars::algorithm1_census(cp, table, {cp});
        double ms1 = elapsed_ms(t1);

        liars::Algorithm2Stats stats;
        auto t2 = std::chrono::steady_clock::now();
        auto r2 = liars::algorithm2_census(cp, table, {cp}, threads, &stats);
        double ms2 = elapsed_ms(t2);

        if (r1.rows[0].count != r2.rows[0].count)
            throw CrossCheckFailure("algorithm disagreement at x=" + std::to_string(cp));

        double x = static_cast<double>(cp);
        double scale = stats.phase_a_updates / (x * std::log(std::log(x)));
        std::cout << cp << ',' << r1.rows[0].count << ',' << fixed(ms1, 2) << ','
                  << fixed(ms2, 2) << ',' << fixed(ms2 > 0 ? ms1 / ms2 : 0.0, 2) << ','
                  << stats.phase_a_updates << ',' << fixed(scale, 4) << '\n';
    }
    return kExitOk;
}

// ---- constants ------------------------------------------------------------

int run_constants(u64 truncation, Format fmt, const std::string& cache) {
    auto table = acquire_table(truncation, cache);
    auto c = liars::compute_constants(table, truncation);
    switch (fmt) {
        case Format::csv:
            std::cout << "constant,value,provenance\n";
            std::cout << "euler_gamma," << fixed(c.euler_gamma, 16) << ",literal\n";
            std::cout << "exp_neg_gamma," << fixed(c.exp_neg_gamma, 16) << ",literal\n";
            std::cout << "twin_prime_C," << fixed(c.twin_prime_C, 16)
                      << ",product over odd primes <= " << c.twin_prime_truncation << "\n";
            break;
        case Format::markdown:
            std::cout << "| constant | value | provenance |\n| --- | ---: | --- |\n"
                      << "| gamma | " << fixed(c.euler_gamma, 16) << " | literal |\n"
                      << "| e^-gamma | " << fixed(c.exp_neg_gamma, 16) << " | literal |\n"
                      << "| twin prime C | " << fixed(c.twin_prime_C, 16)
                      << " | product over odd primes <= " << c.twin_prime_truncation
                      << " |\n";
            break;
        case Format::json:
            std::cout << json{{"euler_gamma", c.euler_gamma},
                              {"exp_neg_gamma", c.exp_neg_gamma},
                              {"twin_prime_C", c.twin_prime_C},
                              {"twin_prime_truncation", c.twin_prime_truncation}}
                             .dump(2)
                      << '\n';
            break;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liar census toolkit for the strong, Euler and Fermat probable-prime tests"};
    app.require_subcommand(1);

    u64 limit = 1000;
    std::string checkpoints = "pow10";
    std::string format_name = "csv";
    std::string algorithm = "alg2";
    unsigned threads = 1;
    std::string cache;
    u64 inspect_n = 0;
    u64 verify_bound = 20000;
    u64 truncation = liars::kDefaultTwinPrimeTruncation;

    auto add_common = [&](CLI::App* cmd, bool with_algorithm) {
        cmd->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"csv", "json", "markdown"}));
        cmd->add_option("--threads", threads, "worker thread count")
            ->check(CLI::Range(1u, 256u));
        cmd->add_option("--table-cache", cache, "factor table dump path");
        if (with_algorithm)
            cmd->add_option("--algorithm", algorithm, "census algorithm")
                ->check(CLI::IsMember({"alg1", "alg2", "both"}));
    };

    auto* census = app.add_subcommand("census", "count odd n <= x with exactly two strong liars");
    census->add_option("--limit", limit, "census limit x")->required();
    census->add_option("--checkpoints", checkpoints, "comma list or 'pow10'");
    add_common(census, true);

    auto* semiprimes = app.add_subcommand("semiprimes", "count odd semiprimes pq with gcd(p',q')=1");
    semiprimes->add_option("--limit", limit, "semiprime limit x")->required();
    semiprimes->add_option("--checkpoints", checkpoints, "comma list or 'pow10'");
    add_common(semiprimes, false);

    auto* distribution = app.add_subcommand("distribution", "histogram of |S(n)| over odd composite n <= x");
    distribution->add_option("--limit", limit, "limit x")->required();
    add_common(distribution, false);

    auto* inspect = app.add_subcommand("inspect", "liar profile of a single n");
    inspect->add_option("n", inspect_n, "integer to inspect")->required();
    add_common(inspect, false);

    auto* verify = app.add_subcommand("verify", "brute-force check of all closed forms");
    verify->add_option("--bound", verify_bound, "check all odd composite n <= bound");
    add_common(verify, false);

    auto* bench = app.add_subcommand("bench", "timing table for both census algorithms");
    bench->add_option("--limit", limit, "largest benchmark point")->required();
    bench->add_option("--checkpoints", checkpoints, "comma list or 'pow10'");
    add_common(bench, false);

    auto* constants = app.add_subcommand("constants", "print gamma, e^-gamma and the twin prime constant");
    constants->add_option("--truncation", truncation, "twin-prime product bound");
    add_common(constants, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format fmt = format_name == "json"       ? Format::json
                 : format_name == "markdown" ? Format::markdown
                                             : Format::csv;
    try {
        if (census->parsed())
            return run_census(limit, checkpoints, fmt, algorithm, threads, cache);
        if (semiprimes->parsed())
            return run_semiprimes(limit, checkpoints, fmt, threads, cache);
        if (distribution->parsed())
            return run_distribution(limit, fmt, cache);
        if (inspect->parsed())
            return run_inspect(inspect_n, fmt);
        if (verify->parsed())
            return run_verify(verify_bound, cache);
        if (bench->parsed())
            return run_bench(limit, checkpoints, threads, cache);
        if (constants->parsed())
            return run_constants(truncation, fmt, cache);
    } catch (const CrossCheckFailure& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitCrossCheck;
    } catch (const std::length_error& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
