#include "plogp/arith.hpp"

#include "plogp/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace plogp::arith {

namespace {

constexpr std::uint32_t kCacheMagic = 0x504c4754; // "PLGT"
constexpr std::uint32_t kCacheVersion = 1;

std::vector<std::uint32_t> small_primes_upto(std::uint64_t limit) {
    std::vector<char> is_prime(limit + 1, 1);
    is_prime[0] = 0;
    if (limit >= 1) is_prime[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (is_prime[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (is_prime[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

} // namespace

PrimeTable sieve_range(double X, std::size_t mem_budget) {
    if (!(X >= 4.0)) throw domain_error("sieve_range: requires X >= 4");

    // integer window: lo_excl < p <= hi
    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(X));
    const std::uint64_t lo_excl = static_cast<std::uint64_t>(std::floor(X / 2.0));

    // Estimated table footprint: 48 bytes per prime plus sieve scratch.
    const double est_count = X / (2.0 * std::max(1.0, std::log(X) - 1.1));
    const double est_bytes = est_count * 48.0 + 8e6;
    if (est_bytes > static_cast<double>(mem_budget)) {
        const double chunks = std::ceil(est_bytes / static_cast<double>(mem_budget));
        char msg[256];
        std::snprintf(msg, sizeof(msg),
                      "sieve_range: X=%.6g needs ~%.0f MB (> budget %.0f MB); "
                      "process the window in %.0f chunks of width %.6g",
                      X, est_bytes / 1048576.0,
                      static_cast<double>(mem_budget) / 1048576.0, chunks,
                      (X / 2.0) / chunks);
        throw capacity_error(msg);
    }

    const auto base = small_primes_upto(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1);

    // Odd-only segments over (lo_excl, hi]; X >= 4 keeps 2 out of the window.
    const std::uint64_t first = (lo_excl + 1) | 1; // first odd candidate > lo_excl
    const std::uint64_t span = hi >= first ? (hi - first) / 2 + 1 : 0; // count of odd candidates
    const std::uint64_t seg_odds = 1u << 20;
    const std::uint64_t n_segs = span ? (span + seg_odds - 1) / seg_odds : 0;

    std::vector<std::vector<std::uint64_t>> seg_primes(n_segs);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n_segs); ++s) {
        const std::uint64_t o0 = static_cast<std::uint64_t>(s) * seg_odds;
        const std::uint64_t cnt = std::min(seg_odds, span - o0);
        const std::uint64_t n0 = first + 2 * o0; // value of slot 0
        std::vector<char> mark(cnt, 1);
        for (std::uint32_t q : base) {
            if (q == 2) continue;
            const std::uint64_t qq = static_cast<std::uint64_t>(q) * q;
            if (qq > n0 + 2 * (cnt - 1)) break;
            // first odd multiple of q that is >= max(q*q, n0)
            std::uint64_t m = std::max<std::uint64_t>(qq, ((n0 + q - 1) / q) * q);
            if ((m & 1) == 0) m += q;
            for (; m <= n0 + 2 * (cnt - 1); m += 2 * q) mark[(m - n0) / 2] = 0;
        }
        auto& out = seg_primes[s];
        for (std::uint64_t i = 0; i < cnt; ++i)
            if (mark[i]) out.push_back(n0 + 2 * i);
    }

    PrimeTable t;
    t.x_scale = X;
    std::size_t total = 0;
    for (auto& v : seg_primes) total += v.size();
    t.p.reserve(total);
    for (auto& v : seg_primes)
        t.p.insert(t.p.end(), v.begin(), v.end());

    const std::size_t n = t.p.size();
    t.logp.resize(n);
    t.phase_hi.resize(n);
    t.phase_lo.resize(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        dd l = dd_log_u64(t.p[i]);
        dd ph = dd_mul_d(l, static_cast<double>(t.p[i]));
        t.logp[i] = to_double(l);
        t.phase_hi[i] = ph.hi;
        t.phase_lo[i] = ph.lo;
    }

    t.prefix_hi.resize(n);
    t.prefix_lo.resize(n);
    dd acc(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        acc = dd_add_d(acc, t.logp[i]);
        t.prefix_hi[i] = acc.hi;
        t.prefix_lo[i] = acc.lo;
    }
    return t;
}

void save_table(const PrimeTable& t, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw capacity_error("save_table: cannot open " + path);
    const std::uint64_t n = t.p.size();
    std::fwrite(&kCacheMagic, sizeof(kCacheMagic), 1, f);
    std::fwrite(&kCacheVersion, sizeof(kCacheVersion), 1, f);
    std::fwrite(&t.x_scale, sizeof(double), 1, f);
    std::fwrite(&n, sizeof(n), 1, f);
    std::fwrite(t.p.data(), sizeof(std::uint64_t), n, f);
    std::fwrite(t.logp.data(), sizeof(double), n, f);
    std::fwrite(t.phase_hi.data(), sizeof(double), n, f);
    std::fwrite(t.phase_lo.data(), sizeof(double), n, f);
    std::fwrite(t.prefix_hi.data(), sizeof(double), n, f);
    std::fwrite(t.prefix_lo.data(), sizeof(double), n, f);
    std::fclose(f);
}

bool load_table(PrimeTable& t, double X, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return false;
    std::uint32_t magic = 0, version = 0;
    double x = 0.0;
    std::uint64_t n = 0;
    bool ok = std::fread(&magic, sizeof(magic), 1, f) == 1 &&
              std::fread(&version, sizeof(version), 1, f) == 1 &&
              std::fread(&x, sizeof(x), 1, f) == 1 &&
              std::fread(&n, sizeof(n), 1, f) == 1 &&
              magic == kCacheMagic && version == kCacheVersion && x == X;
    if (ok) {
        t.x_scale = x;
        t.p.resize(n);
        t.logp.resize(n);
        t.phase_hi.resize(n);
        t.phase_lo.resize(n);
        t.prefix_hi.resize(n);
        t.prefix_lo.resize(n);
        ok = std::fread(t.p.data(), sizeof(std::uint64_t), n, f) == n &&
             std::fread(t.logp.data(), sizeof(double), n, f) == n &&
             std::fread(t.phase_hi.data(), sizeof(double), n, f) == n &&
             std::fread(t.phase_lo.data(), sizeof(double), n, f) == n &&
             std::fread(t.prefix_hi.data(), sizeof(double), n, f) == n &&
             std::fread(t.prefix_lo.data(), sizeof(double), n, f) == n;
    }
    std::fclose(f);
    return ok;
}

ArithTables build_tables(std::uint64_t upto) {
    if (upto < 2) throw domain_error("build_tables: requires upto >= 2");
    if (upto > 120'000'000ull)
        throw capacity_error("build_tables: upto > 1.2e8 exceeds the table memory budget");

    ArithTables t;
    t.upto = upto;
    const std::size_t n = upto + 1;
    t.mobius.assign(n, 0);
    t.divisors.assign(n, 0);
    t.mangoldt_p.assign(n, 0);

    // linear sieve; exp1[i] = exponent of the smallest prime factor of i
    std::vector<std::uint32_t> primes;
    std::vector<std::uint8_t> exp1(n, 0);
    primes.reserve(n / 12 + 16);

    t.mobius[1] = 1;
    t.divisors[1] = 1;
    for (std::uint64_t i = 2; i <= upto; ++i) {
        if (t.divisors[i] == 0) { // i prime
            primes.push_back(static_cast<std::uint32_t>(i));
            t.mobius[i] = -1;
            t.divisors[i] = 2;
            exp1[i] = 1;
            t.mangoldt_p[i] = static_cast<std::uint32_t>(i);
        }
        for (std::uint32_t q : primes) {
            const std::uint64_t m = i * q;
            if (m > upto) break;
            if (i % q == 0) {
                t.mobius[m] = 0;
                exp1[m] = exp1[i] + 1;
                t.divisors[m] = static_cast<std::uint16_t>(
                    t.divisors[i] / (exp1[i] + 1) * (exp1[i] + 2));
                t.mangoldt_p[m] = (t.mangoldt_p[i] == q) ? q : 0;
                break;
            }
            t.mobius[m] = static_cast<std::int8_t>(-t.mobius[i]);
            exp1[m] = 1;
            t.divisors[m] = static_cast<std::uint16_t>(t.divisors[i] * 2);
            t.mangoldt_p[m] = 0; // q < spf(i), so m = q*i is never a prime power
        }
    }
    return t;
}

Lemma5Ratios lemma5_ratios(double X, const ArithTables& tables) {
    if (!(X >= 10.0)) throw domain_error("lemma5_ratios: requires X >= 10");
    const std::uint64_t n = static_cast<std::uint64_t>(std::floor(X));
    if (tables.upto < n) throw domain_error("lemma5_ratios: tables too small for X");

    double s_tau2 = 0.0, c_tau = 0.0;     // Neumaier-compensated
    double s_lam2 = 0.0, c_lam = 0.0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const double t2 = static_cast<double>(tables.divisors[i]) *
                          static_cast<double>(tables.divisors[i]);
        double s = s_tau2 + t2;
        c_tau += (std::abs(s_tau2) >= t2) ? (s_tau2 - s) + t2 : (t2 - s) + s_tau2;
        s_tau2 = s;
        if (tables.mangoldt_p[i]) {
            const double l = std::log(static_cast<double>(tables.mangoldt_p[i]));
            const double l2 = l * l;
            double u = s_lam2 + l2;
            c_lam += (std::abs(s_lam2) >= l2) ? (s_lam2 - u) + l2 : (l2 - u) + s_lam2;
            s_lam2 = u;
        }
    }
    Lemma5Ratios r;
    r.sum_tau2 = s_tau2 + c_tau;
    r.sum_lambda2 = s_lam2 + c_lam;
    const double L = std::log(X);
    r.r1 = r.sum_tau2 / (X * L * L * L);
    r.r2 = r.sum_lambda2 / (X * L);
    return r;
}

Lemma5Ratios lemma5_ratios(double X) {
    if (!(X >= 10.0)) throw domain_error("lemma5_ratios: requires X >= 10");
    const auto tables = build_tables(static_cast<std::uint64_t>(std::floor(X)));
    return lemma5_ratios(X, tables);
}

} // namespace plogp::arith
