#ifndef PLOGP_ARITH_HPP
#define PLOGP_ARITH_HPP

#include "plogp/dd.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plogp::arith {

// Primes p in (X/2, X] with log p and the phase value p*log p.  Phases are
// stored in double-double: at X ~ 1e8 the triple deviations of interest sit
// below ulp(X log X), so plain doubles would erase them.  Arrays are
// structure-of-arrays so the search kernels can stream phase_hi.
struct PrimeTable {
    double x_scale = 0.0;
    std::vector<std::uint64_t> p;
    std::vector<double> logp;
    std::vector<double> phase_hi;
    std::vector<double> phase_lo;
    // inclusive double-double prefix sums of logp
    std::vector<double> prefix_hi;
    std::vector<double> prefix_lo;

    std::size_t size() const { return p.size(); }
    dd phase(std::size_t i) const { return {phase_hi[i], phase_lo[i]}; }
    // sum of logp over the index range [a, b)
    dd weight_between(std::size_t a, std::size_t b) const {
        if (a >= b) return dd(0.0);
        dd hi{prefix_hi[b - 1], prefix_lo[b - 1]};
        if (a == 0) return hi;
        return dd_sub(hi, dd{prefix_hi[a - 1], prefix_lo[a - 1]});
    }
    dd total_weight() const { return weight_between(0, size()); }
};

// Segmented, odd-only sieve over (X/2, X]; segments run in parallel and are
// merged in segment order, so the table is identical for any thread count.
// Throws domain_error for X < 4 and capacity_error when the table estimate
// exceeds mem_budget bytes.
PrimeTable sieve_range(double X, std::size_t mem_budget = std::size_t(3) << 30);

// Binary cache of a PrimeTable, keyed by x_scale and a format version.
// load returns false when the file is missing or does not match X/version.
void save_table(const PrimeTable& t, const std::string& path);
bool load_table(PrimeTable& t, double X, const std::string& path);

// Tables of mu(n), tau(n) and the von Mangoldt support up to `upto`,
// filled by one linear sieve pass.  Lambda(n) is kept exactly as the prime
// of which n is a power (0 otherwise); the log is taken on demand in
// whichever precision the caller wants.
struct ArithTables {
    std::uint64_t upto = 0;
    std::vector<std::int8_t> mobius;        // mu(n), index 0 unused
    std::vector<std::uint16_t> divisors;    // tau(n)
    std::vector<std::uint32_t> mangoldt_p;  // p if n = p^a, else 0

    double lambda(std::uint64_t n) const {
        std::uint32_t q = mangoldt_p[n];
        return q ? std::log(static_cast<double>(q)) : 0.0;
    }
    dd lambda_dd(std::uint64_t n) const {
        std::uint32_t q = mangoldt_p[n];
        return q ? dd_log_u64(q) : dd(0.0);
    }
    int mu(std::uint64_t n) const { return mobius[n]; }
    std::uint16_t tau(std::uint64_t n) const { return divisors[n]; }
};

ArithTables build_tables(std::uint64_t upto);

struct Lemma5Ratios {
    double sum_tau2 = 0.0;   // sum_{n<=X} tau(n)^2
    double sum_lambda2 = 0.0;// sum_{n<=X} Lambda(n)^2
    double r1 = 0.0;         // sum_tau2 / (X log^3 X)
    double r2 = 0.0;         // sum_lambda2 / (X log X)
};

// Monitors for sum tau^2 << X log^3 X and sum Lambda^2 << X log X.
Lemma5Ratios lemma5_ratios(double X);
Lemma5Ratios lemma5_ratios(double X, const ArithTables& tables);

} // namespace plogp::arith

#endif
