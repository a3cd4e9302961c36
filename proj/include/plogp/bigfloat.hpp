#ifndef PLOGP_BIGFLOAT_HPP
#define PLOGP_BIGFLOAT_HPP

#include "plogp/dd.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace plogp::mp {

// MPFR-backed certification of a prime tuple: sum p_i log p_i and
// |sum - N| at `digits` significant decimal digits.  MPFR's log is correctly
// rounded, so the working precision (digits*log2(10) + 64 bits) bounds the
// final error by construction.
struct Certificate {
    std::string sum_phase; // decimal, `digits` significant digits
    std::string deviation;
    double deviation_d = 0.0;
    int digits = 0;
};

Certificate certify_tuple(const std::vector<std::uint64_t>& primes, double N, int digits);

// Arbitrary-precision re-summation oracle for S(alpha) (test use):
// sum log p * e(alpha p log p) evaluated at `digits` digits throughout.
std::complex<double> s_sum_oracle(double alpha, const std::vector<std::uint64_t>& primes,
                                  int digits);

// log n rounded to double-double (test oracle for dd_log_u64)
dd log_oracle(std::uint64_t n);

} // namespace plogp::mp

#endif
