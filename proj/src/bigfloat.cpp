#include "plogp/bigfloat.hpp"

#include "plogp/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>

namespace plogp::mp {

namespace {

mpfr_prec_t prec_for(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 64;
}

std::string format_mpfr(mpfr_t x, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNg", digits, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace

Certificate certify_tuple(const std::vector<std::uint64_t>& primes, double N, int digits) {
    if (digits < 30) throw domain_error("certify_tuple: requires digits >= 30");
    const mpfr_prec_t prec = prec_for(digits);
    mpfr_t sum, term, dev;
    mpfr_inits2(prec, sum, term, dev, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    for (std::uint64_t p : primes) {
        mpfr_set_ui(term, static_cast<unsigned long>(p), MPFR_RNDN);
        mpfr_log(term, term, MPFR_RNDN);
        mpfr_mul_ui(term, term, static_cast<unsigned long>(p), MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    mpfr_sub_d(dev, sum, N, MPFR_RNDN);
    mpfr_abs(dev, dev, MPFR_RNDN);

    Certificate c;
    c.sum_phase = format_mpfr(sum, digits);
    c.deviation = format_mpfr(dev, digits);
    c.deviation_d = mpfr_get_d(dev, MPFR_RNDN);
    c.digits = digits;
    mpfr_clears(sum, term, dev, static_cast<mpfr_ptr>(nullptr));
    return c;
}

std::complex<double> s_sum_oracle(double alpha, const std::vector<std::uint64_t>& primes,
                                  int digits) {
    const mpfr_prec_t prec = prec_for(digits);
    mpfr_t lp, ph, red, ang, s, co, re, im, two_pi;
    mpfr_inits2(prec, lp, ph, red, ang, s, co, re, im, two_pi,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (std::uint64_t p : primes) {
        mpfr_set_ui(lp, static_cast<unsigned long>(p), MPFR_RNDN);
        mpfr_log(lp, lp, MPFR_RNDN);
        mpfr_mul_ui(ph, lp, static_cast<unsigned long>(p), MPFR_RNDN);
        mpfr_mul_d(ph, ph, alpha, MPFR_RNDN);
        mpfr_rint(red, ph, MPFR_RNDN);
        mpfr_sub(red, ph, red, MPFR_RNDN); // centered fractional part
        mpfr_mul(ang, red, two_pi, MPFR_RNDN);
        mpfr_sin_cos(s, co, ang, MPFR_RNDN);
        mpfr_mul(co, co, lp, MPFR_RNDN);
        mpfr_mul(s, s, lp, MPFR_RNDN);
        mpfr_add(re, re, co, MPFR_RNDN);
        mpfr_add(im, im, s, MPFR_RNDN);
    }
    std::complex<double> out{mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN)};
    mpfr_clears(lp, ph, red, ang, s, co, re, im, two_pi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

dd log_oracle(std::uint64_t n) {
    mpfr_t x;
    mpfr_init2(x, 160);
    mpfr_set_ui(x, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    const double hi = mpfr_get_d(x, MPFR_RNDN);
    mpfr_sub_d(x, x, hi, MPFR_RNDN);
    const double lo = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return {hi, lo};
}

} // namespace plogp::mp
