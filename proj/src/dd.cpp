#include "plogp/dd.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace plogp {

// exp by the usual three-stage scheme: reduce modulo ln2, scale the residual
// by 2^-9, run a short Taylor series, then square nine times.  Relative error
// stays a few units in the 104th bit.
dd dd_exp(dd a) {
    if (a.hi > 709.0) return dd(std::numeric_limits<double>::infinity());
    if (a.hi < -745.0) return dd(0.0);

    double m = std::nearbyint(a.hi / ddc::ln2.hi);
    dd t = dd_sub(a, dd_mul_d(ddc::ln2, m));
    t = dd_ldexp(t, -9); // |t| <= ln2/2 / 512 < 6.8e-4

    dd term = t;
    dd sum = dd_add_d(t, 1.0);
    for (int j = 2; j <= 12; ++j) {
        term = dd_div_d(dd_mul(term, t), static_cast<double>(j));
        sum = dd_add(sum, term);
    }
    for (int j = 0; j < 9; ++j) sum = dd_mul(sum, sum);
    return dd_ldexp(sum, static_cast<int>(m));
}

// log via one Newton-ish correction of the double-precision seed:
// with r = a*exp(-x0) - 1 (|r| ~ 1e-16), log a = x0 + r - r^2/2 + O(r^3).
dd dd_log(dd a) {
    if (!(a.hi > 0.0)) throw std::domain_error("dd_log: nonpositive argument");
    double x0 = std::log(a.hi);
    dd r = dd_add_d(dd_mul(a, dd_exp(dd(-x0))), -1.0);
    dd corr = dd_sub(r, dd_ldexp(dd_mul(r, r), -1));
    return dd_add(dd(x0), corr);
}

dd dd_log_u64(std::uint64_t n) {
    assert(n > 0 && n <= (1ull << 53));
    return dd_log(dd(static_cast<double>(n)));
}

} // namespace plogp
