#ifndef PLOGP_DD_HPP
#define PLOGP_DD_HPP

// Double-double arithmetic: a value is the unevaluated sum hi + lo of two
// doubles, |lo| <= ulp(hi)/2, giving ~31 significant digits.  Error-free
// transforms follow Dekker/Knuth; see Ogita, Rump, Oishi, "Accurate Sum and
// Dot Product", SIAM J. Sci. Comput. 26(6), 2005, and the QD library of
// Hida/Li/Bailey.  two_prod requires a correct fma.

#ifdef __FAST_MATH__
#error "-ffast-math breaks the error-free transforms in dd.hpp"
#endif

#include <cmath>
#include <complex>
#include <cstdint>

namespace plogp {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// requires |a| >= |b| or a == 0
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
};

inline double to_double(dd a) { return a.hi + a.lo; }

inline dd dd_add(dd a, dd b) {
    double s1, s2, t1, t2;
    s1 = two_sum(a.hi, b.hi, s2);
    t1 = two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = quick_two_sum(s1, s2, s2);
    s2 += t2;
    s1 = quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }
inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_add_d(dd a, double b) {
    double s1, s2;
    s1 = two_sum(a.hi, b, s2);
    s2 += a.lo;
    s1 = quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline dd dd_mul(dd a, dd b) {
    double p1, p2;
    p1 = two_prod(a.hi, b.hi, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    p1 = quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline dd dd_mul_d(dd a, double b) {
    double p1, p2;
    p1 = two_prod(a.hi, b, p2);
    p2 += a.lo * b;
    p1 = quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul_d(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul_d(b, q2));
    double q3 = r.hi / b.hi;
    double s1, s2;
    s1 = quick_two_sum(q1, q2, s2);
    dd q{s1, s2};
    return dd_add_d(q, q3);
}

inline dd dd_div_d(dd a, double b) { return dd_div(a, dd(b)); }

inline dd dd_abs(dd a) { return a.hi < 0.0 ? dd_neg(a) : a; }

inline bool dd_lt(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool dd_le(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo <= b.lo); }
inline bool dd_eq(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd operator+(dd a, dd b) { return dd_add(a, b); }
inline dd operator-(dd a, dd b) { return dd_sub(a, b); }
inline dd operator*(dd a, dd b) { return dd_mul(a, b); }
inline dd operator/(dd a, dd b) { return dd_div(a, b); }
inline dd operator-(dd a) { return dd_neg(a); }
inline bool operator<(dd a, dd b) { return dd_lt(a, b); }

// ldexp is exact on both limbs
inline dd dd_ldexp(dd a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

namespace ddc {
// double-double constants, hi/lo split of the correctly rounded value
inline constexpr dd ln2{0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};
inline constexpr dd pi{0x1.921fb54442d18p+1, 0x1.1a62633145c07p-53};
inline constexpr dd two_pi{0x1.921fb54442d18p+2, 0x1.1a62633145c07p-52};
}

// exp/log with ~31 correct digits (see src/dd.cpp)
dd dd_exp(dd a);
dd dd_log(dd a);          // a.hi > 0 required
dd dd_log_u64(std::uint64_t n);

// x reduced to the centered fractional part, result in [-1/2, 1/2]
inline dd mod1_centered(dd x) {
    double m = std::nearbyint(x.hi);
    dd r = dd_sub(x, dd(m));
    if (r.hi > 0.5 || (r.hi == 0.5 && r.lo > 0.0))
        r = dd_add_d(r, -1.0);
    else if (r.hi < -0.5 || (r.hi == -0.5 && r.lo < 0.0))
        r = dd_add_d(r, 1.0);
    return r;
}

// e(x) = exp(2*pi*i*x) with the phase reduced mod 1 in double-double first.
// After reduction the angle fits in a double with ~1e-16 relative error,
// which is all sin/cos can use anyway.
inline std::complex<double> e_of(dd x) {
    dd f = mod1_centered(x);
    double t = 2.0 * M_PI * (f.hi + f.lo);
    return {std::cos(t), std::sin(t)};
}

} // namespace plogp

#endif
