#include "plogp/scaling.hpp"

#include "plogp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plogp::scaling {

namespace {

// Generic increasing-function inverter: bisection until the bracket is a few
// ulps wide, then Newton polish.  f must be strictly increasing on [lo, hi].
template <class F, class DF>
double invert_increasing(F f, DF df, double target, double lo, double hi) {
    // expand the bracket on the right if needed
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::abs(lo) * 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        double d = df(x);
        if (d <= 0.0) break;
        double step = (f(x) - target) / d;
        double xn = x - step;
        if (xn < lo) xn = lo;
        if (xn > hi) xn = hi;
        x = xn;
    }
    return x;
}

} // namespace

double solve_X(double N) {
    if (!(N >= 0.0)) throw domain_error("solve_X: N must be >= 0");
    if (N == 0.0) return 1.5;
    auto f = [](double x) { return 2.0 * x * std::log(2.0 * x / 3.0); };
    auto df = [](double x) { return 2.0 * std::log(2.0 * x / 3.0) + 2.0; };
    double x = invert_increasing(f, df, N, 1.5, 3.0);
    return std::max(x, 1.5);
}

CircleParams derive_params(double X) {
    if (!(X > 1.5)) throw domain_error("derive_params: requires X > 3/2");
    const double L = std::log(X);
    CircleParams p;
    p.X = X;
    p.N = 2.0 * X * std::log(2.0 * X / 3.0);
    p.eps = std::exp(-L / 25.0) * std::pow(L, 8.0);
    p.tau = std::exp(-23.0 * L / 25.0);
    p.K = std::exp(L / 25.0) * std::pow(L, -6.0);
    p.k = std::max(1, static_cast<int>(std::floor(L)));
    return p;
}

double invert_ylogy(double t) {
    if (!(t >= 0.0)) throw domain_error("invert_ylogy: t must be >= 0");
    if (t == 0.0) return 1.0;
    auto f = [](double y) { return y * std::log(y); };
    auto df = [](double y) { return 1.0 + std::log(y); };
    double y = invert_increasing(f, df, t, 1.0, 2.0);
    return std::max(y, 1.0);
}

} // namespace plogp::scaling
