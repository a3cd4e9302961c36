#ifndef PLOGP_SCALING_HPP
#define PLOGP_SCALING_HPP

#include <cstdint>

namespace plogp::scaling {

// Parameter set derived from the scale X:
//   N   = 2 X log(2X/3)
//   eps = X^(-1/25) log^8 X
//   tau = X^(-23/25)
//   K   = X^(1/25)  log^-6 X
//   k   = max(1, floor(log X))
struct CircleParams {
    double N = 0.0;
    double X = 0.0;
    double eps = 0.0;
    double tau = 0.0;
    double K = 0.0;
    int k = 1;
};

// Unique X >= 3/2 with 2 X log(2X/3) = N.  Bracketed bisection to
// machine proximity, then three Newton polish steps.  N < 0 is a domain
// error; N = 0 gives X = 3/2.
double solve_X(double N);

// Throws domain_error for X <= 3/2 (log(2X/3) <= 0 there).
CircleParams derive_params(double X);

// Unique y >= 1 with y log y = t, for t >= 0.  dy/dt = 1/(1 + log y).
double invert_ylogy(double t);

} // namespace plogp::scaling

#endif
