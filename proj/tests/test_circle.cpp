#include "plogp/circle.hpp"

#include "plogp/errors.hpp"
#include "plogp/expsum.hpp"
#include "plogp/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace plogp;
using namespace plogp::circle;

TEST_CASE("gamma_direct frozen example: N=100, X=20, eps=1") {
    auto t = arith::sieve_range(20.0);
    auto tc = gamma_direct(100.0, 1.0, t, nullptr);
    // contributing ordered triples: (13,13,13) and the three orderings of
    // (11,11,17); brute-force value 65.746807583234594
    CHECK(tc.gamma == doctest::Approx(65.746807583234594).epsilon(1e-12));
    CHECK(tc.witness_count == 4);
}

TEST_CASE("gamma_direct equals the cubic brute force") {
    std::mt19937_64 rng(555);
    for (double X : {60.0, 150.0}) {
        auto t = arith::sieve_range(X);
        const double Nmid = 2.0 * X * std::log(2.0 * X / 3.0);
        std::uniform_real_distribution<double> un(0.8 * Nmid, 1.2 * Nmid);
        std::uniform_real_distribution<double> ue(0.3, 3.0);
        for (int trial = 0; trial < 5; ++trial) {
            const double N = un(rng), eps = ue(rng);
            kernel::KernelSpec spec{eps, 3};
            auto fast = gamma_direct(N, eps, t, &spec);
            double bg, bg0;
            std::uint64_t bc;
            reference::gamma_direct_bruteforce(N, eps, t, &spec, bg, bg0, bc);
            CHECK(fast.gamma == doctest::Approx(bg).epsilon(1e-10));
            CHECK(fast.gamma0 == doctest::Approx(bg0).epsilon(1e-10));
            CHECK(fast.witness_count == bc);
        }
    }
}

TEST_CASE("gamma_direct edge behavior") {
    auto t = arith::sieve_range(20.0);
    // vanishing window around a non-representable target
    auto none = gamma_direct(100.0, 1e-9, t, nullptr);
    CHECK(none.gamma == 0.0);
    CHECK(none.witness_count == 0);
    // monotone in eps
    double prev = 0.0;
    for (double eps : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
        auto tc = gamma_direct(100.0, eps, t, nullptr);
        CHECK(tc.gamma >= prev - 1e-12);
        prev = tc.gamma;
    }
    CHECK_THROWS_AS(gamma_direct(100.0, 0.0, t, nullptr), domain_error);
    // kernel eps mismatch
    kernel::KernelSpec bad{2.0, 3};
    CHECK_THROWS_AS(gamma_direct(100.0, 1.0, t, &bad), domain_error);
    // capacity budget
    CHECK_THROWS_AS(gamma_direct(100.0, 1.0, t, nullptr, 3), capacity_error);
}

TEST_CASE("gamma0 sandwich between indicator sums at 3eps/4 and eps") {
    auto t = arith::sieve_range(200.0);
    const double N = 2.0 * 200.0 * std::log(400.0 / 3.0);
    const double eps = 1.5;
    kernel::KernelSpec spec{eps, 4};
    auto mid = gamma_direct(N, eps, t, &spec);
    auto lo = gamma_direct(N, 0.75 * eps, t, nullptr);
    auto hi = gamma_direct(N, eps, t, nullptr);
    CHECK(mid.gamma0 >= lo.gamma - 1e-10);
    CHECK(mid.gamma0 <= hi.gamma + 1e-10);
    CHECK(mid.gamma >= mid.gamma0 - 1e-12); // psi <= indicator
}

TEST_CASE("Fourier-inversion master oracle at X = 100 and 200") {
    for (double X : {100.0, 200.0}) {
        auto params = scaling::derive_params(X);
        auto table = arith::sieve_range(X);
        kernel::KernelSpec spec{1.0, params.k};
        const double scale = spec.eps * X * X / std::max(1.0, std::log(X));
        auto arcs = s3_arcs(params.N, params, table, spec, 1e-4 * scale);
        auto dir = gamma_direct(params.N, spec.eps, table, &spec);
        const double diff = std::abs(dir.gamma0 - arcs.g0.real());
        CHECK(diff <= arcs.quadrature_err + arcs.truncation_err);
        // conjugate symmetry of the integrand: imaginary part is noise
        CHECK(std::abs(arcs.g0.imag()) <=
              1e-6 * std::max(1.0, std::abs(arcs.g0.real())));
        // arc additivity at node level
        const auto sum = arcs.g1 + arcs.g2 + arcs.g3;
        CHECK(std::abs(sum - arcs.g0) <= 1e-9 * (1.0 + std::abs(arcs.g0)));
        // |g3| bounded by the integrand bound over (t2, B]
        const double S0 = to_double(table.total_weight());
        if (arcs.t2 > 0.0 && arcs.t2 < arcs.B)
            CHECK(std::abs(arcs.g3) <=
                  S0 * S0 * S0 * kernel::tail_bound(spec, arcs.t2) + arcs.quadrature_err);
    }
}

TEST_CASE("gamma0_integral and gamma_split wrappers") {
    const double X = 150.0;
    auto params = scaling::derive_params(X);
    auto table = arith::sieve_range(X);
    kernel::KernelSpec spec{1.0, params.k};
    const double scale = spec.eps * X * X / std::max(1.0, std::log(X));
    ArcsReport full;
    const double g0 = gamma0_integral(params.N, params, table, spec, 1e-4 * scale, &full);
    auto split = gamma_split(params.N, params, table, spec, 1e-4 * scale);
    CHECK(std::abs((split.g1 + split.g2 + split.g3).real() - g0) <=
          1e-9 * (1.0 + std::abs(g0)));
    CHECK(std::isfinite(split.ratio_g1));
    CHECK(std::isfinite(split.ratio_g2));
    CHECK(split.ratio_g3 >= 0.0);
    CHECK(full.B > 0.0);
}

TEST_CASE("truncation self-consistency: tighter tol moves g0 within error budgets") {
    const double X = 150.0;
    auto params = scaling::derive_params(X);
    auto table = arith::sieve_range(X);
    kernel::KernelSpec spec{1.0, params.k};
    const double scale = spec.eps * X * X / std::max(1.0, std::log(X));
    auto a1 = s3_arcs(params.N, params, table, spec, 1e-3 * scale);
    auto a2 = s3_arcs(params.N, params, table, spec, 1e-5 * scale); // larger B
    CHECK(a2.B > a1.B);
    CHECK(std::abs(a1.g0.real() - a2.g0.real()) <=
          a1.truncation_err + a2.truncation_err + a1.quadrature_err + a2.quadrature_err);
}

TEST_CASE("theta integrals against the 3-d volume sandwich at X = 100") {
    const double X = 100.0;
    auto params = scaling::derive_params(X);
    auto table = arith::sieve_range(X);
    kernel::KernelSpec spec{1.0, params.k};
    const double scale = spec.eps * X * X / std::max(1.0, std::log(X));
    auto th = theta_integrals(params.N, params, table, spec, 1e-4 * scale);

    // indicator(3eps/4) <= psi <= indicator(eps) integrated over the cube;
    // the midpoint-rule oracle carries a small grid error of its own
    const double lo = reference::box_triple_volume(params.N, X, 0.75 * spec.eps, 700);
    const double hi = reference::box_triple_volume(params.N, X, spec.eps, 700);
    const double budget = th.quadrature_err + th.truncation_err + 0.02 * (hi - lo);
    CHECK(th.theta.real() >= lo - budget);
    CHECK(th.theta.real() <= hi + budget);
    CHECK(th.ratio > 0.0);
    CHECK(std::abs(th.theta.imag()) <= 1e-6 * th.theta.real());
    // tail gap against eps/(tau^2 (1+log X)^3) with constant 1
    CHECK(th.tail_gap <= th.tail_gap_bound);
}

TEST_CASE("full report is self-consistent at X = 120") {
    const double X = 120.0;
    auto params = scaling::derive_params(X);
    auto table = arith::sieve_range(X);
    kernel::KernelSpec spec{2.0, 4};
    const double scale = spec.eps * X * X / std::max(1.0, std::log(X));
    auto rep = full_report(params.N, params, table, spec, 1e-4 * scale);
    CHECK(rep.gamma_direct >= rep.gamma0_direct);
    CHECK(rep.gamma0_direct >= 0.0);
    CHECK(std::abs(rep.gamma0_integral - rep.gamma0_direct) <=
          rep.quadrature_err + rep.truncation_err);
    CHECK(std::abs((rep.gamma1 + rep.gamma2 + rep.gamma3).real() - rep.gamma0_integral) <=
          1e-9 * (1.0 + std::abs(rep.gamma0_integral)));
    CHECK(std::isfinite(rep.ratio_g1));
    CHECK(std::isfinite(rep.ratio_g2));
    CHECK(std::isfinite(rep.ratio_g3));
    CHECK(rep.ratio_theta > 0.0);
}
