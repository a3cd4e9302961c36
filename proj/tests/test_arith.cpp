#include "plogp/arith.hpp"

#include "plogp/bigfloat.hpp"
#include "plogp/errors.hpp"
#include "plogp/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numeric>

using namespace plogp;
using namespace plogp::arith;

TEST_CASE("sieve_range small windows") {
    auto t = sieve_range(20.0);
    REQUIRE(t.size() == 4);
    CHECK(t.p == std::vector<std::uint64_t>{11, 13, 17, 19});
    // sum log p over the window, frozen from direct summation of 4 logs
    CHECK(to_double(t.total_weight()) == doctest::Approx(10.740496953482564).epsilon(1e-14));

    auto t4 = sieve_range(4.0);
    REQUIRE(t4.size() == 1);
    CHECK(t4.p[0] == 3);

    CHECK_THROWS_AS(sieve_range(3.0), domain_error);
}

TEST_CASE("sieve_range window edges are strict") {
    // X = 22: window (11, 22] must exclude 11
    auto t = sieve_range(22.0);
    CHECK(t.p == std::vector<std::uint64_t>{13, 17, 19});

    // X = 9.5: (4.75, 9.5] -> {5, 7}
    auto t2 = sieve_range(9.5);
    CHECK(t2.p == std::vector<std::uint64_t>{5, 7});
}

TEST_CASE("sieve matches trial division oracle up to 1e4") {
    for (double X : {50.0, 123.0, 999.0, 5000.0, 10000.0}) {
        auto t = sieve_range(X);
        auto oracle = reference::primes_in_window(X);
        CHECK(t.p == oracle);
    }
}

TEST_CASE("prime table invariants") {
    auto t = sieve_range(3000.0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(reference::is_prime_trial(t.p[i]));
        CHECK(2.0 * static_cast<double>(t.p[i]) > 3000.0); // p > X/2 strictly
        CHECK(static_cast<double>(t.p[i]) <= 3000.0);
        if (i) {
            CHECK(t.p[i] > t.p[i - 1]);
            CHECK(dd_lt(t.phase(i - 1), t.phase(i))); // p log p strictly increasing
        }
    }
    // phase accuracy against MPFR: |phase - p log p| <= 1e-20 * X log X
    const double bound = 1e-20 * 3000.0 * std::log(3000.0);
    for (std::size_t i = 0; i < t.size(); i += 17) {
        dd want = dd_mul_d(mp::log_oracle(t.p[i]), static_cast<double>(t.p[i]));
        CHECK(std::abs(to_double(dd_sub(t.phase(i), want))) <= bound);
    }
    // prefix sums: weight over [a, b) equals a direct sum
    double direct = 0.0;
    for (std::size_t i = 3; i < 10; ++i) direct += t.logp[i];
    CHECK(to_double(t.weight_between(3, 10)) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("prime table binary cache round trip") {
    auto t = sieve_range(1234.0);
    const std::string path = "/tmp/plogp_test_cache.bin";
    save_table(t, path);
    PrimeTable loaded;
    REQUIRE(load_table(loaded, 1234.0, path));
    CHECK(loaded.p == t.p);
    CHECK(loaded.phase_hi == t.phase_hi);
    CHECK(loaded.phase_lo == t.phase_lo);
    CHECK(loaded.prefix_hi == t.prefix_hi);
    // wrong X must miss
    PrimeTable miss;
    CHECK_FALSE(load_table(miss, 1235.0, path));
    std::remove(path.c_str());
}

TEST_CASE("sieve capacity error carries a suggestion") {
    CHECK_THROWS_AS(sieve_range(1e12, std::size_t(1) << 20), capacity_error);
}

TEST_CASE("build_tables spot values") {
    auto t = build_tables(100);
    // Lambda
    CHECK(t.lambda(8) == doctest::Approx(std::log(2.0)));
    CHECK(t.lambda(6) == 0.0);
    CHECK(t.lambda(97) == doctest::Approx(std::log(97.0)));
    CHECK(t.lambda(81) == doctest::Approx(std::log(3.0)));
    CHECK(t.lambda(1) == 0.0);
    // mu
    CHECK(t.mu(1) == 1);
    CHECK(t.mu(4) == 0);
    CHECK(t.mu(6) == 1);
    CHECK(t.mu(30) == -1);
    // tau
    CHECK(t.tau(12) == 6);
    CHECK(t.tau(1) == 1);
    CHECK(t.tau(97) == 2);
    CHECK_THROWS_AS(build_tables(1), domain_error);
}

TEST_CASE("build_tables against naive oracles") {
    auto t = build_tables(2000);
    for (std::uint64_t n = 1; n <= 2000; n += 7) {
        CHECK(t.mu(n) == reference::mobius_naive(n));
        CHECK(t.tau(n) == reference::tau_naive(n));
        CHECK(t.lambda(n) == doctest::Approx(reference::mangoldt_naive(n)).epsilon(1e-12));
    }
}

TEST_CASE("Chebyshev identity sum_{d|n} Lambda(d) = log n") {
    auto t = build_tables(5000);
    for (std::uint64_t n : {2ull, 12ull, 97ull, 360ull, 1024ull, 4999ull, 4620ull}) {
        double s = 0.0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) s += t.lambda(d);
        CHECK(s == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-10));
    }
}

TEST_CASE("Mobius identity sum_{d|n} mu(d) = [n == 1]") {
    auto t = build_tables(3000);
    for (std::uint64_t n = 1; n <= 3000; n += 13) {
        int s = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) s += t.mu(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("lemma5 sums at X = 10, frozen oracle values") {
    auto r = lemma5_ratios(10.0);
    // direct enumeration: Lambda nonzero at 2,3,4,5,7,8,9 with values
    // log2,log3,log2,log5,log7,log2,log3 -> 3(log2)^2 + 2(log3)^2 + (log5)^2
    // + (log7)^2 = 10.232113665556475
    CHECK(r.sum_lambda2 == doctest::Approx(10.232113665556475).epsilon(1e-12));
    const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0),
                 l7 = std::log(7.0);
    CHECK(r.sum_lambda2 ==
          doctest::Approx(3 * l2 * l2 + 2 * l3 * l3 + l5 * l5 + l7 * l7).epsilon(1e-13));
    // tau^2: 1+4+4+9+4+16+4+16+9+16 = 83
    CHECK(r.sum_tau2 == doctest::Approx(83.0).epsilon(1e-14));
}

TEST_CASE("lemma5 ratios bounded on the desk grid up to 1e7") {
    auto tables = build_tables(10000000);
    double sup1 = 0.0, sup2 = 0.0;
    for (double X : {1e3, 1e4, 1e5, 1e6, 1e7}) {
        auto r = lemma5_ratios(X, tables);
        CHECK(r.r1 > 0.0);
        CHECK(r.r2 > 0.0);
        CHECK(r.r1 <= 2.0);
        CHECK(r.r2 <= 2.0);
        sup1 = std::max(sup1, r.r1);
        sup2 = std::max(sup2, r.r2);
    }
    MESSAGE("lemma5 suprema over 1e3..1e7: r1 ", sup1, " r2 ", sup2);
}
