#include <doctest.h>

#include <cmath>

#include "siqkd/finite_key.hpp"

using namespace siqkd;

TEST_SUITE("finite-key") {

TEST_CASE("binary entropy anchors and direct value") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.11) == doctest::Approx(0.49991595816452800).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("chernoff bound collapses to beta at zero expectation") {
    CHECK(chernoff_upper(0.0, 1e-10) == doctest::Approx(23.025850929940457).epsilon(1e-14));
    CHECK(chernoff_upper(1e6, 1e-10) == doctest::Approx(1006797.6631159142).epsilon(1e-12));
    double beta = std::log(2.0);
    CHECK(chernoff_upper(1e6, 0.5) ==
          doctest::Approx(1e6 + beta / 2.0 + std::sqrt(2.0 * beta * 1e6 + beta * beta / 4.0))
              .epsilon(1e-14));
    CHECK_THROWS_AS(chernoff_upper(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(chernoff_upper(1.0, 0.0), DomainError);
}

TEST_CASE("chernoff bound dominates a small binomial tail") {
    // n = 100, p = 0.1: P(X >= ceil(xbar)) must be below eps.
    const int n = 100;
    const double p = 0.1;
    const double eps = 1e-3;
    double xbar = chernoff_upper(n * p, eps);
    double tail = 0.0;
    for (int k = static_cast<int>(std::ceil(xbar)); k <= n; ++k) {
        double log_term = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                          k * std::log(p) + (n - k) * std::log(1.0 - p);
        tail += std::exp(log_term);
    }
    CHECK(tail <= eps);
}

TEST_CASE("chernoff upper bound is above the expectation and decreasing in eps") {
    for (double x : {0.0, 10.0, 1e4, 1e8}) {
        double prev = -1.0;
        for (double eps : {1e-3, 1e-6, 1e-10}) {
            double b = chernoff_upper(x, eps);
            CHECK(b >= x);
            CHECK(b > prev);  // tighter eps pushes the bound up
            prev = b;
        }
    }
}

TEST_CASE("gamma_u frozen value and edge cases") {
    CHECK(gamma_u(1e5, 1e5, 0.02, 1e-10) ==
          doctest::Approx(0.0040081347595773265).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_u(1e5, 1e5, 0.0, 1e-10), DomainError);
    CHECK_THROWS_AS(gamma_u(1e5, 1e5, 1.0, 1e-10), DomainError);
    CHECK_THROWS_AS(gamma_u(0.0, 1e5, 0.02, 1e-10), DomainError);
}

TEST_CASE("gamma_u tightens with more data") {
    double base = gamma_u(1e5, 1e5, 0.02, 1e-10);
    CHECK(base > 0.0);
    CHECK(gamma_u(1e6, 1e5, 0.02, 1e-10) < base);
    CHECK(gamma_u(1e5, 1e6, 0.02, 1e-10) < base);
}

TEST_CASE("phase error composition and fallbacks") {
    SiftedCounts c;
    c.n_z = 1e5;
    c.n_x = 1e5;
    c.m_x = 0.02 * 1e5;
    CHECK(phase_error_si(c, 2e-10) == doctest::Approx(0.024008134759577).epsilon(1e-9));

    c.m_x = 0.5 * 1e5;
    CHECK(phase_error_si(c, 1e-10) == 0.5);

    SiftedCounts empty;
    empty.n_z = 1e5;
    empty.n_x = 0.0;
    CHECK(phase_error_si(empty, 1e-10) == 0.5);
}

TEST_CASE("key length constant terms at zero noise") {
    SiftedCounts c;
    c.n_z = 1e6;
    FiniteKeyBudget budget{1e12, 1.16, 1e-15, 1e-10};
    CHECK(key_length_si(c, 0.0, budget) == 999882.0);
    CHECK(key_length_si(c, 0.5, budget) == 0.0);
    SiftedCounts none;
    CHECK(key_length_si(none, 0.0, budget) == 0.0);
}

TEST_CASE("key length monotonicity") {
    FiniteKeyBudget budget{1e12, 1.16, 1e-15, 1e-10};
    SiftedCounts c;
    c.n_z = 1e6;
    c.m_z = 1e4;
    double prev = 1e300;
    for (double phi : {0.0, 0.01, 0.05, 0.2, 0.4}) {
        double l = key_length_si(c, phi, budget);
        CHECK(l <= prev);
        prev = l;
    }
    prev = 1e300;
    for (double m : {0.0, 1e3, 1e4, 5e4}) {
        c.m_z = m;
        double l = key_length_si(c, 0.01, budget);
        CHECK(l <= prev);
        prev = l;
    }
    c.m_z = 0.0;
    double small = key_length_si(c, 0.01, budget);
    c.n_z = 2e6;
    CHECK(key_length_si(c, 0.01, budget) >= small);
}

}  // TEST_SUITE
