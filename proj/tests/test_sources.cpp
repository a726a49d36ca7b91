#include <doctest.h>

#include <cmath>

#include "siqkd/sources.hpp"

using namespace siqkd;

TEST_SUITE("sources") {

TEST_CASE("pure single-photon limit") {
    auto d = sps_distribution(1.0, 0.0);
    CHECK(d.p0 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.p1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.p2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("direct evaluation at mean 1, g2 0.01") {
    auto d = sps_distribution(1.0, 0.01);
    CHECK(d.p2 == doctest::Approx(0.005).epsilon(1e-12));
    CHECK(d.p1 == doctest::Approx(0.99).epsilon(1e-12));
    CHECK(d.p0 == doctest::Approx(0.005).epsilon(1e-12));
}

TEST_CASE("impossible pairs rejected") {
    CHECK_THROWS_AS(sps_distribution(1.5, 0.01), InvalidSource);
    CHECK_THROWS_AS(sps_distribution(-0.1, 0.01), InvalidSource);
    CHECK_THROWS_AS(sps_distribution(0.5, -1.0), InvalidSource);
}

TEST_CASE("distribution invariants over an admissible grid") {
    for (double mean : {0.05, 0.2, 0.5, 0.8, 1.0}) {
        for (double g2 : {0.0, 0.005, 0.02, 0.1}) {
            auto d = sps_distribution(mean, g2);
            CHECK(d.p0 + d.p1 + d.p2 == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(d.p1 + 2.0 * d.p2 == doctest::Approx(mean).epsilon(1e-12));
            if (g2 > 0.0) {
                double g2_back = 2.0 * d.p2 / ((d.p1 + 2.0 * d.p2) * (d.p1 + 2.0 * d.p2));
                CHECK(g2_back == doctest::Approx(g2).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("odd cat closed forms") {
    CHECK(odd_cat_g2(0.5) == doctest::Approx(0.21355226703407259).epsilon(1e-12));
    CHECK(odd_cat_g2(1.0) == doctest::Approx(0.58002565838597393).epsilon(1e-12));
    CHECK(odd_cat_mean(1.0) == doctest::Approx(1.3130352854993313).epsilon(1e-12));
    CHECK(odd_cat_mean(0.5) == doctest::Approx(1.0819767068693264).epsilon(1e-12));
    CHECK_THROWS_AS(odd_cat_g2(0.0), DomainError);
    CHECK_THROWS_AS(odd_cat_mean(-1.0), DomainError);
}

TEST_CASE("small-mu limits without cancellation") {
    CHECK(odd_cat_mean(1e-8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(odd_cat_g2(1e-8) == doctest::Approx(0.0).epsilon(1e-12));
    auto d = odd_cat_distribution(1e-8);
    CHECK(d.p1 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("odd cat distribution composes the closed forms") {
    auto d = odd_cat_distribution(0.1);
    CHECK(d.g2 == doctest::Approx(0.009933709152560222).epsilon(1e-12));
    CHECK_THROWS_AS(odd_cat_distribution(-1.0), DomainError);
}

TEST_CASE("Fock-sum check matches closed forms to 1e-9") {
    for (double mu : {0.05, 0.1, 0.25, 0.5, 1.0}) {
        auto [mean, g2] = odd_cat_fock_check(mu, 40);
        CHECK(mean == doctest::Approx(odd_cat_mean(mu)).epsilon(1e-9));
        CHECK(g2 == doctest::Approx(odd_cat_g2(mu)).epsilon(1e-9));
        CHECK(odd_cat_even_weight(mu, 40) <= 1e-12);
    }
}

TEST_CASE("cutoff too small is detected") {
    CHECK_THROWS_AS(odd_cat_fock_check(0.5, 2), CutoffTooSmall);
}

TEST_CASE("g2 strictly increasing, mean >= 1") {
    double prev = 0.0;
    for (double mu = 0.05; mu <= 2.0; mu += 0.05) {
        double g = odd_cat_g2(mu);
        CHECK(g > prev);
        CHECK(odd_cat_mean(mu) >= 1.0);
        prev = g;
    }
}

}  // TEST_SUITE
