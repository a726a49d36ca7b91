#include <doctest.h>

#include <cmath>
#include <numeric>

#include "siqkd/fock.hpp"

using namespace siqkd;
using namespace siqkd::fock;

namespace {

FockState plus_component(int i, int j) {
    FockState s;
    s.modes = {"c_+", "d_+"};
    s.amps[{i, j}] = 1.0;
    ModeMap to_hv = {
        {"c_+", {{"c_H", std::sqrt(0.5)}, {"c_V", std::sqrt(0.5)}}},
        {"d_+", {{"d_H", std::sqrt(0.5)}, {"d_V", std::sqrt(0.5)}}},
    };
    return apply_mode_map(s, to_hv, {"c_H", "c_V", "d_H", "d_V"});
}

PhotonNumberDistribution raw_dist(double p0, double p1, double p2) {
    PhotonNumberDistribution d;
    d.p0 = p0;
    d.p1 = p1;
    d.p2 = p2;
    d.mean = p1 + 2.0 * p2;
    d.g2 = d.mean > 0.0 ? 2.0 * p2 / (d.mean * d.mean) : 0.0;
    return d;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("vacuum passes the PBS unchanged") {
    auto out = pbs_evolve(plus_component(0, 0));
    CHECK(out.amps.size() == 1);
    CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("|1>|1> interference gives four equal branches of magnitude 1/2") {
    auto out = pbs_evolve(plus_component(1, 1));
    CHECK(out.amps.size() == 4);
    for (const auto& [occ, amp] : out.amps)
        CHECK(std::abs(amp) == doctest::Approx(0.5).epsilon(1e-12));
    // |HH>_ab branch: one photon in a_H, one in b_H
    CHECK(std::abs(out.amps.at({1, 0, 1, 0})) == doctest::Approx(0.5).epsilon(1e-12));
    // |HV>_aa branch bunches on Alice
    CHECK(std::abs(out.amps.at({1, 1, 0, 0})) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("|2>|0> splits with the sqrt(2) middle branch") {
    auto out = pbs_evolve(plus_component(2, 0));
    // (|2H>_a + sqrt(2)|H>_a|V>_b + |2V>_b) / 2 up to port labels
    CHECK(out.amps.size() == 3);
    CHECK(std::abs(out.amps.at({2, 0, 0, 0})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(out.amps.at({1, 0, 0, 1})) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(std::abs(out.amps.at({0, 0, 0, 2})) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("missing modes raise ModeMismatch") {
    FockState s;
    s.modes = {"c_H", "c_V"};
    s.amps[{1, 0}] = 1.0;
    CHECK_THROWS_AS(pbs_evolve(s), ModeMismatch);
}

TEST_CASE("lossless transforms preserve norm and photon number") {
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            auto hv = plus_component(i, j);
            auto ab = pbs_evolve(hv);
            auto a = party_analyzer_evolve(ab, 0.37, Party::A);
            auto b = party_analyzer_evolve(a, 0.37, Party::B);
            CHECK(hv.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(ab.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(b.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(b.max_total_photons() == i + j);
        }
    }
}

TEST_CASE("analyzer with p_z = 1 leaves X arms empty") {
    auto ab = pbs_evolve(plus_component(1, 0));
    auto a = party_analyzer_evolve(ab, 1.0, Party::A);
    for (const auto& [occ, amp] : a.amps) {
        CHECK(occ[a.mode_index("A_X+")] == 0);
        CHECK(occ[a.mode_index("A_X-")] == 0);
    }
}

TEST_CASE("same-side H,V pair bunches in the diagonal basis") {
    // a_H a_V -> (X+^2 - X-^2)/2 at p_z = 0
    FockState s;
    s.modes = {"a_H", "a_V", "b_H", "b_V"};
    s.amps[{1, 1, 0, 0}] = 1.0;
    auto out = party_analyzer_evolve(s, 0.0, Party::A);
    int xp = out.mode_index("A_X+");
    int xm = out.mode_index("A_X-");
    double w20 = 0.0, w02 = 0.0, w11 = 0.0;
    for (const auto& [occ, amp] : out.amps) {
        if (occ[xp] == 2) w20 = std::norm(amp);
        if (occ[xm] == 2) w02 = std::norm(amp);
        if (occ[xp] == 1 && occ[xm] == 1) w11 = std::norm(amp);
    }
    CHECK(w20 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w02 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w11 == 0.0);
}

TEST_CASE("click distribution basics") {
    FockState vac;
    vac.modes = {"m0", "m1"};
    vac.amps[{0, 0}] = 1.0;
    auto d = click_distribution(vac, 0.5, 0.0);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-12));

    FockState one;
    one.modes = {"m0"};
    one.amps[{1}] = 1.0;
    auto d1 = click_distribution(one, 1.0, 0.0);
    CHECK(d1[1] == doctest::Approx(1.0).epsilon(1e-12));

    FockState two;
    two.modes = {"m0"};
    two.amps[{2}] = 1.0;
    auto d2 = click_distribution(two, 0.5, 0.0);
    CHECK(d2[1] == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("click patterns always sum to 1") {
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            auto b = party_analyzer_evolve(
                party_analyzer_evolve(pbs_evolve(plus_component(i, j)), 0.4, Party::A), 0.4,
                Party::B);
            for (double eta : {0.0, 0.3, 1.0}) {
                for (double p_d : {0.0, 1e-3}) {
                    auto d = click_distribution(b, eta, p_d);
                    double sum = std::accumulate(d.begin(), d.end(), 0.0);
                    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("joint components form a product measure") {
    auto dist = sps_distribution(1.0, 0.01);
    auto comps = build_joint_components(dist, dist);
    CHECK(comps.size() == 9);
    double total = 0.0;
    for (const auto& [w, state] : comps) {
        total += w;
        CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("perfect single photons, lossless and noiseless") {
    LinkParams link;
    link.eta_det = 1.0;
    link.p_d = 0.0;
    link.e_d = 0.0;
    link.p_z = 0.5;
    auto table = oracle_basis_gains(raw_dist(0.0, 1.0, 0.0), link);
    CHECK(table.total(Basis::Z) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(table.e(Basis::Z) == doctest::Approx(0.0).epsilon(1e-12));
    // X-basis correlation follows from (|HH>+|VV>)/sqrt2 = (|++>+|-->)/sqrt2
    CHECK(table.total(Basis::X) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(table.e(Basis::X) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("all-vacuum source leaves only the dark-count floor") {
    LinkParams link;
    link.p_d = 1e-3;
    link.e_d = 0.0;
    auto table = oracle_basis_gains(raw_dist(1.0, 0.0, 0.0), link);
    double pd = link.p_d;
    double expected = 4.0 * pd * pd * (1.0 - pd / 2.0) * (1.0 - pd / 2.0);
    CHECK(table.total(Basis::Z) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(table.correct(Basis::Z) == doctest::Approx(expected / 2.0).epsilon(1e-12));
}

TEST_CASE("oracle matches the analytic sectors on a spot grid") {
    auto dist = sps_distribution(0.9, 0.05);
    for (int sector = 0; sector <= 4; ++sector) {
        for (double eta : {0.004, 0.1}) {
            for (double p_d : {0.0, 1e-5}) {
                auto analytic = component_gains(sector, dist, eta, p_d);
                auto oracle = oracle_sector_gains(sector, dist, 0.5, eta / 0.5, p_d);
                // Z basis reproduces the printed forms exactly; totals agree in
                // both bases (the no-click factor is bunching-invariant).
                CHECK(oracle.correct[0] == doctest::Approx(analytic.correct).epsilon(1e-9));
                CHECK(oracle.error[0] == doctest::Approx(analytic.error).epsilon(1e-9));
                for (int b = 0; b < 2; ++b)
                    CHECK(oracle.correct[b] + oracle.error[b] ==
                          doctest::Approx(analytic.correct + analytic.error).epsilon(1e-9));
                if (p_d == 0.0) {
                    // In the X basis the H/V-distinguishable error events give
                    // unbiased outcomes: half their weight becomes correct. The
                    // four-photon sector adds a correlated doubly-bunched term.
                    double bunch = sector == 4 ? dist.p2 * dist.p2 *
                                                     eta * eta * eta * eta / 16.0
                                               : 0.0;
                    double err_x = analytic.error / 2.0 - bunch;
                    CHECK(oracle.error[1] == doctest::Approx(err_x).epsilon(1e-9));
                    CHECK(oracle.correct[1] ==
                          doctest::Approx(analytic.correct + analytic.error - err_x)
                              .epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("oracle equals the ideal forms for a near-ideal setup") {
    auto dist = sps_distribution(1.0, 0.01);
    LinkParams link;
    link.total_distance = 250.0;
    link.p_d = 0.0;
    link.e_d = 0.0;
    auto oracle = oracle_basis_gains(dist, link);
    auto analytic = basis_gains(dist, link);
    for (auto b : {Basis::Z, Basis::X})
        CHECK(oracle.total(b) == doctest::Approx(analytic.total(b)).epsilon(1e-9));
    CHECK(oracle.e(Basis::Z) == doctest::Approx(analytic.e(Basis::Z)).epsilon(1e-9));
    // X-basis qber is half the printed Z-form value (distinguishable errors
    // are unbiased coin flips in the diagonal basis).
    CHECK(oracle.e(Basis::X) == doctest::Approx(analytic.e(Basis::Z) / 2.0).epsilon(1e-9));
}

}  // TEST_SUITE
