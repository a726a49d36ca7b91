#pragma once

#include <array>

#include "siqkd/link.hpp"
#include "siqkd/sources.hpp"

namespace siqkd {

enum class Basis : int { Z = 0, X = 1 };

/// Per-basis coincidence statistics. q_total = q_correct + q_error and
/// q_total * qber = e_d * q_correct + (1 - e_d) * q_error.
struct GainTable {
    std::array<double, 2> q_correct{};
    std::array<double, 2> q_error{};
    std::array<double, 2> q_total{};
    std::array<double, 2> qber{};

    double correct(Basis b) const { return q_correct[static_cast<int>(b)]; }
    double error(Basis b) const { return q_error[static_cast<int>(b)]; }
    double total(Basis b) const { return q_total[static_cast<int>(b)]; }
    double e(Basis b) const { return qber[static_cast<int>(b)]; }
};

struct ComponentGain {
    double correct;
    double error;
};

struct IdealGains {
    double q_correct;
    double q_error;
    double q_total;
    double qber;
};

// Closed-form correct/error gain of the n_total-photon sector (0..4 photons
// across both sources) at per-basis efficiency eta.
ComponentGain component_gains(int n_total, const PhotonNumberDistribution& dist,
                              double eta, double p_d);

// Sums sectors 0..4 at each basis efficiency and applies the misalignment
// mixing. The vacuum sector is included so the dark-count floor survives at
// long distance.
GainTable basis_gains(const PhotonNumberDistribution& dist, const LinkParams& link);

// Small-eta ideal-detector forms: <n>^2 eta^2 / 2, g2 <n>^2 eta^2 / 2,
// qber = g2 / (1 + g2). Test target only, not part of the rate path.
IdealGains ideal_gains(const PhotonNumberDistribution& dist, double eta);

// Finishes a gain table from per-basis correct/error sums (shared with the
// enumeration oracle so both paths apply e_d identically).
GainTable aggregate_gains(const std::array<double, 2>& correct,
                          const std::array<double, 2>& error, double e_d);

}  // namespace siqkd
