#pragma once

#include <utility>

#include "siqkd/errors.hpp"

namespace siqkd {

/// Truncated photon-number distribution of a high-purity source.
/// Multi-photon emission is assumed to be dominated by the two-photon
/// component, so {p0, p1, p2} together with the mean and g2(0) fully
/// characterize the pulse.
struct PhotonNumberDistribution {
    double p0 = 1.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double mean = 0.0;  // <n>, photons per pulse
    double g2 = 0.0;    // second-order correlation g2(0)
};

struct OddCatParams {
    double mu;  // coherent-state intensity |alpha|^2
};

// p2 = g2 <n>^2 / 2, p1 = <n> - 2 p2, p0 = 1 - p1 - p2.
// Throws InvalidSource when any probability leaves [0, 1].
PhotonNumberDistribution sps_distribution(double mean, double g2);

// tanh^2(mu)
double odd_cat_g2(double mu);

// mu * coth(mu); -> 1 as mu -> 0+
double odd_cat_mean(double mu);

// Maps the odd cat state onto the truncated {p0, p1, p2} model via its
// effective (<n>, g2).
PhotonNumberDistribution odd_cat_distribution(double mu);

// Expands (|a> - |-a>)/sqrt(2(1 - e^{-2 mu})) in the Fock basis up to
// `cutoff` and recomputes (<n>, g2) numerically. Only odd components
// carry weight. Test-side ground truth for the closed forms above.
std::pair<double, double> odd_cat_fock_check(double mu, int cutoff);

// Total squared weight of even Fock components of the truncated expansion;
// identically zero for an ideal odd cat state.
double odd_cat_even_weight(double mu, int cutoff);

}  // namespace siqkd
