#pragma once

#include <array>

#include "siqkd/finite_key.hpp"
#include "siqkd/sources.hpp"

namespace siqkd {

/// Prepare-and-measure single-photon BB84 baseline. Alice encodes with
/// probabilities q_z / q_x, Bob measures with p_z / p_x; the X basis carries
/// the key and the Z basis is disclosed for parameter estimation.
struct Bb84Params {
    double q_z = 0.5;       // Alice preparation probability for Z
    double p_z = 0.5;       // Bob measurement probability for Z
    double eta_att = 1.0;   // source pre-attenuation
    double rep_rate = 0.0;  // pulse repetition rate R, Hz
    double dead_time = 0.0; // detector dead time tau, s
    double p_mis = 0.01;    // misalignment probability

    void validate() const;
};

/// eps_sec = 6 eps'; the sub-budgets follow the n_PE = 2 accounting.
struct Bb84EpsBudget {
    double eps_prime;

    double eps_pa() const { return eps_prime; }
    double eps_pe() const { return 4.0 * eps_prime; }
    double eps_ec() const { return eps_prime; }
    double eps_sec() const { return 6.0 * eps_prime; }
};

struct Bb84MultiphotonBounds {
    std::array<double, 2> n_mp_upper{};   // index 0 = Z, 1 = X
    std::array<double, 2> n_nmp_lower{};
};

// Gain with dead-time correction: solves Q = S / (1 + R tau Q) by fixed-point
// iteration, S = sum_n p_n [1 - (1-p_d)(1 - eta_tot eta_att)^n].
double bb84_gain(const PhotonNumberDistribution& dist, double eta_tot, double p_d,
                 const Bb84Params& params);

// Error gain with the same dead-time factor (shared fixed point).
double bb84_error_gain(const PhotonNumberDistribution& dist, double eta_tot, double p_d,
                       const Bb84Params& params);

// Per-basis Chernoff upper bound on multi-photon events (p_m <= g2 <n>^2 / 2,
// unattenuated) and the implied lower bound on non-multi-photon events.
Bb84MultiphotonBounds bb84_multiphoton_bounds(double n_pulses, const Bb84Params& params,
                                              const PhotonNumberDistribution& dist,
                                              const SiftedCounts& counts, double eps_pe);

// phi_x <= E_z^nmp + gamma^U(n_x^nmp, n_z^nmp, E_z^nmp, eps_sec/6).
double bb84_phase_error(const SiftedCounts& counts, const Bb84MultiphotonBounds& bounds,
                        double eps_sec);

// l = floor(n_x^nmp [1 - h(phi_x)] - n_x f h(E_x) - log2(2/eps_cor)
//           - 2 log2(1/(2 eps_PA))), floored at 0.
double bb84_key_length(const SiftedCounts& counts, const Bb84MultiphotonBounds& bounds,
                       double phi_x, double f, double eps_cor, const Bb84EpsBudget& budget);

}  // namespace siqkd
