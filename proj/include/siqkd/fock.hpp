#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "siqkd/gains.hpp"
#include "siqkd/link.hpp"
#include "siqkd/sources.hpp"

namespace siqkd::fock {

using Occupation = std::vector<int>;
using Amplitude = std::complex<double>;

/// Pure multi-mode photon-number state: amplitude per occupation vector,
/// with a registry naming each mode. All transforms below are exact mode
/// substitutions on creation operators; nothing is sampled.
struct FockState {
    std::vector<std::string> modes;
    std::map<Occupation, Amplitude> amps;

    int mode_index(const std::string& name) const;
    double norm_sq() const;
    int max_total_photons() const;
};

/// Linear map of creation operators: input mode name -> superposition of
/// output modes. Modes absent from the map pass through unchanged.
using ModeMap = std::map<std::string, std::vector<std::pair<std::string, Amplitude>>>;

// Applies the map via multinomial expansion of a_m^dagger^n substitutions.
// `out_modes` fixes the output registry and ordering.
FockState apply_mode_map(const FockState& state, const ModeMap& map,
                         const std::vector<std::string>& out_modes);

// Nine weighted pure components p_i p_j |i>_c |j>_d, each photon prepared
// in |+> polarization over modes {c_H, c_V, d_H, d_V}.
std::vector<std::pair<double, FockState>> build_joint_components(
    const PhotonNumberDistribution& dist_c, const PhotonNumberDistribution& dist_d);

// Polarizing beam splitter, H transmits and V reflects:
// c_H -> a_H, d_H -> b_H, c_V -> b_V, d_V -> a_V.
FockState pbs_evolve(const FockState& state);

enum class Party { A, B };

// Basis-choice beam splitter plus diagonal analyzer for one party:
// p_H -> sqrt(p_z) Z_H + sqrt((1-p_z)/2) (X_+ + X_-)
// p_V -> sqrt(p_z) Z_V + sqrt((1-p_z)/2) (X_+ - X_-)
FockState party_analyzer_evolve(const FockState& state, double p_z, Party party);

// Probability of each click pattern (bitmask over the state's modes, bit i =
// detector on mode i clicked). Per-detector click probability given n photons
// in that mode is 1 - (1-p_d)(1-eta)^n; the POVM is occupation-diagonal.
std::vector<double> click_distribution(const FockState& state, double eta, double p_d);

// Per-basis correct/error gains of one photon-number sector (i + j = n_total),
// enumerated exactly. eta excludes p_z: the analyzer split already consumes
// the basis probability. Index 0 = Z, 1 = X.
struct SectorGains {
    std::array<double, 2> correct{};
    std::array<double, 2> error{};
};

SectorGains oracle_sector_gains(int n_total, const PhotonNumberDistribution& dist,
                                double p_z, double eta, double p_d);

// Full enumeration counterpart of basis_gains: compose components, PBS,
// analyzers and click operators, classify coincidences with the 50/50
// double-click rule, and apply e_d at aggregation.
GainTable oracle_basis_gains(const PhotonNumberDistribution& dist, const LinkParams& link);

}  // namespace siqkd::fock
