#pragma once

#include <string>
#include <vector>

#include "siqkd/config.hpp"

namespace siqkd {

/// Free protocol parameters at one evaluation point. For the SI protocol
/// only (source_knob, p_z) are active; the baseline adds eta_att and q_z.
/// source_knob is the mean photon number for SPS sources and mu for cat
/// sources.
struct ProtocolParams {
    double source_knob = 0.5;
    double p_z = 0.5;
    double eta_att = 1.0;
    double q_z = 0.5;
};

struct KeyRatePoint {
    double distance_km = 0.0;
    Protocol protocol = Protocol::Si;
    double mean_photon = 0.0;  // actual <n> of the source
    double p_z = 0.5;
    double eta_att = 1.0;
    double q_z = 0.5;
    double q_total_z = 0.0;
    double qber_z = 0.0;
    double qber_x = 0.0;
    double phase_error = 0.0;
    double key_length = 0.0;   // bits
    double skr = 0.0;          // secret bits per pulse pair
    std::string diagnostic;    // nonempty when the point was forced to zero
};

// Deterministic composition link -> gains -> finite key. Module errors
// surface as zero-rate points with a diagnostic tag.
KeyRatePoint evaluate_rate(const RunConfig& config, double distance_km,
                           const ProtocolParams& params);

// Coarse grid search plus Nelder-Mead refinement; ties broken toward smaller
// mean photon number, then smaller p_z.
KeyRatePoint optimize_point(const RunConfig& config, double distance_km);

// Independent optimize_point per distance; distances evaluated concurrently,
// results in input order.
std::vector<KeyRatePoint> sweep(const RunConfig& config, const std::vector<double>& distances);

std::vector<double> sweep_distances(const RunConfig& config);

}  // namespace siqkd
