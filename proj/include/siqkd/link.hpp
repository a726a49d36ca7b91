#pragma once

#include "siqkd/errors.hpp"

namespace siqkd {

enum class Routing { Active, Passive };

/// Channel, detector and basis-choice parameters. The source sits at the
/// midpoint of the link, so each side sees half the total fiber length.
struct LinkParams {
    double alpha_db_per_km = 0.16;  // fiber attenuation
    double total_distance = 0.0;    // Alice<->Bob fiber length, km
    double eta_det = 0.8;           // detector efficiency
    double p_d = 1e-7;              // dark count probability per gate
    double e_d = 0.01;              // misalignment error probability
    double p_z = 0.5;               // Z-basis selection probability
    Routing routing = Routing::Active;

    double p_x() const { return 1.0 - p_z; }
    void validate() const;
};

struct EffectiveEfficiency {
    double eta_cha;  // per-side channel transmittance
    double eta_z;
    double eta_x;
};

// Per-side transmittance 10^(-alpha * l / 20).
double channel_efficiency(const LinkParams& params);

// eta_b = p_b * eta_det * eta_cha.
EffectiveEfficiency basis_efficiencies(const LinkParams& params);

}  // namespace siqkd
