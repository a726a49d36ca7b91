#include "siqkd/link.hpp"

#include <cmath>

namespace siqkd {

namespace {

bool is_prob(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void LinkParams::validate() const {
    if (!is_prob(eta_det)) throw DomainError("LinkParams: eta_det outside [0,1]");
    if (!is_prob(p_d)) throw DomainError("LinkParams: p_d outside [0,1]");
    if (!is_prob(e_d)) throw DomainError("LinkParams: e_d outside [0,1]");
    if (!is_prob(p_z)) throw DomainError("LinkParams: p_z outside [0,1]");
    if (!(alpha_db_per_km >= 0.0)) throw DomainError("LinkParams: alpha must be >= 0");
    if (!(total_distance >= 0.0)) throw DomainError("LinkParams: distance must be >= 0");
}

double channel_efficiency(const LinkParams& params) {
    params.validate();
    return std::pow(10.0, -params.alpha_db_per_km * params.total_distance / 20.0);
}

EffectiveEfficiency basis_efficiencies(const LinkParams& params) {
    double eta_cha = channel_efficiency(params);
    double eta = params.eta_det * eta_cha;
    return {eta_cha, params.p_z * eta, params.p_x() * eta};
}

}  // namespace siqkd
