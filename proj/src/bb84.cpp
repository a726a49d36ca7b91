#include "siqkd/bb84.hpp"

#include <algorithm>
#include <cmath>

namespace siqkd {

namespace {

bool is_prob(double p) { return p >= 0.0 && p <= 1.0; }

// S = sum_n p_n [1 - (1-p_d)(1 - eta)^n] over the truncated distribution.
double raw_click_sum(const PhotonNumberDistribution& dist, double eta_eff, double p_d) {
    double s = 0.0;
    const double p[3] = {dist.p0, dist.p1, dist.p2};
    for (int n = 0; n <= 2; ++n)
        s += p[n] * (1.0 - (1.0 - p_d) * std::pow(1.0 - eta_eff, n));
    return s;
}

double dead_time_fixed_point(double s, double r_tau) {
    if (r_tau == 0.0) return s;
    double q = s;
    for (int i = 0; i < 100; ++i) {
        double next = s / (1.0 + r_tau * q);
        if (std::abs(next - q) <= 1e-15) return next;
        q = next;
    }
    throw NoConvergence("bb84_gain: dead-time fixed point did not converge");
}

}  // namespace

void Bb84Params::validate() const {
    if (!is_prob(q_z)) throw DomainError("Bb84Params: q_z outside [0,1]");
    if (!is_prob(p_z)) throw DomainError("Bb84Params: p_z outside [0,1]");
    if (!is_prob(eta_att)) throw DomainError("Bb84Params: eta_att outside [0,1]");
    if (!is_prob(p_mis)) throw DomainError("Bb84Params: p_mis outside [0,1]");
    if (!(rep_rate >= 0.0)) throw DomainError("Bb84Params: rep_rate must be >= 0");
    if (!(dead_time >= 0.0)) throw DomainError("Bb84Params: dead_time must be >= 0");
}

double bb84_gain(const PhotonNumberDistribution& dist, double eta_tot, double p_d,
                 const Bb84Params& params) {
    params.validate();
    double s = raw_click_sum(dist, eta_tot * params.eta_att, p_d);
    return dead_time_fixed_point(s, params.rep_rate * params.dead_time);
}

double bb84_error_gain(const PhotonNumberDistribution& dist, double eta_tot, double p_d,
                       const Bb84Params& params) {
    params.validate();
    double eta_eff = eta_tot * params.eta_att;
    double se = dist.p0 * p_d;
    const double p[3] = {dist.p0, dist.p1, dist.p2};
    for (int n = 1; n <= 2; ++n)
        se += p[n] * params.p_mis * (1.0 - (1.0 - p_d) * std::pow(1.0 - eta_eff, n));
    // c_dt comes from the total-gain fixed point; both gains share it.
    double q = bb84_gain(dist, eta_tot, p_d, params);
    double s = raw_click_sum(dist, eta_eff, p_d);
    double c_dt = s > 0.0 ? q / s : 1.0;
    return c_dt * se;
}

Bb84MultiphotonBounds bb84_multiphoton_bounds(double n_pulses, const Bb84Params& params,
                                              const PhotonNumberDistribution& dist,
                                              const SiftedCounts& counts, double eps_pe) {
    double p_m = dist.g2 * dist.mean * dist.mean / 2.0;
    double basis_frac[2] = {params.p_z * params.q_z, (1.0 - params.p_z) * (1.0 - params.q_z)};
    double n_basis[2] = {counts.n_z, counts.n_x};
    Bb84MultiphotonBounds b;
    for (int i = 0; i < 2; ++i) {
        b.n_mp_upper[i] = chernoff_upper(n_pulses * basis_frac[i] * p_m, eps_pe);
        b.n_nmp_lower[i] = std::max(0.0, n_basis[i] - b.n_mp_upper[i]);
    }
    return b;
}

double bb84_phase_error(const SiftedCounts& counts, const Bb84MultiphotonBounds& bounds,
                        double eps_sec) {
    double n_z_nmp = bounds.n_nmp_lower[0];
    double n_x_nmp = bounds.n_nmp_lower[1];
    if (n_z_nmp < 1.0 || n_x_nmp < 1.0) return 0.5;
    double e_z_nmp = counts.m_z / n_z_nmp;
    if (e_z_nmp >= 0.5) return 0.5;
    double lambda = e_z_nmp > 0.0 ? e_z_nmp : 1.0 / (2.0 * n_z_nmp);
    try {
        return std::min(0.5, e_z_nmp + gamma_u(n_x_nmp, n_z_nmp, lambda, eps_sec / 6.0));
    } catch (const DomainError&) {
        return 0.5;
    }
}

double bb84_key_length(const SiftedCounts& counts, const Bb84MultiphotonBounds& bounds,
                       double phi_x, double f, double eps_cor, const Bb84EpsBudget& budget) {
    if (bounds.n_nmp_lower[1] <= 0.0 || counts.n_x <= 0.0) return 0.0;
    phi_x = std::clamp(phi_x, 0.0, 0.5);
    double l = bounds.n_nmp_lower[1] * (1.0 - binary_entropy(phi_x)) -
               counts.n_x * f * binary_entropy(counts.e_x()) -
               std::log2(2.0 / eps_cor) - 2.0 * std::log2(1.0 / (2.0 * budget.eps_pa()));
    return l > 0.0 ? std::floor(l) : 0.0;
}

}  // namespace siqkd
