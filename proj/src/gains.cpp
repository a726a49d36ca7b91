#include "siqkd/gains.hpp"

#include <cmath>

namespace siqkd {

ComponentGain component_gains(int n_total, const PhotonNumberDistribution& dist,
                              double eta, double p_d) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("component_gains: eta outside [0,1]");
    if (p_d < 0.0 || p_d > 1.0) throw DomainError("component_gains: p_d outside [0,1]");

    const double p0 = dist.p0, p1 = dist.p1, p2 = dist.p2;
    const double half = 1.0 - p_d / 2.0;
    // The printed closed forms subtract products like (1-pd)^2 (1-eta)^n from
    // 1, which cancels catastrophically for eta below ~1e-12. Everything here
    // is the same polynomial regrouped so the small quantities eta and pd only
    // ever enter multiplicatively: with w = 1 - (1-pd)^2 and s = (1-pd)^2,
    //   c1 = 1 - (1-pd)^2 (1-eta)   = s*eta + w
    //   c2 = 1 - (1-pd)^2 (1-eta)^2 = s*eta*(2-eta) + w
    const double w = p_d * (2.0 - p_d);
    const double s = (1.0 - p_d) * (1.0 - p_d);
    const double c1 = s * eta + w;
    const double c2 = s * eta * (2.0 - eta) + w;

    switch (n_total) {
        case 0: {
            double q = 2.0 * p0 * p0 * p_d * p_d * half * half;
            return {q, q};
        }
        case 1: {
            double q = 2.0 * p0 * p1 * p_d * half * c1;
            return {q, q};
        }
        case 2: {
            double qc = 2.0 * p0 * p2 * p_d * half * c2 + p1 * p1 / 2.0 * c1 * c1;
            double qe = p0 * p2 * c1 * c1 + p1 * p1 * p_d * half * c2;
            return {qc, qe};
        }
        case 3: {
            double qc = p1 * p2 * c1 * c2;
            // 1 + 2pd - pd^2 - (1-pd)^2 (1-eta)(2-eta) + (1-4pd+2pd^2)(1-pd)^2 (1-eta)^3
            double b3 = s * eta * eta *
                            (2.0 * (1.0 + 3.0 * p_d * (p_d - 2.0)) -
                             (1.0 + 2.0 * p_d * (p_d - 2.0)) * eta) +
                        6.0 * w * s * eta + 2.0 * w * w;
            return {qc, p1 * p2 / 2.0 * b3};
        }
        case 4: {
            double qc = p2 * p2 / 2.0 * c2 * c2;
            // 3 + 2pd - pd^2 - 2(1-pd)^2 (1-eta)(3-3eta+2eta^2)
            //   + (3-8pd+4pd^2)(1-pd)^2 (1-eta)^4
            double b4 = s * eta * eta *
                            ((2.0 * p_d - 3.0) * (2.0 * p_d - 1.0) * eta * eta -
                             8.0 * (1.0 + 2.0 * p_d * (p_d - 2.0)) * eta +
                             8.0 * (1.0 + 3.0 * p_d * (p_d - 2.0))) +
                        16.0 * w * s * eta + 4.0 * w * w;
            return {qc, p2 * p2 / 8.0 * b4};
        }
        default:
            throw DomainError("component_gains: sector must be 0..4");
    }
}

GainTable aggregate_gains(const std::array<double, 2>& correct,
                          const std::array<double, 2>& error, double e_d) {
    GainTable t;
    for (int b = 0; b < 2; ++b) {
        t.q_correct[b] = correct[b];
        t.q_error[b] = error[b];
        t.q_total[b] = correct[b] + error[b];
        t.qber[b] = t.q_total[b] > 0.0
                        ? (e_d * correct[b] + (1.0 - e_d) * error[b]) / t.q_total[b]
                        : 0.0;
    }
    return t;
}

GainTable basis_gains(const PhotonNumberDistribution& dist, const LinkParams& link) {
    auto eff = basis_efficiencies(link);
    std::array<double, 2> eta{eff.eta_z, eff.eta_x};
    std::array<double, 2> correct{}, error{};
    for (int b = 0; b < 2; ++b) {
        for (int sector = 0; sector <= 4; ++sector) {
            auto g = component_gains(sector, dist, eta[b], link.p_d);
            correct[b] += g.correct;
            error[b] += g.error;
        }
    }
    return aggregate_gains(correct, error, link.e_d);
}

IdealGains ideal_gains(const PhotonNumberDistribution& dist, double eta) {
    double qc = dist.mean * dist.mean * eta * eta / 2.0;
    double qe = dist.g2 * qc;
    return {qc, qe, qc + qe, dist.g2 / (1.0 + dist.g2)};
}

}  // namespace siqkd
