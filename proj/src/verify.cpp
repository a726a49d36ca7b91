#include "siqkd/verify.hpp"

#include <cmath>
#include <sstream>

#include "siqkd/finite_key.hpp"
#include "siqkd/fock.hpp"
#include "siqkd/sources.hpp"

namespace siqkd {

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::to_string() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name
            << "  max deviation " << c.max_deviation << " (tolerance " << c.tolerance << ")\n";
    }
    out << (all_pass() ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
    return out.str();
}

namespace {

// Relative deviation with an absolute floor folded into the denominator:
// |a - b| <= tol * max(|b|, floor/tol)  <=>  dev <= tol.
double rel_dev(double a, double b, double floor_over_tol) {
    return std::abs(a - b) / std::max(std::abs(b), floor_over_tol);
}

void check_oracle_grid(VerifyReport& report, const GainPerturbation& perturb) {
    // All sectors populated: mean 0.9, g2 0.05.
    auto dist = sps_distribution(0.9, 0.05);
    const double etas[] = {1e-3, 0.004, 0.1, 0.5};
    const double pds[] = {0.0, 1e-7, 1e-5, 1e-3};
    // With p_z = 1/2 both bases see the same per-basis eta, so one analytic
    // value is compared against both oracle bases.
    const double p_z = 0.5;
    for (int sector = 0; sector <= 4; ++sector) {
        double dev_z = 0.0;
        double dev_total = 0.0;
        double dev_x = 0.0;
        for (double eta : etas) {
            for (double p_d : pds) {
                ComponentGain analytic = component_gains(sector, dist, eta, p_d);
                if (perturb) analytic = perturb(sector, analytic);
                auto oracle = fock::oracle_sector_gains(sector, dist, p_z, eta / p_z, p_d);
                dev_z = std::max(dev_z, rel_dev(analytic.correct, oracle.correct[0], 1e-9));
                dev_z = std::max(dev_z, rel_dev(analytic.error, oracle.error[0], 1e-9));
                for (int b = 0; b < 2; ++b)
                    dev_total = std::max(dev_total,
                                         rel_dev(analytic.correct + analytic.error,
                                                 oracle.correct[b] + oracle.error[b], 1e-9));
                if (p_d == 0.0) {
                    // Diagonal-basis split: H/V-distinguishable error events are
                    // unbiased in the X basis, so exactly half their weight moves
                    // from error to correct relative to the printed Z-basis forms.
                    // Sector 4 gains a further eta^4 term from the doubly-bunched
                    // (both parties |2,0>-|0,2>) branches, which are correlated.
                    double bunch = sector == 4
                                       ? dist.p2 * dist.p2 * eta * eta * eta * eta / 16.0
                                       : 0.0;
                    double err_x = analytic.error / 2.0 - bunch;
                    dev_x = std::max(dev_x, rel_dev(err_x, oracle.error[1], 1e-9));
                    dev_x = std::max(dev_x,
                                     rel_dev(analytic.correct + analytic.error - err_x,
                                             oracle.correct[1], 1e-9));
                }
            }
        }
        std::string tag = "sector " + std::to_string(sector);
        report.checks.push_back({"oracle equivalence, " + tag + ", Z basis", dev_z, 1e-9,
                                 dev_z <= 1e-9});
        report.checks.push_back({"oracle equivalence, " + tag + ", total gain (both bases)",
                                 dev_total, 1e-9, dev_total <= 1e-9});
        report.checks.push_back({"oracle X-basis split, " + tag +
                                     " (error = Z-form error/2 at p_d = 0)",
                                 dev_x, 1e-9, dev_x <= 1e-9});
    }
    // Documented deviation from the literal per-basis reuse of the Z forms:
    // minimal failing case is sector 2, eta = 1e-3, p_d = 0, where the oracle
    // X error gain is exactly half the printed value (totals unaffected).
    auto analytic = component_gains(2, dist, 1e-3, 0.0);
    auto oracle = fock::oracle_sector_gains(2, dist, p_z, 1e-3 / p_z, 0.0);
    double split_dev = std::abs(analytic.error - oracle.error[1]) / analytic.error;
    report.checks.push_back({"X-basis error split deviates from the literal forms as "
                             "documented (minimal case: sector=2, eta=1e-3, p_d=0, ratio 1/2)",
                             split_dev, 0.51, split_dev <= 0.51 && split_dev >= 0.49});
}

void check_ideal_limit(VerifyReport& report) {
    // eta -> 0 limit: 2000 km at 0.16 dB/km gives eta_cha = 1e-16, far below
    // the scale of the dropped higher-order eta terms.
    LinkParams link;
    link.total_distance = 2000.0;
    link.p_d = 0.0;
    link.e_d = 0.0;
    link.p_z = 0.5;
    double max_dev = 0.0;
    for (double mean : {0.1, 0.5, 1.0}) {
        for (double g2 : {0.0, 0.01, 0.05}) {
            auto dist = sps_distribution(mean, g2);
            auto eff = basis_efficiencies(link);
            auto table = basis_gains(dist, link);
            auto ideal = ideal_gains(dist, eff.eta_z);
            max_dev = std::max(max_dev, rel_dev(table.correct(Basis::Z), ideal.q_correct, 1e-300));
            max_dev = std::max(max_dev, rel_dev(table.total(Basis::Z), ideal.q_total, 1e-300));
            max_dev = std::max(max_dev, rel_dev(table.e(Basis::Z), ideal.qber, 1e-300));
            if (g2 > 0.0)
                max_dev = std::max(max_dev, rel_dev(table.error(Basis::Z), ideal.q_error, 1e-300));
            else if (table.error(Basis::Z) != 0.0)
                max_dev = std::max(max_dev, 1.0);
        }
    }
    report.checks.push_back({"ideal-detector limit identity", max_dev, 1e-12, max_dev <= 1e-12});
}

void check_cat_state(VerifyReport& report) {
    double max_dev = 0.0;
    double max_even = 0.0;
    for (double mu : {0.05, 0.1, 0.25, 0.5, 1.0}) {
        auto [mean, g2] = odd_cat_fock_check(mu, 40);
        max_dev = std::max(max_dev, rel_dev(mean, odd_cat_mean(mu), 1e-300));
        max_dev = std::max(max_dev, rel_dev(g2, odd_cat_g2(mu), 1e-300));
        max_even = std::max(max_even, odd_cat_even_weight(mu, 40));
    }
    report.checks.push_back({"odd-cat closed forms vs Fock sum", max_dev, 1e-9, max_dev <= 1e-9});
    report.checks.push_back({"odd-cat even-component weight", max_even, 1e-12, max_even <= 1e-12});
}

void check_statistics(VerifyReport& report) {
    double dev = 0.0;
    for (double eps : {0.5, 1e-3, 1e-10})
        dev = std::max(dev, std::abs(chernoff_upper(0.0, eps) - (-std::log(eps))));
    report.checks.push_back({"chernoff_upper(0, eps) = -ln eps", dev, 0.0, dev <= 0.0});

    double hdev = std::max(std::abs(binary_entropy(0.0)), std::abs(binary_entropy(0.5) - 1.0));
    report.checks.push_back({"binary entropy anchors h(0)=0, h(1/2)=1", hdev, 0.0, hdev <= 0.0});

    bool ok = true;
    const double counts[] = {1e4, 1e5, 1e6};
    for (double lambda : {0.01, 0.02, 0.1}) {
        for (double n : counts) {
            for (double k : counts) {
                double g = gamma_u(n, k, lambda, 1e-10);
                if (!(g > 0.0)) ok = false;
                if (!(gamma_u(n * 10.0, k, lambda, 1e-10) < g)) ok = false;
                if (!(gamma_u(n, k * 10.0, lambda, 1e-10) < g)) ok = false;
            }
        }
    }
    report.checks.push_back({"gamma_u positivity and monotonicity", ok ? 0.0 : 1.0, 0.0, ok});

    SiftedCounts c;
    c.n_z = 1e6;
    FiniteKeyBudget budget{1e12, 1.16, 1e-15, 1e-10};
    double l = key_length_si(c, 0.0, budget);
    double ldev = std::abs(l - 999882.0);
    report.checks.push_back({"zero-noise key length constant terms", ldev, 0.0, ldev <= 0.0});
}

}  // namespace

VerifyReport run_verify(const GainPerturbation& perturb) {
    VerifyReport report;
    check_oracle_grid(report, perturb);
    check_ideal_limit(report);
    check_cat_state(report);
    check_statistics(report);
    return report;
}

}  // namespace siqkd
