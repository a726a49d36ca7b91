#include "siqkd/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

#include "siqkd/bb84.hpp"
#include "siqkd/finite_key.hpp"
#include "siqkd/fock.hpp"
#include "siqkd/gains.hpp"

namespace siqkd {

namespace {

KeyRatePoint zero_point(const RunConfig& config, double distance_km,
                        const ProtocolParams& params, const std::string& diag) {
    KeyRatePoint pt;
    pt.distance_km = distance_km;
    pt.protocol = config.protocol;
    pt.mean_photon = params.source_knob;
    pt.p_z = params.p_z;
    pt.eta_att = params.eta_att;
    pt.q_z = params.q_z;
    pt.phase_error = 0.5;
    pt.diagnostic = diag;
    return pt;
}

PhotonNumberDistribution make_source(const RunConfig& config, double knob) {
    if (config.source_type == SourceType::OddCat) return odd_cat_distribution(knob);
    return sps_distribution(knob, config.g2);
}

KeyRatePoint evaluate_si(const RunConfig& config, double distance_km,
                         const ProtocolParams& params,
                         const PhotonNumberDistribution& dist) {
    LinkParams link;
    link.alpha_db_per_km = config.alpha_db_per_km;
    link.total_distance = distance_km;
    link.eta_det = config.eta_det;
    link.p_d = config.p_d;
    link.e_d = config.e_d;
    link.p_z = params.p_z;
    link.routing = config.routing;

    GainTable gains = basis_gains(dist, link);

    // Passive beam-splitter routing halves the effective pulse-pair count.
    double n_eff = config.n_pulses * (config.routing == Routing::Passive ? 0.5 : 1.0);
    SiftedCounts counts;
    // The basis probabilities already enter through eta_z and eta_x, so the
    // sifted counts are just N_eff times the per-basis total gains.
    counts.n_z = n_eff * gains.total(Basis::Z);
    counts.n_x = n_eff * gains.total(Basis::X);
    counts.m_z = counts.n_z * gains.e(Basis::Z);
    counts.m_x = counts.n_x * gains.e(Basis::X);

    double phi_z = phase_error_si(counts, config.eps_sec);
    FiniteKeyBudget budget{n_eff, config.f, config.eps_cor, config.eps_sec};
    double l = key_length_si(counts, phi_z, budget);

    KeyRatePoint pt = zero_point(config, distance_km, params, "");
    pt.mean_photon = dist.mean;
    pt.q_total_z = gains.total(Basis::Z);
    pt.qber_z = gains.e(Basis::Z);
    pt.qber_x = gains.e(Basis::X);
    pt.phase_error = phi_z;
    pt.key_length = l;
    pt.skr = l / n_eff;
    return pt;
}

KeyRatePoint evaluate_bb84(const RunConfig& config, double distance_km,
                           const ProtocolParams& params,
                           const PhotonNumberDistribution& dist) {
    // Prepare-and-measure: one channel spans the full Alice-Bob distance.
    double eta_cha = std::pow(10.0, -config.alpha_db_per_km * distance_km / 10.0);
    double eta_tot = config.eta_det * eta_cha;

    Bb84Params bp;
    bp.q_z = params.q_z;
    bp.p_z = params.p_z;
    bp.eta_att = params.eta_att;
    bp.rep_rate = config.rep_rate;
    bp.dead_time = config.dead_time;
    bp.p_mis = config.e_d;

    double q = bb84_gain(dist, eta_tot, config.p_d, bp);
    double qe = bb84_error_gain(dist, eta_tot, config.p_d, bp);

    double n = config.n_pulses;
    SiftedCounts counts;
    counts.n_z = n * bp.p_z * bp.q_z * q;
    counts.n_x = n * (1.0 - bp.p_z) * (1.0 - bp.q_z) * q;
    counts.m_z = n * bp.p_z * bp.q_z * qe;
    counts.m_x = n * (1.0 - bp.p_z) * (1.0 - bp.q_z) * qe;

    Bb84EpsBudget budget{config.eps_sec / 6.0};
    auto bounds = bb84_multiphoton_bounds(n, bp, dist, counts, budget.eps_pe());
    double phi_x = bb84_phase_error(counts, bounds, config.eps_sec);
    double l = bb84_key_length(counts, bounds, phi_x, config.f, config.eps_cor, budget);

    KeyRatePoint pt = zero_point(config, distance_km, params, "");
    pt.mean_photon = dist.mean;
    pt.q_total_z = q;
    pt.qber_z = q > 0.0 ? qe / q : 0.0;
    pt.qber_x = pt.qber_z;
    pt.phase_error = phi_x;
    pt.key_length = l;
    pt.skr = l / n;
    return pt;
}

// Lexicographic tie-break: larger skr wins; on ties prefer smaller mean
// photon number, then smaller p_z.
bool better(const KeyRatePoint& a, const KeyRatePoint& b) {
    if (a.skr != b.skr) return a.skr > b.skr;
    if (a.mean_photon != b.mean_photon) return a.mean_photon < b.mean_photon;
    return a.p_z < b.p_z;
}

struct Bounds {
    double lo, hi;
};

ProtocolParams from_vector(const RunConfig& config, const std::vector<double>& x) {
    ProtocolParams p;
    p.source_knob = x[0];
    p.p_z = x[1];
    if (config.protocol == Protocol::SpsBb84) {
        p.eta_att = x[2];
        p.q_z = x[3];
    }
    return p;
}

}  // namespace

KeyRatePoint evaluate_rate(const RunConfig& config, double distance_km,
                           const ProtocolParams& params) {
    config.validate();
    try {
        PhotonNumberDistribution dist = make_source(config, params.source_knob);
        if (config.protocol == Protocol::SpsBb84)
            return evaluate_bb84(config, distance_km, params, dist);
        return evaluate_si(config, distance_km, params, dist);
    } catch (const std::domain_error& e) {
        return zero_point(config, distance_km, params, e.what());
    }
}

KeyRatePoint optimize_point(const RunConfig& config, double distance_km) {
    bool baseline = config.protocol == Protocol::SpsBb84;
    std::vector<Bounds> box;
    double knob_fix = config.source_type == SourceType::OddCat ? config.mu : config.mean;
    if (knob_fix >= 0.0)
        box.push_back({knob_fix, knob_fix});
    else
        box.push_back({0.01, 1.0});
    box.push_back({0.05, 0.95});  // p_z
    if (baseline) {
        box.push_back({0.01, 1.0});  // eta_att
        box.push_back({0.05, 0.95});  // q_z
    }
    int grid = baseline ? config.bb84_grid : config.si_grid;

    auto eval_at = [&](std::vector<double> x) {
        for (size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], box[i].lo, box[i].hi);
        return evaluate_rate(config, distance_km, from_vector(config, x));
    };

    // Coarse grid.
    std::vector<double> x(box.size());
    KeyRatePoint best;
    std::vector<double> best_x;
    std::function<void(size_t)> scan = [&](size_t dim) {
        if (dim == box.size()) {
            KeyRatePoint pt = eval_at(x);
            if (best_x.empty() || better(pt, best)) {
                best = pt;
                best_x = x;
            }
            return;
        }
        if (box[dim].lo == box[dim].hi) {
            x[dim] = box[dim].lo;
            scan(dim + 1);
            return;
        }
        for (int j = 0; j < grid; ++j) {
            x[dim] = box[dim].lo + (box[dim].hi - box[dim].lo) * j / (grid - 1);
            scan(dim + 1);
        }
    };
    scan(0);

    if (best.skr <= 0.0) return best;  // zero plateau, nothing to refine

    // Nelder-Mead refinement over the free dimensions, classical coefficients.
    std::vector<size_t> free_dims;
    for (size_t i = 0; i < box.size(); ++i)
        if (box[i].lo < box[i].hi) free_dims.push_back(i);
    size_t d = free_dims.size();
    if (d == 0 || config.refine_iters == 0) return best;

    auto lift = [&](const std::vector<double>& reduced) {
        std::vector<double> full = best_x;
        for (size_t i = 0; i < d; ++i) full[free_dims[i]] = reduced[i];
        return full;
    };
    struct Vertex {
        std::vector<double> x;
        KeyRatePoint pt;
    };
    auto make_vertex = [&](const std::vector<double>& reduced) {
        Vertex v{reduced, eval_at(lift(reduced))};
        return v;
    };
    std::vector<Vertex> simplex;
    std::vector<double> seed(d);
    for (size_t i = 0; i < d; ++i) seed[i] = best_x[free_dims[i]];
    simplex.push_back(make_vertex(seed));
    for (size_t i = 0; i < d; ++i) {
        std::vector<double> v = seed;
        double step = (box[free_dims[i]].hi - box[free_dims[i]].lo) / (2.0 * (grid - 1));
        v[i] = std::min(v[i] + step, box[free_dims[i]].hi);
        if (v[i] == seed[i]) v[i] -= step;
        simplex.push_back(make_vertex(v));
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    for (int iter = 0; iter < config.refine_iters; ++iter) {
        std::sort(simplex.begin(), simplex.end(),
                  [&](const Vertex& a, const Vertex& b) { return better(a.pt, b.pt); });
        double hi = simplex.front().pt.skr, lo = simplex.back().pt.skr;
        if (hi > 0.0 && (hi - lo) / hi < 1e-6) break;

        std::vector<double> centroid(d, 0.0);
        for (size_t i = 0; i + 1 < simplex.size(); ++i)
            for (size_t j = 0; j < d; ++j) centroid[j] += simplex[i].x[j];
        for (size_t j = 0; j < d; ++j) centroid[j] /= static_cast<double>(d);

        const Vertex& worst = simplex.back();
        std::vector<double> refl(d);
        for (size_t j = 0; j < d; ++j) refl[j] = centroid[j] + alpha * (centroid[j] - worst.x[j]);
        Vertex vr = make_vertex(refl);

        if (better(vr.pt, simplex.front().pt)) {
            std::vector<double> exp_x(d);
            for (size_t j = 0; j < d; ++j) exp_x[j] = centroid[j] + gamma * (refl[j] - centroid[j]);
            Vertex ve = make_vertex(exp_x);
            simplex.back() = better(ve.pt, vr.pt) ? ve : vr;
        } else if (better(vr.pt, simplex[simplex.size() - 2].pt)) {
            simplex.back() = vr;
        } else {
            std::vector<double> con(d);
            for (size_t j = 0; j < d; ++j) con[j] = centroid[j] + rho * (worst.x[j] - centroid[j]);
            Vertex vc = make_vertex(con);
            if (better(vc.pt, worst.pt)) {
                simplex.back() = vc;
            } else {
                for (size_t i = 1; i < simplex.size(); ++i) {
                    for (size_t j = 0; j < d; ++j)
                        simplex[i].x[j] =
                            simplex[0].x[j] + sigma * (simplex[i].x[j] - simplex[0].x[j]);
                    simplex[i] = make_vertex(simplex[i].x);
                }
            }
        }
    }
    for (const Vertex& v : simplex)
        if (better(v.pt, best)) best = v.pt;
    return best;
}

std::vector<KeyRatePoint> sweep(const RunConfig& config, const std::vector<double>& distances) {
    std::vector<std::future<KeyRatePoint>> jobs;
    jobs.reserve(distances.size());
    for (double dist : distances)
        jobs.push_back(std::async(std::launch::async,
                                  [&config, dist] { return optimize_point(config, dist); }));
    std::vector<KeyRatePoint> out;
    out.reserve(distances.size());
    for (auto& job : jobs) out.push_back(job.get());
    return out;
}

std::vector<double> sweep_distances(const RunConfig& config) {
    std::vector<double> d;
    for (double x = config.d_min; x <= config.d_max + 1e-9; x += config.d_step) d.push_back(x);
    return d;
}

}  // namespace siqkd
