#include "siqkd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace siqkd::fock {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

int FockState::mode_index(const std::string& name) const {
    auto it = std::find(modes.begin(), modes.end(), name);
    if (it == modes.end()) throw ModeMismatch("FockState: mode '" + name + "' absent");
    return static_cast<int>(it - modes.begin());
}

double FockState::norm_sq() const {
    double s = 0.0;
    for (const auto& [occ, amp] : amps) s += std::norm(amp);
    return s;
}

int FockState::max_total_photons() const {
    int m = 0;
    for (const auto& [occ, amp] : amps) {
        int t = 0;
        for (int n : occ) t += n;
        m = std::max(m, t);
    }
    return m;
}

FockState apply_mode_map(const FockState& state, const ModeMap& map,
                         const std::vector<std::string>& out_modes) {
    FockState out;
    out.modes = out_modes;
    const int n_out = static_cast<int>(out_modes.size());

    auto out_index = [&](const std::string& name) {
        auto it = std::find(out_modes.begin(), out_modes.end(), name);
        if (it == out_modes.end())
            throw ModeMismatch("apply_mode_map: output mode '" + name + "' not registered");
        return static_cast<int>(it - out_modes.begin());
    };

    // Resolve each input mode to its row of (output index, coefficient).
    std::vector<std::vector<std::pair<int, Amplitude>>> rows(state.modes.size());
    for (size_t m = 0; m < state.modes.size(); ++m) {
        auto it = map.find(state.modes[m]);
        if (it != map.end()) {
            for (const auto& [name, c] : it->second) rows[m].push_back({out_index(name), c});
        } else {
            rows[m].push_back({out_index(state.modes[m]), 1.0});
        }
    }

    for (const auto& [occ, amp] : state.amps) {
        // Expand prod_m (sum_k c_mk b_k^dag)^{n_m} multinomially.
        Occupation target(static_cast<size_t>(n_out), 0);
        std::function<void(size_t, Amplitude)> expand = [&](size_t m, Amplitude coeff) {
            if (m == occ.size()) {
                double fac = 1.0;
                for (int t : target) fac *= factorial(t);
                for (int n : occ) fac /= factorial(n);
                out.amps[target] += amp * coeff * std::sqrt(fac);
                return;
            }
            int n_m = occ[m];
            const auto& row = rows[m];
            // compositions of n_m over the row entries
            std::function<void(size_t, int, Amplitude, double)> split =
                [&](size_t k, int left, Amplitude c, double multinom) {
                    if (k + 1 == row.size()) {
                        Amplitude term = c;
                        for (int q = 0; q < left; ++q) term *= row[k].second;
                        target[static_cast<size_t>(row[k].first)] += left;
                        expand(m + 1, coeff * term * (multinom / factorial(left)));
                        target[static_cast<size_t>(row[k].first)] -= left;
                        return;
                    }
                    for (int q = 0; q <= left; ++q) {
                        Amplitude term = c;
                        for (int i = 0; i < q; ++i) term *= row[k].second;
                        target[static_cast<size_t>(row[k].first)] += q;
                        split(k + 1, left - q, term, multinom / factorial(q));
                        target[static_cast<size_t>(row[k].first)] -= q;
                    }
                };
            split(0, n_m, 1.0, factorial(n_m));
        };
        expand(0, 1.0);
    }

    // Drop numerically dead entries.
    for (auto it = out.amps.begin(); it != out.amps.end();) {
        if (std::norm(it->second) < 1e-30)
            it = out.amps.erase(it);
        else
            ++it;
    }
    return out;
}

std::vector<std::pair<double, FockState>> build_joint_components(
    const PhotonNumberDistribution& dist_c, const PhotonNumberDistribution& dist_d) {
    const double pc[3] = {dist_c.p0, dist_c.p1, dist_c.p2};
    const double pd[3] = {dist_d.p0, dist_d.p1, dist_d.p2};
    std::vector<std::pair<double, FockState>> out;
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            double w = pc[i] * pd[j];
            if (w == 0.0) continue;
            FockState plus;
            plus.modes = {"c_+", "d_+"};
            plus.amps[{i, j}] = 1.0;
            ModeMap to_hv = {
                {"c_+", {{"c_H", kSqrtHalf}, {"c_V", kSqrtHalf}}},
                {"d_+", {{"d_H", kSqrtHalf}, {"d_V", kSqrtHalf}}},
            };
            out.push_back({w, apply_mode_map(plus, to_hv, {"c_H", "c_V", "d_H", "d_V"})});
        }
    }
    return out;
}

FockState pbs_evolve(const FockState& state) {
    for (const char* m : {"c_H", "c_V", "d_H", "d_V"}) state.mode_index(m);
    ModeMap pbs = {
        {"c_H", {{"a_H", 1.0}}},
        {"c_V", {{"b_V", 1.0}}},
        {"d_H", {{"b_H", 1.0}}},
        {"d_V", {{"a_V", 1.0}}},
    };
    return apply_mode_map(state, pbs, {"a_H", "a_V", "b_H", "b_V"});
}

FockState party_analyzer_evolve(const FockState& state, double p_z, Party party) {
    std::string p = party == Party::A ? "a" : "b";
    std::string tag = party == Party::A ? "A" : "B";
    double sz = std::sqrt(p_z);
    double sx = std::sqrt((1.0 - p_z) / 2.0);
    ModeMap analyzer = {
        {p + "_H", {{tag + "_ZH", sz}, {tag + "_X+", sx}, {tag + "_X-", sx}}},
        {p + "_V", {{tag + "_ZV", sz}, {tag + "_X+", sx}, {tag + "_X-", -sx}}},
    };
    std::vector<std::string> out_modes;
    for (const auto& m : state.modes) {
        if (m == p + "_H") {
            out_modes.push_back(tag + "_ZH");
            out_modes.push_back(tag + "_ZV");
            out_modes.push_back(tag + "_X+");
            out_modes.push_back(tag + "_X-");
        } else if (m != p + "_V") {
            out_modes.push_back(m);
        }
    }
    return apply_mode_map(state, analyzer, out_modes);
}

std::vector<double> click_distribution(const FockState& state, double eta, double p_d) {
    const size_t n_modes = state.modes.size();
    std::vector<double> dist(size_t{1} << n_modes, 0.0);
    for (const auto& [occ, amp] : state.amps) {
        double w = std::norm(amp);
        if (w == 0.0) continue;
        std::vector<double> click(n_modes);
        for (size_t m = 0; m < n_modes; ++m)
            click[m] = 1.0 - (1.0 - p_d) * std::pow(1.0 - eta, occ[m]);
        for (size_t pattern = 0; pattern < dist.size(); ++pattern) {
            double p = w;
            for (size_t m = 0; m < n_modes; ++m)
                p *= (pattern >> m) & 1 ? click[m] : 1.0 - click[m];
            dist[pattern] += p;
        }
    }
    return dist;
}

namespace {

// Detector ordering after both analyzers.
const std::vector<std::string> kDetectors = {"A_ZH", "A_ZV", "A_X+", "A_X-",
                                             "B_ZH", "B_ZV", "B_X+", "B_X-"};

// Accumulates per-basis correct/error coincidence probability from a click
// pattern distribution. Within-basis double clicks count 50/50; clicks in the
// other basis's detectors are marginalized away.
void accumulate_gains(const std::vector<double>& patterns, double weight,
                      std::array<double, 2>& correct, std::array<double, 2>& error) {
    // bit offsets: basis Z -> A bits {0,1}, B bits {4,5}; X -> {2,3}, {6,7}
    for (size_t pattern = 0; pattern < patterns.size(); ++pattern) {
        double w = patterns[pattern] * weight;
        if (w == 0.0) continue;
        for (int basis = 0; basis < 2; ++basis) {
            int a0 = (pattern >> (2 * basis)) & 1;
            int a1 = (pattern >> (2 * basis + 1)) & 1;
            int b0 = (pattern >> (2 * basis + 4)) & 1;
            int b1 = (pattern >> (2 * basis + 5)) & 1;
            if (!(a0 || a1) || !(b0 || b1)) continue;
            double wa0 = a0 && a1 ? 0.5 : a0;
            double wa1 = a0 && a1 ? 0.5 : a1;
            double wb0 = b0 && b1 ? 0.5 : b0;
            double wb1 = b0 && b1 ? 0.5 : b1;
            correct[basis] += w * (wa0 * wb0 + wa1 * wb1);
            error[basis] += w * (wa0 * wb1 + wa1 * wb0);
        }
    }
}

void enumerate_component(int i, int j, double weight, double p_z, double eta, double p_d,
                         std::array<double, 2>& correct, std::array<double, 2>& error) {
    FockState plus;
    plus.modes = {"c_+", "d_+"};
    plus.amps[{i, j}] = 1.0;
    ModeMap to_hv = {
        {"c_+", {{"c_H", kSqrtHalf}, {"c_V", kSqrtHalf}}},
        {"d_+", {{"d_H", kSqrtHalf}, {"d_V", kSqrtHalf}}},
    };
    FockState hv = apply_mode_map(plus, to_hv, {"c_H", "c_V", "d_H", "d_V"});
    FockState ab = pbs_evolve(hv);
    FockState at_a = party_analyzer_evolve(ab, p_z, Party::A);
    FockState at_b = party_analyzer_evolve(at_a, p_z, Party::B);
    // Reorder to the canonical detector layout.
    ModeMap identity;
    FockState det = apply_mode_map(at_b, identity, kDetectors);
    accumulate_gains(click_distribution(det, eta, p_d), weight, correct, error);
}

}  // namespace

SectorGains oracle_sector_gains(int n_total, const PhotonNumberDistribution& dist,
                                double p_z, double eta, double p_d) {
    if (n_total < 0 || n_total > 4)
        throw DomainError("oracle_sector_gains: sector must be 0..4");
    const double p[3] = {dist.p0, dist.p1, dist.p2};
    SectorGains g;
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            if (i + j != n_total) continue;
            enumerate_component(i, j, p[i] * p[j], p_z, eta, p_d, g.correct, g.error);
        }
    }
    return g;
}

GainTable oracle_basis_gains(const PhotonNumberDistribution& dist, const LinkParams& link) {
    link.validate();
    double eta = link.eta_det * channel_efficiency(link);
    std::array<double, 2> correct{}, error{};
    const double p[3] = {dist.p0, dist.p1, dist.p2};
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            if (p[i] * p[j] > 0.0)
                enumerate_component(i, j, p[i] * p[j], link.p_z, eta, link.p_d, correct, error);
    return aggregate_gains(correct, error, link.e_d);
}

}  // namespace siqkd::fock
