#include "siqkd/finite_key.hpp"

#include <algorithm>
#include <cmath>

namespace siqkd {

namespace {
constexpr double kTwoPi = 6.2831853071795864769;
}

void FiniteKeyBudget::validate() const {
    if (!(n_pulses >= 1.0)) throw DomainError("FiniteKeyBudget: n_pulses must be >= 1");
    if (!(f >= 1.0)) throw DomainError("FiniteKeyBudget: f must be >= 1");
    if (!(eps_cor > 0.0 && eps_cor < 1.0)) throw DomainError("FiniteKeyBudget: eps_cor outside (0,1)");
    if (!(eps_sec > 0.0 && eps_sec < 1.0)) throw DomainError("FiniteKeyBudget: eps_sec outside (0,1)");
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double chernoff_upper(double x_star, double eps) {
    if (!(x_star >= 0.0)) throw DomainError("chernoff_upper: x_star must be >= 0");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("chernoff_upper: eps outside (0,1)");
    double beta = -std::log(eps);
    return x_star + beta / 2.0 + std::sqrt(2.0 * beta * x_star + beta * beta / 4.0);
}

double gamma_u(double n, double k, double lambda, double eps) {
    if (!(n >= 1.0 && k >= 1.0)) throw DomainError("gamma_u: n, k must be >= 1");
    if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("gamma_u: lambda outside (0,1)");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("gamma_u: eps outside (0,1)");
    double nk = n + k;
    double log_arg = nk / (kTwoPi * n * k * lambda * (1.0 - lambda) * eps * eps);
    if (!(log_arg > 1.0)) throw DomainError("gamma_u: vacuous regime (log argument <= 1)");
    double big_g = nk / (n * k) * std::log(log_arg);
    double big_a = std::max(n, k);
    double ag = big_a * big_g / nk;
    return ((1.0 - 2.0 * lambda) * ag + std::sqrt(ag * ag + 4.0 * lambda * (1.0 - lambda) * big_g)) /
           (2.0 + 2.0 * big_a * big_a * big_g / (nk * nk));
}

double phase_error_si(const SiftedCounts& counts, double eps_sec) {
    if (counts.n_z < 1.0 || counts.n_x < 1.0) return 0.5;
    double e_x = counts.e_x();
    if (e_x >= 0.5) return 0.5;
    // Zero observed error: substitute half an event to keep gamma_u defined.
    double lambda = e_x > 0.0 ? e_x : 1.0 / (2.0 * counts.n_x);
    try {
        return std::min(0.5, e_x + gamma_u(counts.n_z, counts.n_x, lambda, eps_sec / 2.0));
    } catch (const DomainError&) {
        return 0.5;
    }
}

double key_length_si(const SiftedCounts& counts, double phi_z, const FiniteKeyBudget& budget) {
    budget.validate();
    if (counts.n_z <= 0.0) return 0.0;
    phi_z = std::clamp(phi_z, 0.0, 0.5);
    double leak_ec = counts.n_z * budget.f * binary_entropy(counts.e_z());
    double l = counts.n_z * (1.0 - binary_entropy(phi_z)) - leak_ec -
               std::log2(2.0 / budget.eps_cor) - 2.0 * std::log2(1.0 / budget.eps_sec);
    return l > 0.0 ? std::floor(l) : 0.0;
}

}  // namespace siqkd
