#include "siqkd/sources.hpp"

#include <cmath>
#include <vector>

namespace siqkd {

namespace {

bool in_unit_interval(double p) {
    const double slack = 1e-12;
    return p >= -slack && p <= 1.0 + slack;
}

}  // namespace

PhotonNumberDistribution sps_distribution(double mean, double g2) {
    if (!(mean > 0.0)) throw InvalidSource("sps_distribution: mean must be > 0");
    if (!(g2 >= 0.0)) throw InvalidSource("sps_distribution: g2 must be >= 0");

    PhotonNumberDistribution d;
    d.mean = mean;
    d.g2 = g2;
    d.p2 = g2 * mean * mean / 2.0;
    d.p1 = mean - 2.0 * d.p2;
    d.p0 = 1.0 - d.p1 - d.p2;
    if (!in_unit_interval(d.p0) || !in_unit_interval(d.p1) || !in_unit_interval(d.p2))
        throw InvalidSource("sps_distribution: (mean, g2) pair is not realizable by a "
                            "{p0,p1,p2} distribution");
    return d;
}

double odd_cat_g2(double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("odd_cat_g2: mu must be > 0");
    double t = std::tanh(mu);
    return t * t;
}

double odd_cat_mean(double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("odd_cat_mean: mu must be > 0");
    // mu*coth(mu) = 1 + mu^2/3 - mu^4/45 + ... ; series below 1e-4 keeps the
    // mu -> 0 limit exact.
    if (mu < 1e-4) {
        double m2 = mu * mu;
        return 1.0 + m2 / 3.0 - m2 * m2 / 45.0;
    }
    return mu / std::tanh(mu);
}

PhotonNumberDistribution odd_cat_distribution(double mu) {
    return sps_distribution(odd_cat_mean(mu), odd_cat_g2(mu));
}

namespace {

// Unnormalized odd-cat Fock weights |<n|psi>|^2 up to cutoff.
// <n|alpha> = e^{-mu/2} alpha^n / sqrt(n!), so the odd-cat amplitude on odd n
// is 2 <n|alpha> / sqrt(2(1 - e^{-2 mu})) and zero on even n.
std::vector<double> odd_cat_weights(double mu, int cutoff) {
    double norm2 = 2.0 * (1.0 - std::exp(-2.0 * mu));
    std::vector<double> w(static_cast<size_t>(cutoff) + 1, 0.0);
    // log of e^{-mu} mu^n / n!
    double log_poisson = -mu;
    for (int n = 0; n <= cutoff; ++n) {
        if (n > 0) log_poisson += std::log(mu) - std::log(static_cast<double>(n));
        if (n % 2 == 1) w[static_cast<size_t>(n)] = 4.0 * std::exp(log_poisson) / norm2;
    }
    return w;
}

}  // namespace

std::pair<double, double> odd_cat_fock_check(double mu, int cutoff) {
    if (!(mu > 0.0)) throw DomainError("odd_cat_fock_check: mu must be > 0");
    auto w = odd_cat_weights(mu, cutoff);
    double norm = 0.0, n1 = 0.0, n2 = 0.0;  // sum, <n>, <n(n-1)>
    for (int n = 0; n <= cutoff; ++n) {
        norm += w[static_cast<size_t>(n)];
        n1 += n * w[static_cast<size_t>(n)];
        n2 += static_cast<double>(n) * (n - 1) * w[static_cast<size_t>(n)];
    }
    if (norm < 1.0 - 1e-12)
        throw CutoffTooSmall("odd_cat_fock_check: truncated norm " + std::to_string(norm));
    return {n1, n2 / (n1 * n1)};
}

double odd_cat_even_weight(double mu, int cutoff) {
    if (!(mu > 0.0)) throw DomainError("odd_cat_even_weight: mu must be > 0");
    auto w = odd_cat_weights(mu, cutoff);
    double even = 0.0;
    for (int n = 0; n <= cutoff; n += 2) even += w[static_cast<size_t>(n)];
    return even;
}

}  // namespace siqkd
