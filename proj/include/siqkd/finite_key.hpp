#pragma once

#include "siqkd/errors.hpp"

namespace siqkd {

struct FiniteKeyBudget {
    double n_pulses;   // total emitted pulse pairs N
    double f = 1.16;   // error-correction efficiency
    double eps_cor = 1e-15;
    double eps_sec = 1e-10;

    void validate() const;
};

/// Sifted event and error counts per basis. In simulation these are
/// expected values used directly as reals, no sampling.
struct SiftedCounts {
    double n_z = 0.0;
    double n_x = 0.0;
    double m_z = 0.0;
    double m_x = 0.0;

    double e_z() const { return n_z > 0.0 ? m_z / n_z : 0.0; }
    double e_x() const { return n_x > 0.0 ? m_x / n_x : 0.0; }
};

// -x log2 x - (1-x) log2(1-x), continuous at the endpoints.
double binary_entropy(double x);

// Chernoff upper bound on an observed count with expectation x_star:
// x* + beta/2 + sqrt(2 beta x* + beta^2/4), beta = -ln eps.
double chernoff_upper(double x_star, double eps);

// Random-sampling-without-replacement correction gamma^U(n, k, lambda, eps).
// Throws DomainError in the statistically vacuous regime (lambda in {0,1} or
// log argument <= 1); callers fall back to a worst-case 1/2.
double gamma_u(double n, double k, double lambda, double eps);

// Phase error of the Z basis bounded from the disclosed X data:
// min(1/2, E_x + gamma^U(n_z, n_x, E_x, eps_sec/2)).
double phase_error_si(const SiftedCounts& counts, double eps_sec);

// l = n_z [1 - h(phi_z)] - n_z f h(E_z) - log2(2/eps_cor) - 2 log2(1/eps_sec),
// floored at 0 and truncated to whole bits.
double key_length_si(const SiftedCounts& counts, double phi_z, const FiniteKeyBudget& budget);

}  // namespace siqkd
