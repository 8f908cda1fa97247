#pragma once

#include <vector>

namespace nuosc {

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence
/// in n. Throws DomainError for n < 0 or alpha <= -1.
double laguerre(int n, double alpha, double x);

/// ln Gamma(x) for x > 0 (Lanczos, g = 7). Throws DomainError for x <= 0.
double ln_gamma(double x);

/// Gauss-Laguerre rule for the weight x^alpha e^-x on (0, inf).
struct QuadratureRule
{
    std::vector<double> nodes;   ///< strictly increasing, all positive
    std::vector<double> weights; ///< all positive, sum to Gamma(alpha + 1)
    int order = 0;
    double alpha = 0.0;

    /// Sum of w_i f(x_i).
    template <typename F>
    [[nodiscard]] double integrate(F&& f) const
    {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(nodes[i]);
        }
        return sum;
    }
};

inline constexpr int default_quadrature_order = 64;
inline constexpr int gauss_laguerre_max_newton = 100;

/// Nodes by Newton iteration on L_order^alpha from asymptotic initial
/// guesses. Throws NonConvergence if a root needs more than 100 steps.
QuadratureRule gauss_laguerre(int order, double alpha);

} // namespace nuosc
