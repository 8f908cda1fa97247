#include "nuosc/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nuosc/errors.hpp"

namespace nuosc {

double laguerre(int n, double alpha, double x)
{
    if (n < 0) {
        throw DomainError("laguerre: n must be non-negative");
    }
    if (!(alpha > -1.0)) {
        throw DomainError("laguerre: alpha must exceed -1");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        double const next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double ln_gamma_lanczos(double x)
{
    // Valid for x >= 1/2.
    double const xm = x - 1.0;
    double series = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i) {
        series += lanczos_coef[i] / (xm + static_cast<double>(i));
    }
    double const t = xm + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(series);
}

} // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: x must be positive and finite");
    }
    // Exact values where the Lanczos sum would leave rounding noise.
    if (x == 1.0 || x == 2.0) {
        return 0.0;
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - ln_gamma_lanczos(1.0 - x);
    }
    return ln_gamma_lanczos(x);
}

QuadratureRule gauss_laguerre(int order, double alpha)
{
    if (order < 1) {
        throw DomainError("gauss_laguerre: order must be >= 1");
    }
    if (!(alpha > -1.0)) {
        throw DomainError("gauss_laguerre: alpha must exceed -1");
    }

    QuadratureRule rule;
    rule.order = order;
    rule.alpha = alpha;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    double const n = order;
    double const log_weight_scale = ln_gamma(alpha + n) - ln_gamma(n);
    double z = 0.0;
    for (int i = 0; i < order; ++i) {
        if (i == 0) {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
        } else if (i == 1) {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
        } else {
            double const ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) * (z - rule.nodes[i - 2])
                 / (1.0 + 0.3 * alpha);
        }

        double deriv = 0.0;
        double p_prev = 0.0;
        bool converged = false;
        double last_step = std::numeric_limits<double>::infinity();
        for (int it = 0; it < gauss_laguerre_max_newton; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                double const p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 + alpha - z) * p2 - (j + alpha) * p3) / (j + 1.0);
            }
            // p1 = L_n(z), p2 = L_{n-1}(z)
            deriv = (n * p1 - (n + alpha) * p2) / z;
            p_prev = p2;
            double const step = p1 / deriv;
            z -= step;
            double const scale = std::max(1.0, std::abs(z));
            // Near the root the step bounces at the rounding level of L_n.
            if (std::abs(step) <= 1e-14 * scale || (std::abs(step) <= 1e-11 * scale && std::abs(step) >= last_step)) {
                converged = true;
                break;
            }
            last_step = std::abs(step);
        }
        if (!converged) {
            throw NonConvergence("gauss_laguerre: Newton failed for root " + std::to_string(i) + " of order "
                                 + std::to_string(order));
        }
        rule.nodes[i] = z;
        rule.weights[i] = -std::exp(log_weight_scale) / (deriv * n * p_prev);
    }

    for (int i = 0; i < order; ++i) {
        if (!(rule.nodes[i] > 0.0) || (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])) || !(rule.weights[i] > 0.0)) {
            throw NonConvergence("gauss_laguerre: Newton converged to an invalid root set");
        }
    }
    return rule;
}

} // namespace nuosc
