#include "nuosc/wavefunction.hpp"

#include <cmath>

#include "nuosc/errors.hpp"

namespace nuosc {

namespace {

// ln of the prefactor, in log space so large gamma^(2 delta + 2) cannot overflow.
double log_norm(int n, double delta, double gamma)
{
    double const a = 2.0 * delta + 1.0;
    return 0.5 * (std::log(2.0) + ln_gamma(n + 1.0) + (a + 1.0) * std::log(gamma) - ln_gamma(n + a + 1.0));
}

QuadratureRule const& rule_for(double alpha, int order, QuadratureRule& cache)
{
    if (cache.order != order || cache.alpha != alpha) {
        cache = gauss_laguerre(order, alpha);
    }
    return cache;
}

} // namespace

RadialState make_radial_state(QuantumNumbers const& q, double g, double gamma)
{
    if (q.n < 0) {
        throw DomainError("make_radial_state: n must be non-negative");
    }
    if (!(g >= 0.0)) {
        throw DomainError("make_radial_state: g must be >= 0");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("make_radial_state: gamma must be positive");
    }
    double const m = q.m;
    RadialState s;
    s.q = q;
    s.delta = -0.5 + std::sqrt(0.25 * m * m + 0.5 * g);
    s.gamma = gamma;
    s.norm = std::exp(log_norm(q.n, s.delta, gamma));
    return s;
}

RadialState make_radial_state(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    return make_radial_state(q, f.g, confinement_frequency(u, f));
}

double radial_value(RadialState const& s, double r)
{
    if (!(r > 0.0)) {
        throw DomainError("radial_value: r must be positive");
    }
    double const z = s.gamma * r * r;
    double const envelope = std::exp((2.0 * s.delta + 1.5) * std::log(r) - 0.5 * z);
    return s.norm * envelope * laguerre(s.q.n, s.laguerre_alpha(), z);
}

// With z = gamma r^2, dr = dz / (2 sqrt(gamma z)) and
//   int r^(2k) R_a R_b dr = norm_a norm_b / (2 gamma^(a + 1 + k)) int z^(a + k) e^-z L_a L_b dz,
// a = 2 delta + 1, so the Gauss-Laguerre weight x^a e^-x is exact.
namespace {

double moment(RadialState const& a, RadialState const& b, int k, int order)
{
    if (a.delta != b.delta || a.gamma != b.gamma) {
        throw DomainError("numeric_overlap: states must share delta and gamma");
    }
    double const alpha = a.laguerre_alpha();
    thread_local QuadratureRule cache;
    QuadratureRule const& rule = rule_for(alpha, order, cache);
    double const integral = rule.integrate([&](double x) {
        return std::pow(x, k) * laguerre(a.q.n, alpha, x) * laguerre(b.q.n, alpha, x);
    });
    double const log_pref = std::log(a.norm) + std::log(b.norm) - std::log(2.0) - (alpha + 1.0 + k) * std::log(a.gamma);
    return std::exp(log_pref) * integral;
}

} // namespace

double numeric_norm(RadialState const& s, int order)
{
    return moment(s, s, 0, order);
}

double numeric_expectation_r2(RadialState const& s, int order)
{
    return moment(s, s, 1, order);
}

double numeric_overlap(RadialState const& a, RadialState const& b, int order)
{
    return moment(a, b, 0, order);
}

std::vector<double> node_positions(RadialState const& s)
{
    std::vector<double> nodes;
    int const n = s.q.n;
    if (n == 0) {
        return nodes;
    }
    double const alpha = s.laguerre_alpha();
    // Every zero of L_n^alpha lies below 2n + alpha + 1 + sqrt(...) < 4n + 2 alpha + 6.
    double const z_max = 4.0 * n + 2.0 * alpha + 6.0;
    int const samples = 4000 * n;
    auto r_of = [&](double z) { return std::sqrt(z / s.gamma); };

    double z_prev = z_max / samples;
    double v_prev = radial_value(s, r_of(z_prev));
    for (int i = 2; i <= samples; ++i) {
        double const z = z_max * i / samples;
        double const v = radial_value(s, r_of(z));
        if (v == 0.0) {
            nodes.push_back(r_of(z));
        } else if ((v > 0.0) != (v_prev > 0.0) && v_prev != 0.0) {
            double lo = z_prev;
            double hi = z;
            double f_lo = v_prev;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
                double const mid = 0.5 * (lo + hi);
                double const f_mid = radial_value(s, r_of(mid));
                if ((f_mid > 0.0) == (f_lo > 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            nodes.push_back(r_of(0.5 * (lo + hi)));
        }
        z_prev = z;
        v_prev = v;
    }
    return nodes;
}

int node_count(RadialState const& s)
{
    return static_cast<int>(node_positions(s).size());
}

} // namespace nuosc
