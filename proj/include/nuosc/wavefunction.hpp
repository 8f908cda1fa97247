#pragma once

#include <vector>

#include "nuosc/model.hpp"
#include "nuosc/specfun.hpp"

namespace nuosc {

/// Normalized reduced radial eigenfunction
///
///   R(r) = norm r^(2 delta + 3/2) exp(-gamma r^2 / 2) L_n^(2 delta + 1)(gamma r^2)
///
/// with delta = -1/2 + sqrt(m^2/4 + g/2), gamma = sqrt(omega_L^2 + mu omega^2)
/// and norm^2 = 2 n! gamma^(2 delta + 2) / Gamma(n + 2 delta + 2).
struct RadialState
{
    QuantumNumbers q;
    double delta = 0.0;
    double gamma = 0.0;
    double norm = 0.0;

    /// Order of the associated Laguerre polynomial, 2 delta + 1.
    [[nodiscard]] double laguerre_alpha() const noexcept { return 2.0 * delta + 1.0; }
};

RadialState make_radial_state(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);

/// Same state with an explicit gamma, for dimensionless studies.
RadialState make_radial_state(QuantumNumbers const& q, double g, double gamma);

/// R(r). Throws DomainError for r <= 0.
double radial_value(RadialState const& s, double r);

/// int_0^inf R^2 dr by Gauss-Laguerre after z = gamma r^2.
double numeric_norm(RadialState const& s, int order = default_quadrature_order);

/// int_0^inf r^2 R^2 dr by the same substitution.
double numeric_expectation_r2(RadialState const& s, int order = default_quadrature_order);

/// int_0^inf R_a R_b dr. Both states must share delta and gamma.
double numeric_overlap(RadialState const& a, RadialState const& b, int order = default_quadrature_order);

/// Interior zeros of R on (0, inf), ascending. Sign scan in z = gamma r^2
/// over the range that contains every Laguerre root, refined by bisection.
std::vector<double> node_positions(RadialState const& s);

int node_count(RadialState const& s);

} // namespace nuosc
