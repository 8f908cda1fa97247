#include "nuosc/observables.hpp"

#include <cmath>

#include "nuosc/errors.hpp"

namespace nuosc {

void validate(SusceptibilityConstants const& k)
{
    if (!(k.N > 0.0 && k.z > 0.0 && k.e > 0.0 && k.c > 0.0)) {
        throw DomainError("susceptibility constants must all be positive");
    }
}

double level_factor(QuantumNumbers const& q, FieldParams const& f)
{
    if (q.n < 0) {
        throw DomainError("quantum number n must be non-negative");
    }
    double const m = q.m;
    return 2.0 * q.n + 1.0 + std::sqrt(m * m + 2.0 * f.g);
}

double energy(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    return q.m * f.omega_L + confinement_frequency(u, f) * level_factor(q, f);
}

double expectation_r2(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    return level_factor(q, f) / confinement_frequency(u, f);
}

double expectation_p2(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    double const mu = u.mu_eff;
    double const w = u.omega_eff;
    return -(mu * mu * w * w) * level_factor(q, f) / confinement_frequency(u, f);
}

double expectation_T(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    return -u.stiffness() * level_factor(q, f) / (2.0 * confinement_frequency(u, f));
}

double expectation_V(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    double const K = level_factor(q, f);
    double const gamma = confinement_frequency(u, f);
    return q.m * f.omega_L + gamma * K + 0.5 * u.stiffness() * K / gamma;
}

double susceptibility(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                      SusceptibilityConstants const& k)
{
    validate(k);
    double const prefactor = k.N * k.z * k.e * k.e / (6.0 * u.mu_eff * k.c * k.c);
    return -prefactor * expectation_r2(q, u, f);
}

double magnetic_moment(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                       SusceptibilityConstants const& k)
{
    validate(k);
    double const prefactor = 2.0 * k.e * k.e * f.omega_L / (6.0 * u.mu_eff * k.c);
    double const value = -prefactor * expectation_r2(q, u, f);
    return value == 0.0 ? 0.0 : value; // no negative zero at omega_L = 0
}

SpectrumRecord evaluate(std::string molecule, QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                        SusceptibilityConstants const& k)
{
    SpectrumRecord rec;
    rec.q = q;
    rec.f = f;
    rec.molecule = std::move(molecule);
    rec.E = energy(q, u, f);
    rec.r2 = expectation_r2(q, u, f);
    rec.p2 = expectation_p2(q, u, f);
    rec.T = expectation_T(q, u, f);
    rec.V = expectation_V(q, u, f);
    rec.chi = susceptibility(q, u, f, k);
    rec.mu_B = magnetic_moment(q, u, f, k);
    return rec;
}

HftReport hft_check(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f, double h)
{
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("hft_check: step must be positive");
    }
    double const w = u.omega_eff;
    double const w_plus = w + h;
    double const w_minus = w - h;
    if (w_plus == w || w_minus == w) {
        throw DegenerateStep("hft_check: step vanishes at working precision");
    }

    auto energy_at = [&](double omega) {
        WorkingUnits shifted = u;
        shifted.omega_eff = omega;
        return energy(q, shifted, f);
    };
    // Difference over the representable span so rounding of w +- h does not bias the quotient.
    double const dE = (energy_at(w_plus) - energy_at(w_minus)) / (w_plus - w_minus);

    HftReport rep;
    rep.lhs = dE / (u.mu_eff * w);
    rep.rhs = expectation_r2(q, u, f);
    rep.rel_err = std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs);
    return rep;
}

} // namespace nuosc
