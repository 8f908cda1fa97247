#pragma once

#include <string>

#include "nuosc/model.hpp"

namespace nuosc {

/// Constants entering the diamagnetic susceptibility and magnetic moment.
struct SusceptibilityConstants
{
    double N = 6.02e23; ///< Avogadro number
    double z = 1.0;     ///< atomic number
    double e = 1.0;     ///< electronic charge
    double c = 3.00e8;  ///< speed of light
};

void validate(SusceptibilityConstants const& k);

/// 2n + 1 + sqrt(m^2 + 2g), the level factor shared by every closed form.
double level_factor(QuantumNumbers const& q, FieldParams const& f);

/// E = m omega_L + gamma (2n + 1 + sqrt(m^2 + 2g)).
double energy(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);

/// <r^2> = (2n + 1 + sqrt(m^2 + 2g)) / gamma.
double expectation_r2(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);

// The next two carry the negative sign of the reference Hellmann-Feynman
// result. They are paper-mode quantities: the oracle's kinetic energy is a
// different, positive, number.
double expectation_p2(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);
double expectation_T(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);

double expectation_V(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);

/// chi = -(N z e^2 / (6 mu c^2)) <r^2>.
double susceptibility(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                      SusceptibilityConstants const& k = {});

/// mu_B = -(2 e^2 omega_L / (6 mu c)) <r^2>.
double magnetic_moment(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                       SusceptibilityConstants const& k = {});

struct SpectrumRecord
{
    QuantumNumbers q;
    FieldParams f;
    std::string molecule;
    double E = 0.0;
    double r2 = 0.0;
    double p2 = 0.0;
    double T = 0.0;
    double V = 0.0;
    double chi = 0.0;
    double mu_B = 0.0;
};

SpectrumRecord evaluate(std::string molecule, QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                        SusceptibilityConstants const& k = {});

struct HftReport
{
    double lhs = 0.0; ///< central difference dE/domega divided by mu omega
    double rhs = 0.0; ///< closed-form <r^2>
    double rel_err = 0.0;
};

/// Hellmann-Feynman check: (dE/domega)/(mu omega) at fixed mu against <r^2>,
/// with dE/domega from a central difference of step h. Throws DomainError for
/// h <= 0 and DegenerateStep when omega +- h rounds back to omega.
HftReport hft_check(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f, double h);

} // namespace nuosc
