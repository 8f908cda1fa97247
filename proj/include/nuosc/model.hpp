#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nuosc/nu_core.hpp"

namespace nuosc {

/// One row of the molecular parameter table.
struct MoleculeConstants
{
    std::string name;
    double omega = 0.0; ///< vibrational frequency in units of 1e13 s^-1
    double mass = 0.0;  ///< reduced mass in a.m.u.
};

struct FieldParams
{
    double omega_L = 0.0; ///< Larmor frequency
    double g = 0.0;       ///< inverse-quadratic strength
};

struct QuantumNumbers
{
    int n = 0; ///< vibrational level
    int m = 0; ///< magnetic quantum number, any sign
};

enum class UnitsMode
{
    paper,
    dimensionless
};

/// Numbers substituted for the mass and frequency in every closed form.
///
/// In paper mode mu_eff is the mass in kg and omega_eff the frequency in
/// s^-1, with hbar taken as 1. The tables only come out right under this
/// (dimensionally inconsistent) convention. Dimensionless mode uses the raw
/// numbers as given.
struct WorkingUnits
{
    double mu_eff = 1.0;
    double omega_eff = 1.0;
    UnitsMode mode = UnitsMode::dimensionless;

    /// mu_eff * omega_eff^2, the oscillator stiffness.
    [[nodiscard]] double stiffness() const noexcept { return mu_eff * omega_eff * omega_eff; }
};

inline constexpr double amu_in_kg = 1.66e-27;
inline constexpr double omega_unit = 1e13;

WorkingUnits working_units(MoleculeConstants const& mol);
WorkingUnits working_units(MoleculeConstants const& mol, UnitsMode mode);

/// Dimensionless units with mu_eff = mu and omega_eff = omega.
WorkingUnits dimensionless_units(double mu, double omega);

/// Dimensionless units with stiffness Omega^2 (mu = 1, omega = Omega).
/// At omega_L = 0 the confinement frequency is exactly Omega.
WorkingUnits dimensionless_stiffness(double Omega);

/// sqrt(omega_L^2 + mu omega^2), the confinement frequency gamma.
double confinement_frequency(WorkingUnits const& u, FieldParams const& f);

/// m omega_L + [(m^2 - 1/4)/2 + g] / r^2 + (omega_L^2 + mu omega^2) r^2 / 2.
/// Throws DomainError for r <= 0.
double effective_potential(double r, WorkingUnits const& u, FieldParams const& f, int m);

/// Coefficients of the z = r^2 form of the radial equation at trial energy E.
NUCoefficients to_nu_coefficients(WorkingUnits const& u, FieldParams const& f, int m, double E);

/// Energy of level q found as a root of the parametric energy condition
/// (no closed form involved). The bracket starts just below m omega_L and is
/// widened by doubling until the residual changes sign.
double solve_level(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f);

void validate(MoleculeConstants const& mol);
void validate(FieldParams const& f);

/// The four molecules shipped with the library (CO, HCl, I2, H2).
std::vector<MoleculeConstants> builtin_molecules();

inline constexpr std::string_view molecules_header = "name,omega_1e13_s,mass_amu";

/// Parses a molecule constants table. The first non-empty line must be the
/// header `name,omega_1e13_s,mass_amu`. Errors are ConfigError messages of
/// the form `<source>:<line>:<column>: <what>`.
std::vector<MoleculeConstants> parse_molecules(std::istream& in, std::string const& source = "<input>");

/// Reads a molecule constants file. Throws IOError if the file cannot be opened.
std::vector<MoleculeConstants> load_molecules(std::string const& path);

} // namespace nuosc
