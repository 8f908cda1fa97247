#pragma once

#include <functional>
#include <utility>

namespace nuosc {

/// Coefficients of the generalized hypergeometric-type equation
///
///   psi'' + (beta1 - beta2 z) / (z (1 - beta3 z)) psi'
///         + (-rho2 z^2 + rho1 z - rho0) / (z^2 (1 - beta3 z)^2) psi = 0.
struct NUCoefficients
{
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
    double rho0 = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
};

/// Derived parametric constants. beta4..beta9 enter the energy condition,
/// beta10..beta13 the wavefunction.
struct NUConstants
{
    double beta4 = 0.0;
    double beta5 = 0.0;
    double beta6 = 0.0;
    double beta7 = 0.0;
    double beta8 = 0.0;
    double beta9 = 0.0;
    double beta10 = 0.0;
    double beta11 = 0.0;
    double beta12 = 0.0;
    double beta13 = 0.0;
};

/// Throws DomainError for non-finite input and ComplexBranch when beta8 or
/// beta9 is negative. Only the k_- (bound state) branch is produced.
NUConstants derive_constants(NUCoefficients const& c);

/// Left-hand side of the bound-state energy condition for level n.
/// Zero at an eigenvalue.
double energy_residual(int n, NUCoefficients const& c);

/// Maps a trial energy to the coefficients of the equation at that energy.
using CoefficientMap = std::function<NUCoefficients(double)>;

struct EnergyBracket
{
    double lo;
    double hi;
};

inline constexpr int solve_energy_max_iterations = 200;

/// Bracketing bisection down to a width of 1e-13 max(1, |E|) followed by
/// one secant step. Throws NoSignChange when the residual has the same sign
/// at both ends and NonConvergence when the iteration cap is hit or the
/// final residual exceeds tol.
double solve_energy(int n, CoefficientMap const& coeff_of_energy, EnergyBracket bracket, double tol);

} // namespace nuosc
