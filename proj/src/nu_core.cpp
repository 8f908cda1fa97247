#include "nuosc/nu_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nuosc/errors.hpp"

namespace nuosc {

NUConstants derive_constants(NUCoefficients const& c)
{
    for (double v : {c.beta1, c.beta2, c.beta3, c.rho0, c.rho1, c.rho2}) {
        if (!std::isfinite(v)) {
            throw DomainError("derive_constants: non-finite coefficient");
        }
    }

    NUConstants k;
    k.beta4 = 0.5 * (1.0 - c.beta1);
    k.beta5 = 0.5 * (c.beta2 - 2.0 * c.beta3);
    k.beta6 = k.beta5 * k.beta5 + c.rho2;
    k.beta7 = 2.0 * k.beta4 * k.beta5 - c.rho1;
    k.beta8 = k.beta4 * k.beta4 + c.rho0;
    k.beta9 = c.beta3 * (k.beta7 + c.beta3 * k.beta8) + k.beta6;

    if (k.beta8 < 0.0) {
        throw ComplexBranch("derive_constants: beta8 = " + std::to_string(k.beta8) + " < 0");
    }
    if (k.beta9 < 0.0) {
        throw ComplexBranch("derive_constants: beta9 = " + std::to_string(k.beta9) + " < 0");
    }

    double const sq8 = std::sqrt(k.beta8);
    double const sq9 = std::sqrt(k.beta9);
    k.beta10 = c.beta1 + 2.0 * k.beta4 + 2.0 * sq8 - 1.0;
    k.beta11 = c.beta2 - 2.0 * k.beta5 + 2.0 * (sq9 + c.beta3 * sq8);
    k.beta12 = k.beta4 + sq8;
    // Sign inside the parenthesis as printed in the source derivation; it
    // only matters for beta3 != 0, which the Laguerre branch never uses.
    k.beta13 = k.beta5 - (sq9 - c.beta3 * sq8);
    return k;
}

double energy_residual(int n, NUCoefficients const& c)
{
    if (n < 0) {
        throw DomainError("energy_residual: n must be non-negative");
    }
    NUConstants const k = derive_constants(c);
    double const nn = n;
    double const sq8 = std::sqrt(k.beta8);
    double const sq9 = std::sqrt(k.beta9);
    return c.beta2 * nn - (2.0 * nn + 1.0) * k.beta5 + (2.0 * nn + 1.0) * (sq9 + c.beta3 * sq8)
           + nn * (nn - 1.0) * c.beta3 + k.beta7 + 2.0 * c.beta3 * k.beta8 + 2.0 * std::sqrt(k.beta8 * k.beta9);
}

double solve_energy(int n, CoefficientMap const& coeff_of_energy, EnergyBracket bracket, double tol)
{
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (!(lo < hi)) {
        throw DomainError("solve_energy: bracket must satisfy lo < hi");
    }
    auto residual = [&](double e) { return energy_residual(n, coeff_of_energy(e)); };

    double f_lo = residual(lo);
    double f_hi = residual(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw NoSignChange("solve_energy: residual has the same sign at E = " + std::to_string(lo) + " and E = "
                           + std::to_string(hi));
    }

    int it = 0;
    while (hi - lo > 1e-13 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) {
        if (++it > solve_energy_max_iterations) {
            throw NonConvergence("solve_energy: bisection exceeded iteration cap");
        }
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        double const f_mid = residual(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    double e = 0.5 * (lo + hi);
    if (f_hi != f_lo) {
        double const secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if (secant >= lo && secant <= hi) {
            e = secant;
        }
    }
    if (!(std::abs(residual(e)) <= tol)) {
        throw NonConvergence("solve_energy: residual above tolerance after bracketing");
    }
    return e;
}

} // namespace nuosc
