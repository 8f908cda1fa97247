#pragma once

#include <functional>
#include <vector>

#include "nuosc/model.hpp"

namespace nuosc {

/// Cell-centred radial grid: nodes r_i = (i + 1/2) h, i = 0..points-1, with
/// h = r_max / (points + 1/2) so that the Dirichlet point sits at r_max.
/// The origin is a cell face, not a node.
struct RadialGrid
{
    double r_max = 0.0;
    int points = 0;

    [[nodiscard]] double h() const noexcept { return r_max / (points + 0.5); }
    [[nodiscard]] double node(int i) const noexcept { return (i + 0.5) * h(); }
    [[nodiscard]] double r_min() const noexcept { return node(0); }
};

RadialGrid make_grid(double r_max, int points);

/// Lowest eigenpairs of -(1/2) u'' + V(r) u = E u with u(0) = u(r_max) = 0.
struct FDSolution
{
    RadialGrid grid;
    std::vector<double> eigenvalues;               ///< strictly ascending
    std::vector<std::vector<double>> eigenvectors; ///< h sum u_i^2 = 1, first significant component > 0
};

using RadialPotential = std::function<double(double)>;

inline constexpr int inverse_iteration_max_sweeps = 50;

/// Symmetric tridiagonal operator of the discretized radial equation.
///
/// The kinetic term is the flux-form stencil of the two-dimensional radial
/// Laplacian in phi = u / sqrt(r), symmetrized back to u: diagonal
/// 1/h^2 + 1/(8 r_i^2), off-diagonal -r_(i+1/2) / (2 h^2 sqrt(r_i r_(i+1))).
/// Away from the origin this is the ordinary three-point stencil to O(h^2).
struct Tridiagonal
{
    std::vector<double> diag;
    std::vector<double> off; ///< size diag.size() - 1
};

Tridiagonal kinetic_operator(RadialGrid const& grid);
Tridiagonal radial_operator(RadialPotential const& V, RadialGrid const& grid);

/// Number of eigenvalues strictly below lambda, from the signs of the LDL^T pivots.
int sturm_count(Tridiagonal const& t, double lambda);

/// Lowest `count` eigenpairs: Sturm-sequence bisection for the eigenvalues,
/// inverse iteration for the vectors. Throws GridTooCoarse when two requested
/// eigenvalues are closer than ten bisection tolerances, NonConvergence when
/// inverse iteration needs more than 50 sweeps.
FDSolution fd_eigensolve(RadialPotential const& V, RadialGrid const& grid, int count);

/// h sum f(r_i) u_i^2 for eigenvector `which`. Throws IndexError when out of range.
double oracle_expectation(FDSolution const& s, int which, std::function<double(double)> const& f);

/// <u| -(1/2) d^2/dr^2 |u> with the solver's own stencil. Always positive.
double oracle_kinetic(FDSolution const& s, int which);

struct OracleReport
{
    double closed_form = 0.0;
    double oracle_value = 0.0;
    double rel_err = 0.0;
    RadialGrid grid_used;
    int refinements = 0;
    double r2_closed_form = 0.0;
    double r2_oracle = 0.0;
    double r2_rel_err = 0.0;
    double T_physical = 0.0;
};

inline constexpr int oracle_start_points = 2000;
inline constexpr int oracle_max_refinements = 6;

/// Default outer boundary 12 / sqrt(gamma).
double default_r_max(WorkingUnits const& u, FieldParams const& f);

/// Refines the grid (doubling the point count from 2000) until the n-th
/// eigenvalue moves by less than tol/10 relative, then compares with the
/// closed-form energy and <r^2>. Throws NoConvergenceUnderRefinement after six
/// refinements.
OracleReport verify_energy(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f, double tol);

struct ConvergenceStudy
{
    std::vector<double> steps;  ///< grid spacing h
    std::vector<double> errors; ///< |E_fd - E_closed|
    double order = 0.0;         ///< least-squares slope of log error against log h
};

/// Eigenvalue error on `levels` grids, each with twice the points of the last.
ConvergenceStudy fd_convergence(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                                int start_points = 250, int levels = 4);

} // namespace nuosc
