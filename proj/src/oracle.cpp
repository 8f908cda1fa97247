#include "nuosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "nuosc/errors.hpp"
#include "nuosc/observables.hpp"

namespace nuosc {

RadialGrid make_grid(double r_max, int points)
{
    if (!(r_max > 0.0) || !std::isfinite(r_max)) {
        throw DomainError("make_grid: r_max must be positive");
    }
    if (points < 3) {
        throw DomainError("make_grid: need at least 3 points");
    }
    return RadialGrid{r_max, points};
}

Tridiagonal kinetic_operator(RadialGrid const& grid)
{
    int const n = grid.points;
    double const h = grid.h();
    double const inv_h2 = 1.0 / (h * h);
    Tridiagonal t;
    t.diag.resize(n);
    t.off.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        double const r = grid.node(i);
        t.diag[i] = inv_h2 + 1.0 / (8.0 * r * r);
    }
    for (int i = 0; i + 1 < n; ++i) {
        double const face = (i + 1) * h;
        t.off[i] = -0.5 * inv_h2 * face / std::sqrt(grid.node(i) * grid.node(i + 1));
    }
    return t;
}

Tridiagonal radial_operator(RadialPotential const& V, RadialGrid const& grid)
{
    Tridiagonal t = kinetic_operator(grid);
    for (int i = 0; i < grid.points; ++i) {
        double const v = V(grid.node(i));
        if (!std::isfinite(v)) {
            throw DomainError("fd_eigensolve: potential is not finite at r = " + std::to_string(grid.node(i)));
        }
        t.diag[i] += v;
    }
    return t;
}

namespace {

double tiny_pivot(Tridiagonal const& t)
{
    return std::numeric_limits<double>::epsilon() * (std::abs(t.diag.front()) + 1.0);
}

struct Gershgorin
{
    double lo;
    double hi;
};

Gershgorin gershgorin(Tridiagonal const& t)
{
    std::size_t const n = t.diag.size();
    Gershgorin b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(t.off[i - 1]);
        }
        if (i + 1 < n) {
            radius += std::abs(t.off[i]);
        }
        b.lo = std::min(b.lo, t.diag[i] - radius);
        b.hi = std::max(b.hi, t.diag[i] + radius);
    }
    return b;
}

// Banded LU with partial pivoting of T - shift, as in LAPACK's gttrf/gtts2.
class ShiftedLU
{
  public:
    ShiftedLU(Tridiagonal const& t, double shift) : d_(t.diag), du_(t.off), dl_(t.off)
    {
        std::size_t const n = d_.size();
        du2_.assign(n > 2 ? n - 2 : 0, 0.0);
        pivot_.assign(n > 0 ? n - 1 : 0, false);
        double const tiny = tiny_pivot(t);
        for (auto& v : d_) {
            v -= shift;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d_[i]) >= std::abs(dl_[i])) {
                if (d_[i] == 0.0) {
                    d_[i] = tiny;
                }
                double const fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            } else {
                double const fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                double const temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                pivot_[i] = true;
            }
        }
        if (n > 0 && d_[n - 1] == 0.0) {
            d_[n - 1] = tiny;
        }
    }

    void solve(std::vector<double>& b) const
    {
        std::size_t const n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!pivot_[i]) {
                b[i + 1] -= dl_[i] * b[i];
            } else {
                double const temp = b[i] - dl_[i] * b[i + 1];
                b[i] = b[i + 1];
                b[i + 1] = temp;
            }
        }
        b[n - 1] /= d_[n - 1];
        if (n > 1) {
            b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
        }
        for (std::size_t k = n; k-- > 2;) {
            std::size_t const i = k - 2;
            b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
        }
    }

  private:
    std::vector<double> d_;
    std::vector<double> du_;
    std::vector<double> dl_;
    std::vector<double> du2_;
    std::vector<bool> pivot_;
};

double norm2(std::vector<double> const& v)
{
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

std::vector<double> inverse_iteration(Tridiagonal const& t, double lambda)
{
    std::size_t const n = t.diag.size();
    ShiftedLU const lu(t, lambda);

    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    std::vector<double> x(n);
    for (auto& v : x) {
        v = dist(rng);
    }
    double const nx = norm2(x);
    for (auto& v : x) {
        v /= nx;
    }

    std::vector<double> y;
    for (int sweep = 0; sweep < inverse_iteration_max_sweeps; ++sweep) {
        y = x;
        lu.solve(y);
        double ny = norm2(y);
        if (!(ny > 0.0) || !std::isfinite(ny)) {
            throw NonConvergence("inverse iteration produced a degenerate vector");
        }
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot += y[i] * x[i];
        }
        if (dot < 0.0) {
            ny = -ny;
        }
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= ny;
            diff += (y[i] - x[i]) * (y[i] - x[i]);
        }
        x.swap(y);
        if (std::sqrt(diff) < 1e-9) {
            return x;
        }
    }
    throw NonConvergence("inverse iteration did not converge in " + std::to_string(inverse_iteration_max_sweeps)
                         + " sweeps");
}

} // namespace

int sturm_count(Tridiagonal const& t, double lambda)
{
    std::size_t const n = t.diag.size();
    double const tiny = tiny_pivot(t);
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double const b2 = i > 0 ? t.off[i - 1] * t.off[i - 1] : 0.0;
        d = t.diag[i] - lambda - (i > 0 ? b2 / d : 0.0);
        if (d == 0.0) {
            d = -tiny;
        }
        if (d < 0.0) {
            ++count;
        }
    }
    return count;
}

FDSolution fd_eigensolve(RadialPotential const& V, RadialGrid const& grid, int count)
{
    if (grid.points < 3 || !(grid.r_max > 0.0)) {
        throw DomainError("fd_eigensolve: invalid grid");
    }
    if (count < 1 || count > grid.points) {
        throw DomainError("fd_eigensolve: count must lie in [1, points]");
    }
    Tridiagonal const t = radial_operator(V, grid);
    Gershgorin const bounds = gershgorin(t);
    double const tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(bounds.lo), std::abs(bounds.hi));

    FDSolution sol;
    sol.grid = grid;
    double lo = bounds.lo;
    for (int k = 0; k < count; ++k) {
        // k-th eigenvalue: smallest lambda with more than k eigenvalues below it.
        double a = lo;
        double b = bounds.hi;
        for (int it = 0; it < 400 && b - a > tol; ++it) {
            double const mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) {
                break;
            }
            if (sturm_count(t, mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
        }
        double const lambda = 0.5 * (a + b);
        if (!sol.eigenvalues.empty() && lambda - sol.eigenvalues.back() < 10.0 * tol) {
            throw GridTooCoarse("fd_eigensolve: eigenvalues " + std::to_string(k - 1) + " and " + std::to_string(k)
                                + " are not separable at this resolution");
        }
        sol.eigenvalues.push_back(lambda);
        lo = a;
    }

    double const h = grid.h();
    for (double lambda : sol.eigenvalues) {
        std::vector<double> u = inverse_iteration(t, lambda);
        double sum = 0.0;
        double peak = 0.0;
        for (double v : u) {
            sum += v * v;
            peak = std::max(peak, std::abs(v));
        }
        double scale = 1.0 / std::sqrt(h * sum);
        for (double v : u) {
            if (std::abs(v) > 1e-8 * peak) {
                if (v < 0.0) {
                    scale = -scale;
                }
                break;
            }
        }
        for (auto& v : u) {
            v *= scale;
        }
        sol.eigenvectors.push_back(std::move(u));
    }
    return sol;
}

double oracle_expectation(FDSolution const& s, int which, std::function<double(double)> const& f)
{
    if (which < 0 || which >= static_cast<int>(s.eigenvectors.size())) {
        throw IndexError("oracle_expectation: eigenvector index " + std::to_string(which) + " out of range");
    }
    auto const& u = s.eigenvectors[which];
    double sum = 0.0;
    for (int i = 0; i < s.grid.points; ++i) {
        sum += f(s.grid.node(i)) * u[i] * u[i];
    }
    return s.grid.h() * sum;
}

double oracle_kinetic(FDSolution const& s, int which)
{
    if (which < 0 || which >= static_cast<int>(s.eigenvectors.size())) {
        throw IndexError("oracle_kinetic: eigenvector index " + std::to_string(which) + " out of range");
    }
    Tridiagonal const k = kinetic_operator(s.grid);
    auto const& u = s.eigenvectors[which];
    std::size_t const n = u.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ku = k.diag[i] * u[i];
        if (i > 0) {
            ku += k.off[i - 1] * u[i - 1];
        }
        if (i + 1 < n) {
            ku += k.off[i] * u[i + 1];
        }
        sum += u[i] * ku;
    }
    return s.grid.h() * sum;
}

double default_r_max(WorkingUnits const& u, FieldParams const& f)
{
    return 12.0 / std::sqrt(confinement_frequency(u, f));
}

namespace {

RadialPotential potential_for(WorkingUnits const& u, FieldParams const& f, int m)
{
    return [u, f, m](double r) { return effective_potential(r, u, f, m); };
}

} // namespace

OracleReport verify_energy(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f, double tol)
{
    if (q.n < 0) {
        throw DomainError("verify_energy: n must be non-negative");
    }
    if (!(tol > 0.0)) {
        throw DomainError("verify_energy: tol must be positive");
    }
    RadialPotential const V = potential_for(u, f, q.m);
    double const r_max = default_r_max(u, f);

    double previous = std::numeric_limits<double>::quiet_NaN();
    int points = oracle_start_points;
    for (int refinement = 0; refinement <= oracle_max_refinements; ++refinement, points *= 2) {
        RadialGrid const grid = make_grid(r_max, points);
        FDSolution const sol = fd_eigensolve(V, grid, q.n + 1);
        double const e = sol.eigenvalues[q.n];
        if (refinement > 0 && std::abs(e - previous) < 0.1 * tol * std::abs(e)) {
            OracleReport rep;
            rep.closed_form = energy(q, u, f);
            rep.oracle_value = e;
            rep.rel_err = std::abs(e - rep.closed_form) / std::abs(rep.closed_form);
            rep.grid_used = grid;
            rep.refinements = refinement;
            rep.r2_closed_form = expectation_r2(q, u, f);
            rep.r2_oracle = oracle_expectation(sol, q.n, [](double r) { return r * r; });
            rep.r2_rel_err = std::abs(rep.r2_oracle - rep.r2_closed_form) / rep.r2_closed_form;
            rep.T_physical = oracle_kinetic(sol, q.n);
            return rep;
        }
        previous = e;
    }
    throw NoConvergenceUnderRefinement("verify_energy: eigenvalue " + std::to_string(q.n)
                                       + " not stable after " + std::to_string(oracle_max_refinements)
                                       + " refinements");
}

ConvergenceStudy fd_convergence(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                                int start_points, int levels)
{
    if (levels < 2) {
        throw DomainError("fd_convergence: need at least two grids");
    }
    RadialPotential const V = potential_for(u, f, q.m);
    double const r_max = default_r_max(u, f);
    double const exact = energy(q, u, f);

    ConvergenceStudy study;
    int points = start_points;
    for (int level = 0; level < levels; ++level, points *= 2) {
        RadialGrid const grid = make_grid(r_max, points);
        FDSolution const sol = fd_eigensolve(V, grid, q.n + 1);
        study.steps.push_back(grid.h());
        study.errors.push_back(std::abs(sol.eigenvalues[q.n] - exact));
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double const k = levels;
    for (int i = 0; i < levels; ++i) {
        double const x = std::log(study.steps[i]);
        double const y = std::log(study.errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    study.order = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return study;
}

} // namespace nuosc
