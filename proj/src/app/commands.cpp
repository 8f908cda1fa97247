#include "nuosc/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "nuosc/app/format.hpp"
#include "nuosc/app/golden.hpp"
#include "nuosc/errors.hpp"
#include "nuosc/observables.hpp"
#include "nuosc/oracle.hpp"
#include "nuosc/wavefunction.hpp"

namespace nuosc::app {

namespace {

struct LatticePoint
{
    MoleculeConstants const* mol;
    WorkingUnits units;
    FieldParams f;
    QuantumNumbers q;
};

std::vector<LatticePoint> expand(RunConfig const& cfg, std::vector<MoleculeConstants> const& mols)
{
    validate(cfg);
    std::vector<LatticePoint> points;
    for (auto const& mol : mols) {
        WorkingUnits const u = working_units(mol, cfg.units);
        for (double g : cfg.lattice.g) {
            for (int m : cfg.lattice.m) {
                for (double w : cfg.lattice.omega_L) {
                    for (int n : cfg.lattice.n) {
                        points.push_back({&mol, u, FieldParams{w, g}, QuantumNumbers{n, m}});
                    }
                }
            }
        }
    }
    std::stable_sort(points.begin(), points.end(), [](LatticePoint const& a, LatticePoint const& b) {
        return std::tie(a.mol->name, a.f.g, a.q.m, a.f.omega_L, a.q.n)
               < std::tie(b.mol->name, b.f.g, b.q.m, b.f.omega_L, b.q.n);
    });
    return points;
}

void write_key(std::ostream& out, LatticePoint const& p)
{
    out << p.mol->name << ',' << format_coord(p.f.g) << ',' << p.q.m << ',' << format_coord(p.f.omega_L) << ','
        << p.q.n;
}

double figure_value(std::string const& quantity, QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f,
                    SusceptibilityConstants const& k)
{
    if (quantity == "r2") {
        return expectation_r2(q, u, f);
    }
    if (quantity == "p2") {
        return expectation_p2(q, u, f);
    }
    if (quantity == "T") {
        return expectation_T(q, u, f);
    }
    if (quantity == "V") {
        return expectation_V(q, u, f);
    }
    if (quantity == "chi") {
        return susceptibility(q, u, f, k);
    }
    throw ConfigError("unknown figure quantity '" + quantity + "'");
}

double relative(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

std::string describe(LatticePoint const& p)
{
    std::ostringstream os;
    os << p.mol->name << " g=" << format_coord(p.f.g) << " m=" << p.q.m << " omega_L=" << format_coord(p.f.omega_L)
       << " n=" << p.q.n;
    return os.str();
}

// Running maximum of an error with the lattice point where it occurred.
struct Worst
{
    double value = 0.0;
    std::string where;

    void update(double v, std::string const& at)
    {
        if (!(v <= value)) { // NaN counts as worst
            value = v;
            where = at;
        }
    }
};

CheckResult threshold_check(std::string name, Worst const& worst, double tol, std::size_t count)
{
    CheckResult c;
    c.name = std::move(name);
    c.measured = worst.value;
    c.tolerance = tol;
    c.passed = worst.value <= tol;
    std::ostringstream os;
    os << count << " points";
    if (!worst.where.empty()) {
        os << ", worst at " << worst.where;
    }
    c.detail = os.str();
    return c;
}

MoleculeConstants const* find_molecule(std::vector<MoleculeConstants> const& mols, std::string_view name)
{
    for (auto const& m : mols) {
        if (m.name == name) {
            return &m;
        }
    }
    return nullptr;
}

CheckResult golden_energy_check(std::vector<MoleculeConstants> const& mols)
{
    CheckResult c;
    c.name = "golden_energies";
    int compared = 0;
    int mismatched = 0;
    std::ostringstream misses;
    for (auto const& row : golden_energies()) {
        auto const* mol = find_molecule(mols, row.molecule);
        if (mol == nullptr) {
            continue;
        }
        double const e = energy({row.n, row.m}, working_units(*mol), {row.omega_L, static_cast<double>(row.g)});
        ++compared;
        if (!matches_printed(e, row.printed)) {
            if (++mismatched <= 5) {
                misses << "; " << row.molecule << " g=" << row.g << " m=" << row.m
                       << " omega_L=" << format_coord(row.omega_L) << " n=" << row.n << " printed " << row.printed
                       << " computed " << format_sig6(e);
            }
        }
    }
    c.measured = mismatched;
    c.tolerance = 0;
    c.passed = compared > 0 && mismatched == 0;
    c.detail = std::to_string(compared - mismatched) + "/" + std::to_string(compared) + " match" + misses.str();
    return c;
}

CheckResult golden_observable_check(std::vector<MoleculeConstants> const& mols, SusceptibilityConstants const& k)
{
    CheckResult c;
    c.name = "golden_observables";
    int compared = 0;
    int mismatched = 0;
    std::ostringstream misses;
    for (auto const& row : golden_observables()) {
        auto const* mol = find_molecule(mols, row.molecule);
        if (mol == nullptr) {
            continue;
        }
        double const v = figure_value(std::string(quantity_name(row.quantity)), {row.n, 1}, working_units(*mol),
                                      {row.omega_L, 1.0}, k);
        ++compared;
        if (!matches_printed(v, row.printed)) {
            if (++mismatched <= 5) {
                misses << "; " << quantity_name(row.quantity) << ' ' << row.molecule << " n=" << row.n
                       << " omega_L=" << format_coord(row.omega_L) << " printed " << row.printed << " computed "
                       << format_sig6(v);
            }
        }
    }
    c.measured = mismatched;
    c.tolerance = 0;
    c.passed = compared > 0 && mismatched == 0;
    c.detail = std::to_string(compared - mismatched) + "/" + std::to_string(compared) + " match" + misses.str();
    return c;
}

} // namespace

void write_spectrum(RunConfig const& cfg, std::ostream& out)
{
    auto const mols = resolve_molecules(cfg);
    out << "molecule,g,m,omega_L,n,E\n";
    for (auto const& p : expand(cfg, mols)) {
        write_key(out, p);
        out << ',' << format_sig6(energy(p.q, p.units, p.f)) << '\n';
    }
}

void write_observables(RunConfig const& cfg, std::ostream& out)
{
    auto const mols = resolve_molecules(cfg);
    out << "molecule,g,m,omega_L,n,r2,p2,T,V,chi,mu_B\n";
    for (auto const& p : expand(cfg, mols)) {
        SpectrumRecord const r = evaluate(p.mol->name, p.q, p.units, p.f, cfg.constants);
        write_key(out, p);
        out << ',' << format_sig6(r.r2) << ',' << format_sig6(r.p2) << ',' << format_sig6(r.T) << ','
            << format_sig6(r.V) << ',' << format_sig6(r.chi) << ',' << format_sig6(r.mu_B) << '\n';
    }
}

std::vector<FigureSeries> figure_series()
{
    return {
        {"r2", "figure1_r2.csv"}, {"p2", "figure2_p2.csv"}, {"T", "figure3_T.csv"},
        {"V", "figure4_V.csv"},   {"chi", "figure5_chi.csv"},
    };
}

std::vector<double> figure_omegas()
{
    std::vector<double> w(figure_steps + 1);
    for (int i = 0; i <= figure_steps; ++i) {
        w[i] = figure_omega_max * i / figure_steps;
    }
    return w;
}

void write_figure(RunConfig const& cfg, std::string const& quantity, std::ostream& out)
{
    validate(cfg);
    auto mols = resolve_molecules(cfg);
    std::stable_sort(mols.begin(), mols.end(), [](auto const& a, auto const& b) { return a.name < b.name; });
    std::vector<int> ns = cfg.lattice.n;
    std::sort(ns.begin(), ns.end());
    auto const omegas = figure_omegas();

    out << "molecule,n,omega_L,value\n";
    for (auto const& mol : mols) {
        WorkingUnits const u = working_units(mol, cfg.units);
        for (int n : ns) {
            for (double w : omegas) {
                double const v = figure_value(quantity, {n, 1}, u, {w, 1.0}, cfg.constants);
                out << mol.name << ',' << n << ',' << format_coord(w) << ',' << format_sig6(v) << '\n';
            }
        }
    }
}

std::vector<std::filesystem::path> write_figures(RunConfig const& cfg, std::filesystem::path const& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IOError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    std::vector<std::filesystem::path> written;
    for (auto const& series : figure_series()) {
        auto const path = dir / series.file_name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw IOError("cannot write " + path.string());
        }
        write_figure(cfg, series.quantity, out);
        if (!out) {
            throw IOError("write failed for " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

int VerifyReport::failures() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](auto const& c) { return !c.passed; }));
}

VerifyReport run_verify(RunConfig const& cfg)
{
    validate(cfg);
    auto const mols = resolve_molecules(cfg);
    auto const& tol = cfg.tolerances;
    VerifyReport report;

    // Golden tables are only meaningful in the unit convention they were printed in.
    if (cfg.units == UnitsMode::paper) {
        report.checks.push_back(golden_energy_check(mols));
        report.checks.push_back(golden_observable_check(mols, cfg.constants));
    }

    auto const points = expand(cfg, mols);

    Worst sum_err, kinetic_err, parity_err, nu_err;
    for (auto const& p : points) {
        std::string const at = describe(p);
        double const e = energy(p.q, p.units, p.f);
        double const t = expectation_T(p.q, p.units, p.f);
        double const v = expectation_V(p.q, p.units, p.f);
        sum_err.update(relative(t + v, e), at);
        double const p2 = expectation_p2(p.q, p.units, p.f);
        kinetic_err.update(relative(p2 / (2.0 * p.units.mu_eff), t), at);
        double const e_mirror = energy({p.q.n, -p.q.m}, p.units, p.f);
        parity_err.update(std::abs((e - e_mirror) - 2.0 * p.q.m * p.f.omega_L) / std::max(1.0, std::abs(e)), at);
        nu_err.update(relative(solve_level(p.q, p.units, p.f), e), at);
    }
    report.checks.push_back(threshold_check("identity_E_eq_T_plus_V", sum_err, tol.identity_rel, points.size()));
    report.checks.push_back(threshold_check("identity_T_eq_p2_over_2mu", kinetic_err, tol.kinetic_rel, points.size()));
    report.checks.push_back(threshold_check("identity_parity_in_m", parity_err, tol.parity_abs, points.size()));
    report.checks.push_back(threshold_check("nu_root_vs_closed_form", nu_err, tol.nu_rel, points.size()));

    Worst norm_err, orth_err, quad_err, node_err;
    for (auto const& p : points) {
        std::string const at = describe(p);
        RadialState const s = make_radial_state(p.q, p.units, p.f);
        norm_err.update(std::abs(numeric_norm(s) - 1.0), at);
        quad_err.update(relative(numeric_expectation_r2(s), expectation_r2(p.q, p.units, p.f)), at);
        node_err.update(std::abs(node_count(s) - p.q.n), at);
        for (int other : cfg.lattice.n) {
            if (other != p.q.n) {
                RadialState const s2 = make_radial_state({other, p.q.m}, p.units, p.f);
                orth_err.update(std::abs(numeric_overlap(s, s2)), at + " vs n=" + std::to_string(other));
            }
        }
    }
    report.checks.push_back(threshold_check("wavefunction_normalization", norm_err, tol.norm_abs, points.size()));
    report.checks.push_back(
        threshold_check("wavefunction_orthogonality", orth_err, tol.orthogonality_abs, points.size()));
    report.checks.push_back(threshold_check("quadrature_r2_vs_closed_form", quad_err, tol.quadrature_r2_rel,
                                            points.size()));
    report.checks.push_back(threshold_check("node_count_eq_n", node_err, 0.0, points.size()));

    // Finite-difference oracle in dimensionless units, Omega in {1, 2}, omega_L = 0.
    Worst fd_err, fd_edge_err, fd_r2_err;
    std::size_t fd_points = 0;
    std::size_t fd_edge_points = 0;
    for (double Omega : {1.0, 2.0}) {
        WorkingUnits const u = dimensionless_stiffness(Omega);
        for (double g : cfg.lattice.g) {
            for (int m : cfg.lattice.m) {
                for (int n : cfg.lattice.n) {
                    OracleReport const rep = verify_energy({n, m}, u, {0.0, g}, tol.fd_energy_rel);
                    std::ostringstream at;
                    at << "Omega=" << format_coord(Omega) << " g=" << format_coord(g) << " m=" << m << " n=" << n;
                    bool const edge = m == 0 && g == 0.0;
                    (edge ? fd_edge_err : fd_err).update(rep.rel_err, at.str());
                    ++(edge ? fd_edge_points : fd_points);
                    fd_r2_err.update(rep.r2_rel_err, at.str());
                }
            }
        }
    }
    report.checks.push_back(threshold_check("fd_oracle_energy", fd_err, tol.fd_energy_rel, fd_points));
    report.checks.push_back(threshold_check("fd_oracle_energy_m0_g0", fd_edge_err, tol.fd_energy_edge_rel,
                                            fd_edge_points));
    report.checks.push_back(threshold_check("fd_oracle_r2", fd_r2_err, tol.fd_r2_rel, fd_points + fd_edge_points));

    Worst hft_err;
    std::size_t hft_points = 0;
    for (auto const& mol : mols) {
        WorkingUnits const u = working_units(mol, cfg.units);
        for (double w : cfg.lattice.omega_L) {
            for (int n : cfg.lattice.n) {
                HftReport const rep = hft_check({n, 1}, u, {w, 1.0}, 1e-6 * u.omega_eff);
                hft_err.update(rep.rel_err, mol.name + " omega_L=" + format_coord(w) + " n=" + std::to_string(n));
                ++hft_points;
            }
        }
    }
    report.checks.push_back(threshold_check("hellmann_feynman_r2", hft_err, tol.hft_rel, hft_points));
    return report;
}

void print_report(VerifyReport const& report, std::ostream& out)
{
    for (auto const& c : report.checks) {
        char buf[64];
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        std::snprintf(buf, sizeof buf, "  measured=%.3e tol=%.3e", c.measured, c.tolerance);
        out << buf << "  (" << c.detail << ")\n";
    }
    out << report.checks.size() - report.failures() << " passed, " << report.failures() << " failed\n";
}

} // namespace nuosc::app
