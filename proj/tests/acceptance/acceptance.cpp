// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nuosc/app/commands.hpp"
#include "nuosc/app/format.hpp"
#include "nuosc/app/golden.hpp"
#include "nuosc/errors.hpp"
#include "nuosc/observables.hpp"
#include "nuosc/oracle.hpp"
#include "nuosc/wavefunction.hpp"

using namespace nuosc;
using namespace nuosc::app;

namespace {

struct Outcome
{
    bool passed = false;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    double time_limit_s; ///< 0 when the criterion sets no runtime bound
    std::function<Outcome()> body;
};

std::vector<MoleculeConstants> const molecules = builtin_molecules();

MoleculeConstants const& molecule(std::string_view name)
{
    for (auto const& m : molecules) {
        if (m.name == name) {
            return m;
        }
    }
    throw IndexError("unknown molecule " + std::string(name));
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// Lattice of the golden tables.
template <typename F>
void for_lattice(F&& f)
{
    for (auto const& mol : molecules) {
        WorkingUnits const u = working_units(mol);
        for (double g : {0.0, 1.0}) {
            for (int m : {0, 1}) {
                for (double w : {0.0, 5.0, 10.0}) {
                    for (int n = 0; n <= 3; ++n) {
                        f(mol, u, QuantumNumbers{n, m}, FieldParams{w, g});
                    }
                }
            }
        }
    }
}

Outcome golden_energies_criterion()
{
    int total = 0;
    std::vector<std::string> misses;
    for (auto const& row : golden_energies()) {
        double const e = energy({row.n, row.m}, working_units(molecule(row.molecule)),
                                {row.omega_L, static_cast<double>(row.g)});
        ++total;
        if (!matches_printed(e, row.printed)) {
            misses.push_back(std::string(row.molecule) + " g=" + std::to_string(row.g) + " m=" +
                             std::to_string(row.m) + " omega_L=" + format_coord(row.omega_L) +
                             " n=" + std::to_string(row.n) + " printed " + std::string(row.printed) +
                             " computed " + format_sig6(e));
        }
    }
    std::string detail = std::to_string(total - static_cast<int>(misses.size())) + "/" + std::to_string(total) +
                         " match";
    for (auto const& m : misses) {
        detail += "; " + m;
    }
    return {total == 192 && misses.empty(), detail};
}

Outcome golden_observables_criterion()
{
    int total = 0;
    int bad = 0;
    std::string detail;
    for (auto const& row : golden_observables()) {
        WorkingUnits const u = working_units(molecule(row.molecule));
        QuantumNumbers const q{row.n, 1};
        FieldParams const f{row.omega_L, 1.0};
        double v = 0.0;
        switch (row.quantity) {
        case Quantity::r2: v = expectation_r2(q, u, f); break;
        case Quantity::p2: v = expectation_p2(q, u, f); break;
        case Quantity::T: v = expectation_T(q, u, f); break;
        case Quantity::V: v = expectation_V(q, u, f); break;
        case Quantity::chi: v = susceptibility(q, u, f); break;
        }
        ++total;
        if (!matches_printed(v, row.printed)) {
            ++bad;
            detail += "; " + std::string(quantity_name(row.quantity)) + " " + std::string(row.molecule) +
                      " n=" + std::to_string(row.n) + " printed " + std::string(row.printed) + " computed " +
                      format_sig6(v);
        }
    }
    return {total == 240 && bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " match" + detail};
}

Outcome identities_criterion()
{
    double sum_err = 0.0, kin_err = 0.0, parity_err = 0.0;
    for_lattice([&](MoleculeConstants const&, WorkingUnits const& u, QuantumNumbers const& q, FieldParams const& f) {
        double const e = energy(q, u, f);
        double const t = expectation_T(q, u, f);
        sum_err = std::max(sum_err, rel(t + expectation_V(q, u, f), e));
        kin_err = std::max(kin_err, rel(expectation_p2(q, u, f) / (2.0 * u.mu_eff), t));
        double const shift = e - energy({q.n, -q.m}, u, f);
        parity_err = std::max(parity_err, std::abs(shift - 2.0 * q.m * f.omega_L) / std::max(1.0, std::abs(e)));
    });
    bool const ok = sum_err <= 1e-9 && kin_err <= 1e-12 && parity_err <= 1e-12;
    return {ok, "E=T+V " + sci(sum_err) + " (<=1e-09), T=p2/2mu " + sci(kin_err) + " (<=1e-12), parity " +
                    sci(parity_err) + " (<=1e-12)"};
}

Outcome nu_core_criterion()
{
    double worst = 0.0;
    for_lattice([&](MoleculeConstants const&, WorkingUnits const& u, QuantumNumbers const& q, FieldParams const& f) {
        worst = std::max(worst, rel(solve_level(q, u, f), energy(q, u, f)));
    });
    return {worst <= 1e-10, "max rel " + sci(worst) + " (<=1e-10) over 192 points"};
}

Outcome wavefunction_criterion()
{
    double norm_err = 0.0, orth_err = 0.0, r2_err = 0.0;
    int node_misses = 0;
    for_lattice([&](MoleculeConstants const&, WorkingUnits const& u, QuantumNumbers const& q, FieldParams const& f) {
        RadialState const s = make_radial_state(q, u, f);
        norm_err = std::max(norm_err, std::abs(numeric_norm(s) - 1.0));
        r2_err = std::max(r2_err, rel(numeric_expectation_r2(s), expectation_r2(q, u, f)));
        node_misses += node_count(s) != q.n;
        for (int k = 0; k < q.n; ++k) {
            orth_err = std::max(orth_err, std::abs(numeric_overlap(s, make_radial_state({k, q.m}, u, f))));
        }
    });
    bool const ok = norm_err <= 1e-10 && orth_err <= 1e-9 && node_misses == 0 && r2_err <= 1e-8;
    return {ok, "norm " + sci(norm_err) + " (<=1e-10), overlap " + sci(orth_err) + " (<=1e-09), node misses " +
                    std::to_string(node_misses) + ", <r2> rel " + sci(r2_err) + " (<=1e-08)"};
}

Outcome fd_oracle_criterion()
{
    double energy_err = 0.0, edge_err = 0.0, r2_err = 0.0;
    double order_lo = 1e9, order_hi = -1e9;
    for (double Omega : {1.0, 2.0}) {
        WorkingUnits const u = dimensionless_stiffness(Omega);
        for (int m : {0, 1}) {
            for (double g : {0.0, 1.0}) {
                bool const edge = m == 0 && g == 0.0;
                for (int n = 0; n <= 3; ++n) {
                    OracleReport const rep = verify_energy({n, m}, u, {0.0, g}, 1e-6);
                    (edge ? edge_err : energy_err) = std::max(edge ? edge_err : energy_err, rep.rel_err);
                    r2_err = std::max(r2_err, rep.r2_rel_err);
                }
                ConvergenceStudy const c = fd_convergence({1, m}, u, {0.0, g});
                order_lo = std::min(order_lo, c.order);
                order_hi = std::max(order_hi, c.order);
            }
        }
    }
    bool const ok = energy_err <= 1e-6 && edge_err <= 1e-5 && r2_err <= 1e-5 && std::abs(order_lo - 2.0) <= 0.2 &&
                    std::abs(order_hi - 2.0) <= 0.2;
    char orders[64];
    std::snprintf(orders, sizeof orders, "order %.3f..%.3f (2.0+-0.2)", order_lo, order_hi);
    return {ok, "E rel " + sci(energy_err) + " (<=1e-06), m=g=0 E rel " + sci(edge_err) + " (<=1e-05), <r2> rel " +
                    sci(r2_err) + " (<=1e-05), " + orders};
}

double fit_slope(std::vector<double> const& x, std::vector<double> const& y)
{
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]) / x.size();
        my += std::log(y[i]) / y.size();
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return num / den;
}

Outcome hft_criterion()
{
    double worst = 0.0;
    double order_lo = 1e9, order_hi = -1e9;
    for (auto const& mol : molecules) {
        WorkingUnits const u = working_units(mol);
        for (int n = 0; n <= 3; ++n) {
            for (double w : {0.0, 5.0, 10.0}) {
                worst = std::max(worst, hft_check({n, 1}, u, {w, 1.0}, 1e-6 * u.omega_eff).rel_err);
            }
            // At omega_L = 0 the energy is linear in omega and the difference is exact,
            // so the step order is only observable with a field present.
            for (double w : {5.0, 10.0}) {
                std::vector<double> hs, errs;
                for (double frac : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
                    hs.push_back(frac * u.omega_eff);
                    errs.push_back(hft_check({n, 1}, u, {w, 1.0}, frac * u.omega_eff).rel_err);
                }
                double const s = fit_slope(hs, errs);
                order_lo = std::min(order_lo, s);
                order_hi = std::max(order_hi, s);
            }
        }
    }
    bool const ok = worst <= 1e-6 && std::abs(order_lo - 2.0) <= 0.2 && std::abs(order_hi - 2.0) <= 0.2;
    char orders[64];
    std::snprintf(orders, sizeof orders, "step order %.3f..%.3f", order_lo, order_hi);
    return {ok, "rel " + sci(worst) + " (<=1e-06) at h=1e-6 omega, " + orders};
}

// (molecule, n) -> values along the omega_L sweep, read back from the figure CSV.
using Series = std::map<std::pair<std::string, int>, std::vector<double>>;

Series figure_data(std::string const& quantity)
{
    std::ostringstream out;
    write_figure(RunConfig{}, quantity, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line); // header
    Series s;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string name, n, w, v;
        std::getline(fields, name, ',');
        std::getline(fields, n, ',');
        std::getline(fields, w, ',');
        std::getline(fields, v, ',');
        s[{name, std::stoi(n)}].push_back(std::stod(v));
    }
    return s;
}

Outcome qualitative_criterion()
{
    std::vector<std::string> broken;
    for (std::string const q : {"r2", "p2", "T", "chi"}) {
        for (auto const& [key, values] : figure_data(q)) {
            for (std::size_t i = 1; i < values.size(); ++i) {
                if (!(std::abs(values[i]) < std::abs(values[i - 1]))) {
                    broken.push_back("|" + q + "| not decreasing for " + key.first + " n=" + std::to_string(key.second));
                    break;
                }
            }
        }
    }
    auto gap = [](Series const& s, std::string const& mol, std::size_t i) {
        return std::abs(s.at({mol, 3})[i] - s.at({mol, 0})[i]);
    };
    Series const V = figure_data("V");
    Series const chi = figure_data("chi");
    Series const T = figure_data("T");
    double chi_ratio = 0.0;
    for (auto const& mol : molecules) {
        std::size_t const last = V.at({mol.name, 0}).size() - 1;
        for (std::size_t i = 1; i <= last; ++i) {
            if (!(gap(V, mol.name, i) > gap(V, mol.name, i - 1))) {
                broken.push_back("V gap not widening for " + mol.name);
                break;
            }
        }
        if (!(gap(chi, mol.name, last) < gap(chi, mol.name, 0))) {
            broken.push_back("chi gap not shrinking for " + mol.name);
        }
        if (!(gap(T, mol.name, last) < gap(T, mol.name, 0))) {
            broken.push_back("T gap not shrinking for " + mol.name);
        }
        chi_ratio = std::max(chi_ratio, gap(chi, mol.name, last) / gap(chi, mol.name, 0));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "largest chi gap ratio omega_L=12 vs 0: %.4f", chi_ratio);
    std::string detail = buf;
    for (auto const& b : broken) {
        detail += "; " + b;
    }
    return {broken.empty(), detail};
}

} // namespace

int main()
{
    std::vector<Criterion> const criteria = {
        {1, "golden energies", 1.0, golden_energies_criterion},
        {2, "golden observables", 1.0, golden_observables_criterion},
        {3, "closed-form identities", 0.0, identities_criterion},
        {4, "NU root vs closed form", 5.0, nu_core_criterion},
        {5, "wavefunction suite", 10.0, wavefunction_criterion},
        {6, "finite-difference oracle", 30.0, fd_oracle_criterion},
        {7, "Hellmann-Feynman self-check", 0.0, hft_criterion},
        {8, "qualitative omega_L trends", 0.0, qualitative_criterion},
    };
    int failed = 0;
    for (auto const& c : criteria) {
        auto const start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (std::exception const& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool const in_time = c.time_limit_s == 0.0 || secs < c.time_limit_s;
        bool const pass = out.passed && in_time;
        failed += !pass;
        char timing[64];
        if (c.time_limit_s > 0.0) {
            std::snprintf(timing, sizeof timing, "%.3fs (<%gs)", secs, c.time_limit_s);
        } else {
            std::snprintf(timing, sizeof timing, "%.3fs", secs);
        }
        std::printf("ACCEPTANCE %d %s: %s  [%s]  %s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), timing,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
