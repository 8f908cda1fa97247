#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nuosc/app/config.hpp"

namespace nuosc::app {

/// `molecule,g,m,omega_L,n,E`, one row per lattice point, sorted by that tuple.
void write_spectrum(RunConfig const& cfg, std::ostream& out);

/// `molecule,g,m,omega_L,n,r2,p2,T,V,chi,mu_B`, same ordering.
void write_observables(RunConfig const& cfg, std::ostream& out);

/// One omega_L sweep per plotted quantity at g = m = 1.
struct FigureSeries
{
    std::string quantity; ///< r2, p2, T, V or chi
    std::string file_name;
};

std::vector<FigureSeries> figure_series();

inline constexpr double figure_omega_max = 12.0;
inline constexpr int figure_steps = 240; ///< step 0.05

/// Sweep abscissae 0, 0.05, ..., 12.
std::vector<double> figure_omegas();

/// `molecule,n,omega_L,value` for one quantity.
void write_figure(RunConfig const& cfg, std::string const& quantity, std::ostream& out);

/// Writes every figure CSV into `dir`, returning the paths written.
std::vector<std::filesystem::path> write_figures(RunConfig const& cfg, std::filesystem::path const& dir);

struct CheckResult
{
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport
{
    std::vector<CheckResult> checks;

    [[nodiscard]] int failures() const;
};

VerifyReport run_verify(RunConfig const& cfg);

void print_report(VerifyReport const& report, std::ostream& out);

} // namespace nuosc::app
