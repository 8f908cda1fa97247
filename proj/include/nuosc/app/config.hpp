#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nuosc/model.hpp"
#include "nuosc/observables.hpp"

namespace nuosc::app {

struct Lattice
{
    std::vector<int> n{0, 1, 2, 3};
    std::vector<int> m{0, 1};
    std::vector<double> g{0.0, 1.0};
    std::vector<double> omega_L{0.0, 5.0, 10.0};
};

/// Thresholds used by `verify`. Names double as keys for overrides.
struct Tolerances
{
    double identity_rel = 1e-9;     ///< E = <T> + <V>
    double kinetic_rel = 1e-12;     ///< <T> = <p^2> / 2 mu
    double parity_abs = 1e-12;      ///< E(m) - E(-m) = 2 m omega_L, scaled by max(1, |E|)
    double nu_rel = 1e-10;          ///< root of the energy condition vs closed form
    double norm_abs = 1e-10;        ///< quadrature normalization
    double orthogonality_abs = 1e-9;
    double quadrature_r2_rel = 1e-8;
    double fd_energy_rel = 1e-6;
    double fd_energy_edge_rel = 1e-5; ///< m = g = 0
    double fd_r2_rel = 1e-5;
    double hft_rel = 1e-6;

    /// Sets a tolerance by key; throws ConfigError on an unknown key.
    void set(std::string const& key, double value);
    [[nodiscard]] std::map<std::string, double> as_map() const;
};

struct RunConfig
{
    std::optional<std::string> molecules_path;
    std::optional<std::string> out_dir;
    UnitsMode units = UnitsMode::paper;
    Lattice lattice;
    SusceptibilityConstants constants;
    Tolerances tolerances;
};

/// Throws ConfigError when a lattice list is empty or holds an invalid value.
void validate(RunConfig const& cfg);

/// Applies a JSON config file on top of `cfg`. Recognized keys: molecules,
/// out, units, n, m, g, omega_l, z, e, tolerances.
void apply_config_file(RunConfig& cfg, std::string const& path);

/// Molecules from the configured file, or the built-in table when none is set.
std::vector<MoleculeConstants> resolve_molecules(RunConfig const& cfg);

UnitsMode parse_units(std::string const& text);

/// Comma-separated list parsing for lattice flags; errors name the flag.
std::vector<int> parse_int_list(std::string const& text, std::string const& flag);
std::vector<double> parse_real_list(std::string const& text, std::string const& flag);

} // namespace nuosc::app
