// Command-line front end: spectrum, observables, figures, verify.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nuosc/app/commands.hpp"
#include "nuosc/app/config.hpp"
#include "nuosc/errors.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

// Raw flag values; merged over the config file so flags win.
struct Flags
{
    std::optional<std::string> config;
    std::optional<std::string> molecules;
    std::optional<std::string> out;
    std::optional<std::string> units;
    std::optional<std::string> n, m, g, omega_l;
    std::optional<double> z, e;
    std::vector<std::string> tol;
};

void add_common(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--config", f.config, "JSON config file (flags override it)");
    cmd->add_option("--molecules", f.molecules, "molecule constants file (name,omega_1e13_s,mass_amu)");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_option("--units", f.units, "paper | dimensionless");
    cmd->add_option("--n", f.n, "vibrational levels, comma-separated");
    cmd->add_option("--m", f.m, "magnetic quantum numbers, comma-separated");
    cmd->add_option("--g", f.g, "inverse-quadratic strengths, comma-separated");
    cmd->add_option("--omega-l", f.omega_l, "Larmor frequencies, comma-separated");
    cmd->add_option("--z", f.z, "atomic number in chi and mu_B");
    cmd->add_option("--e", f.e, "electronic charge in chi and mu_B");
    cmd->add_option("--tol", f.tol, "tolerance override name=value (repeatable)");
}

nuosc::app::RunConfig build_config(Flags const& f)
{
    using namespace nuosc::app;
    RunConfig cfg;
    if (f.config) {
        apply_config_file(cfg, *f.config);
    }
    if (f.molecules) {
        cfg.molecules_path = *f.molecules;
    }
    if (f.out) {
        cfg.out_dir = *f.out;
    }
    if (f.units) {
        cfg.units = parse_units(*f.units);
    }
    if (f.n) {
        cfg.lattice.n = parse_int_list(*f.n, "--n");
    }
    if (f.m) {
        cfg.lattice.m = parse_int_list(*f.m, "--m");
    }
    if (f.g) {
        cfg.lattice.g = parse_real_list(*f.g, "--g");
    }
    if (f.omega_l) {
        cfg.lattice.omega_L = parse_real_list(*f.omega_l, "--omega-l");
    }
    if (f.z) {
        cfg.constants.z = *f.z;
    }
    if (f.e) {
        cfg.constants.e = *f.e;
    }
    for (auto const& item : f.tol) {
        auto const eq = item.find('=');
        if (eq == std::string::npos) {
            throw nuosc::ConfigError("--tol: expected name=value, got '" + item + "'");
        }
        double value = 0.0;
        try {
            value = std::stod(item.substr(eq + 1));
        } catch (std::exception const&) {
            throw nuosc::ConfigError("--tol: invalid value in '" + item + "'");
        }
        cfg.tolerances.set(item.substr(0, eq), value);
    }
    validate(cfg);
    return cfg;
}

// Writes to <out>/<name> when an output directory is configured, stdout otherwise.
template <typename Writer>
void emit(nuosc::app::RunConfig const& cfg, std::string const& name, Writer&& write)
{
    if (!cfg.out_dir) {
        write(std::cout);
        return;
    }
    std::filesystem::path const dir(*cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw nuosc::IOError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) {
        throw nuosc::IOError("cannot write " + (dir / name).string());
    }
    write(out);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Closed-form spectra and observables for the oscillator plus inverse-quadratic potential in a "
                 "magnetic field"};
    app.require_subcommand(1);

    Flags flags;
    auto* spectrum = app.add_subcommand("spectrum", "energy lattice as CSV");
    auto* observables = app.add_subcommand("observables", "<r2>, <p2>, <T>, <V>, chi, mu_B lattice as CSV");
    auto* figures = app.add_subcommand("figures", "omega_L sweeps at g = m = 1, one CSV per quantity");
    auto* verify = app.add_subcommand("verify", "golden tables, identities, quadrature and FD oracle checks");
    for (auto* cmd : {spectrum, observables, figures, verify}) {
        add_common(cmd, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        auto const cfg = build_config(flags);
        if (spectrum->parsed()) {
            emit(cfg, "spectrum.csv", [&](std::ostream& out) { nuosc::app::write_spectrum(cfg, out); });
        } else if (observables->parsed()) {
            emit(cfg, "observables.csv", [&](std::ostream& out) { nuosc::app::write_observables(cfg, out); });
        } else if (figures->parsed()) {
            for (auto const& path : nuosc::app::write_figures(cfg, cfg.out_dir.value_or("."))) {
                std::cerr << "wrote " << path.string() << '\n';
            }
        } else if (verify->parsed()) {
            auto const report = nuosc::app::run_verify(cfg);
            nuosc::app::print_report(report, std::cout);
            if (cfg.out_dir) {
                emit(cfg, "verify_report.txt", [&](std::ostream& out) { nuosc::app::print_report(report, out); });
            }
            return report.failures() == 0 ? exit_ok : exit_verify_failed;
        }
    } catch (nuosc::ConfigError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (nuosc::IOError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (nuosc::Error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verify_failed;
    }
    return exit_ok;
}
