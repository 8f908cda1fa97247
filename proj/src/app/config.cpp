#include "nuosc/app/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nuosc/errors.hpp"

namespace nuosc::app {

namespace {

struct ToleranceField
{
    char const* key;
    double Tolerances::*member;
};

constexpr ToleranceField tolerance_fields[] = {
    {"identity_rel", &Tolerances::identity_rel},
    {"kinetic_rel", &Tolerances::kinetic_rel},
    {"parity_abs", &Tolerances::parity_abs},
    {"nu_rel", &Tolerances::nu_rel},
    {"norm_abs", &Tolerances::norm_abs},
    {"orthogonality_abs", &Tolerances::orthogonality_abs},
    {"quadrature_r2_rel", &Tolerances::quadrature_r2_rel},
    {"fd_energy_rel", &Tolerances::fd_energy_rel},
    {"fd_energy_edge_rel", &Tolerances::fd_energy_edge_rel},
    {"fd_r2_rel", &Tolerances::fd_r2_rel},
    {"hft_rel", &Tolerances::hft_rel},
};

std::vector<std::string> split_commas(std::string const& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto const b = item.find_first_not_of(" \t");
        auto const e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    if (!text.empty() && text.back() == ',') {
        out.emplace_back();
    }
    return out;
}

} // namespace

void Tolerances::set(std::string const& key, double value)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError("tolerance '" + key + "' must be positive");
    }
    for (auto const& field : tolerance_fields) {
        if (key == field.key) {
            this->*field.member = value;
            return;
        }
    }
    throw ConfigError("unknown tolerance '" + key + "'");
}

std::map<std::string, double> Tolerances::as_map() const
{
    std::map<std::string, double> out;
    for (auto const& field : tolerance_fields) {
        out[field.key] = this->*field.member;
    }
    return out;
}

void validate(RunConfig const& cfg)
{
    auto const& lat = cfg.lattice;
    if (lat.n.empty() || lat.m.empty() || lat.g.empty() || lat.omega_L.empty()) {
        throw ConfigError("lattice lists must be non-empty");
    }
    for (int n : lat.n) {
        if (n < 0) {
            throw ConfigError("--n: values must be >= 0, got " + std::to_string(n));
        }
    }
    for (double g : lat.g) {
        if (!(g >= 0.0) || !std::isfinite(g)) {
            throw ConfigError("--g: values must be finite and >= 0");
        }
    }
    for (double w : lat.omega_L) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw ConfigError("--omega-l: values must be finite and >= 0");
        }
    }
    if (!(cfg.constants.z > 0.0) || !(cfg.constants.e > 0.0)) {
        throw ConfigError("--z and --e must be positive");
    }
}

UnitsMode parse_units(std::string const& text)
{
    if (text == "paper") {
        return UnitsMode::paper;
    }
    if (text == "dimensionless") {
        return UnitsMode::dimensionless;
    }
    throw ConfigError("--units: expected 'paper' or 'dimensionless', got '" + text + "'");
}

std::vector<int> parse_int_list(std::string const& text, std::string const& flag)
{
    std::vector<int> out;
    for (auto const& item : split_commas(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw ConfigError(flag + ": invalid integer '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ConfigError(flag + ": empty list");
    }
    return out;
}

std::vector<double> parse_real_list(std::string const& text, std::string const& flag)
{
    std::vector<double> out;
    for (auto const& item : split_commas(text)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw ConfigError(flag + ": invalid number '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ConfigError(flag + ": empty list");
    }
    return out;
}

void apply_config_file(RunConfig& cfg, std::string const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IOError("cannot open config file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (nlohmann::json::parse_error const& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError(path + ": top level must be an object");
    }
    try {
        for (auto const& [key, value] : j.items()) {
            if (key == "molecules") {
                cfg.molecules_path = value.get<std::string>();
            } else if (key == "out") {
                cfg.out_dir = value.get<std::string>();
            } else if (key == "units") {
                cfg.units = parse_units(value.get<std::string>());
            } else if (key == "n") {
                cfg.lattice.n = value.get<std::vector<int>>();
            } else if (key == "m") {
                cfg.lattice.m = value.get<std::vector<int>>();
            } else if (key == "g") {
                cfg.lattice.g = value.get<std::vector<double>>();
            } else if (key == "omega_l") {
                cfg.lattice.omega_L = value.get<std::vector<double>>();
            } else if (key == "z") {
                cfg.constants.z = value.get<double>();
            } else if (key == "e") {
                cfg.constants.e = value.get<double>();
            } else if (key == "tolerances") {
                for (auto const& [tk, tv] : value.items()) {
                    cfg.tolerances.set(tk, tv.get<double>());
                }
            } else {
                throw ConfigError(path + ": unknown key '" + key + "'");
            }
        }
    } catch (nlohmann::json::type_error const& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::vector<MoleculeConstants> resolve_molecules(RunConfig const& cfg)
{
    if (cfg.molecules_path) {
        auto mols = load_molecules(*cfg.molecules_path);
        if (mols.empty()) {
            throw ConfigError(*cfg.molecules_path + ": no molecules listed");
        }
        return mols;
    }
    return builtin_molecules();
}

} // namespace nuosc::app
