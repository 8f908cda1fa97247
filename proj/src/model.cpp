#include "nuosc/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "nuosc/errors.hpp"

namespace nuosc {

void validate(MoleculeConstants const& mol)
{
    if (mol.name.empty()) {
        throw DomainError("molecule name must be non-empty");
    }
    if (!(mol.omega > 0.0) || !std::isfinite(mol.omega)) {
        throw DomainError("molecule " + mol.name + ": omega must be positive");
    }
    if (!(mol.mass > 0.0) || !std::isfinite(mol.mass)) {
        throw DomainError("molecule " + mol.name + ": mass must be positive");
    }
}

void validate(FieldParams const& f)
{
    if (!(f.omega_L >= 0.0) || !std::isfinite(f.omega_L)) {
        throw DomainError("omega_L must be finite and >= 0");
    }
    if (!(f.g >= 0.0) || !std::isfinite(f.g)) {
        throw DomainError("g must be finite and >= 0");
    }
}

WorkingUnits working_units(MoleculeConstants const& mol)
{
    return working_units(mol, UnitsMode::paper);
}

WorkingUnits working_units(MoleculeConstants const& mol, UnitsMode mode)
{
    validate(mol);
    if (mode == UnitsMode::dimensionless) {
        return dimensionless_units(mol.mass, mol.omega);
    }
    return WorkingUnits{mol.mass * amu_in_kg, mol.omega * omega_unit, UnitsMode::paper};
}

WorkingUnits dimensionless_units(double mu, double omega)
{
    if (!(mu > 0.0) || !(omega >= 0.0)) {
        throw DomainError("dimensionless_units: need mu > 0 and omega >= 0");
    }
    return WorkingUnits{mu, omega, UnitsMode::dimensionless};
}

WorkingUnits dimensionless_stiffness(double Omega)
{
    return dimensionless_units(1.0, Omega);
}

double confinement_frequency(WorkingUnits const& u, FieldParams const& f)
{
    return std::sqrt(f.omega_L * f.omega_L + u.stiffness());
}

double effective_potential(double r, WorkingUnits const& u, FieldParams const& f, int m)
{
    if (!(r > 0.0)) {
        throw DomainError("effective_potential: r must be positive");
    }
    double const mm = m;
    double const inverse_square = 0.5 * (mm * mm - 0.25) + f.g;
    double const stiffness = f.omega_L * f.omega_L + u.stiffness();
    return mm * f.omega_L + inverse_square / (r * r) + 0.5 * stiffness * r * r;
}

NUCoefficients to_nu_coefficients(WorkingUnits const& u, FieldParams const& f, int m, double E)
{
    double const mm = m;
    NUCoefficients c;
    c.beta1 = 0.5;
    c.beta2 = 0.0;
    c.beta3 = 0.0;
    // Radial equation in z = r^2: R'' + R'/(2z) + (-a z^2 + b z - c)/z^2 R = 0
    // with (a, b, c) landing on (rho2, rho1, rho0).
    c.rho2 = 0.25 * (f.omega_L * f.omega_L + u.stiffness());
    c.rho1 = 0.5 * (E - mm * f.omega_L);
    c.rho0 = 0.25 * (mm * mm + 2.0 * f.g - 0.25);
    return c;
}

double solve_level(QuantumNumbers const& q, WorkingUnits const& u, FieldParams const& f)
{
    if (q.n < 0) {
        throw DomainError("solve_level: n must be non-negative");
    }
    CoefficientMap const coeffs = [&](double e) { return to_nu_coefficients(u, f, q.m, e); };
    double const lo = q.m * f.omega_L - 1.0;
    double width = std::max(1.0, std::abs(lo));
    int doublings = 0;
    while (energy_residual(q.n, coeffs(lo + width)) >= 0.0) {
        width *= 2.0;
        if (++doublings > 200) {
            throw NoSignChange("solve_level: no sign change found above E = " + std::to_string(lo));
        }
    }
    double const hi = lo + width;
    return solve_energy(q.n, coeffs, {lo, hi}, 1e-12 * std::max(1.0, std::abs(hi)));
}

std::vector<MoleculeConstants> builtin_molecules()
{
    return {
        {"CO", 6.471, 6.8606719},
        {"HCl", 8.814, 0.9801045},
        {"I2", 0.642, 63.45223502},
        {"H2", 12.960, 0.50391},
    };
}

namespace {

std::string_view trim(std::string_view s, std::size_t& lead)
{
    lead = 0;
    while (lead < s.size() && (s[lead] == ' ' || s[lead] == '\t')) {
        ++lead;
    }
    std::size_t end = s.size();
    while (end > lead && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) {
        --end;
    }
    return s.substr(lead, end - lead);
}

[[noreturn]] void fail(std::string const& source, std::size_t line, std::size_t col, std::string const& what)
{
    throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

double parse_positive(std::string_view field, std::string const& source, std::size_t line, std::size_t col,
                      char const* column_name)
{
    double value = 0.0;
    auto const* first = field.data();
    auto const* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last) {
        fail(source, line, col, std::string("invalid number for ") + column_name + ": '" + std::string(field) + "'");
    }
    if (!std::isfinite(value) || !(value > 0.0)) {
        fail(source, line, col, std::string(column_name) + " must be positive");
    }
    return value;
}

} // namespace

std::vector<MoleculeConstants> parse_molecules(std::istream& in, std::string const& source)
{
    std::vector<MoleculeConstants> out;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_header = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t lead = 0;
        std::string_view const line = trim(raw, lead);
        if (line.empty()) {
            continue;
        }
        if (!seen_header) {
            if (line != molecules_header) {
                fail(source, line_no, lead + 1, "expected header '" + std::string(molecules_header) + "'");
            }
            seen_header = true;
            continue;
        }

        std::vector<std::pair<std::string_view, std::size_t>> fields; // (text, 1-based column)
        std::size_t start = 0;
        while (true) {
            std::size_t const comma = raw.find(',', start);
            std::string_view const piece =
                std::string_view(raw).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t flead = 0;
            std::string_view const t = trim(piece, flead);
            fields.emplace_back(t, start + flead + 1);
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() != 3) {
            fail(source, line_no, lead + 1, "expected 3 fields, found " + std::to_string(fields.size()));
        }
        if (fields[0].first.empty()) {
            fail(source, line_no, fields[0].second, "empty molecule name");
        }
        MoleculeConstants mol;
        mol.name = std::string(fields[0].first);
        mol.omega = parse_positive(fields[1].first, source, line_no, fields[1].second, "omega_1e13_s");
        mol.mass = parse_positive(fields[2].first, source, line_no, fields[2].second, "mass_amu");
        out.push_back(std::move(mol));
    }
    if (!seen_header) {
        fail(source, line_no + 1, 1, "missing header '" + std::string(molecules_header) + "'");
    }
    if (out.empty()) {
        fail(source, line_no + 1, 1, "no molecule rows");
    }
    return out;
}

std::vector<MoleculeConstants> load_molecules(std::string const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IOError("cannot open molecule constants file: " + path);
    }
    return parse_molecules(in, path);
}

} // namespace nuosc
