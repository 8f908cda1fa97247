#pragma once

#include <span>
#include <string_view>

namespace nuosc::app {

/// One printed energy from the reference spectrum tables.
struct GoldenEnergy
{
    std::string_view molecule;
    int g;
    int m;
    double omega_L;
    int n;
    std::string_view printed;
};

enum class Quantity
{
    r2,
    p2,
    T,
    V,
    chi
};

std::string_view quantity_name(Quantity q);

/// One printed expectation value or susceptibility (g = m = 1, z = e = 1).
struct GoldenObservable
{
    Quantity quantity;
    std::string_view molecule;
    int n;
    double omega_L;
    std::string_view printed;
};

std::span<GoldenEnergy const> golden_energies();
std::span<GoldenObservable const> golden_observables();

} // namespace nuosc::app
