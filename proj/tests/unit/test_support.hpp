#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "nuosc/model.hpp"

namespace nuosc::testing {

inline MoleculeConstants const CO{"CO", 6.471, 6.8606719};
inline MoleculeConstants const HCl{"HCl", 8.814, 0.9801045};
inline MoleculeConstants const I2{"I2", 0.642, 63.45223502};
inline MoleculeConstants const H2{"H2", 12.960, 0.50391};

inline MoleculeConstants const all_molecules[] = {CO, HCl, I2, H2};

/// Rounds to `digits` significant figures the way the golden tables do.
inline std::string sig(double v, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return buf;
}

inline bool same_sig(double computed, double printed, int digits = 6)
{
    return sig(computed, digits) == sig(printed, digits);
}

inline double rel_err(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

} // namespace nuosc::testing
