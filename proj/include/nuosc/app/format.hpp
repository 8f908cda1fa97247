#pragma once

#include <string>
#include <string_view>

namespace nuosc::app {

/// Six significant digits, round-half-even, trailing zeros kept. Scientific
/// notation (e.g. -3.87265e+31) when |v| >= 1e5 or |v| < 1e-3, fixed
/// otherwise (6.90572, 102.675, 0.395622). Zero prints as "0".
std::string format_sig6(double v);

/// Shortest form that round-trips at 15 digits; used for lattice coordinates.
std::string format_coord(double v);

/// Significant digits carried by a printed table value. Trailing zeros in
/// the fractional part of the mantissa are column padding and do not count.
int printed_precision(std::string_view printed);

/// True when `computed`, rounded half-even to the printed precision (at
/// most six digits), equals the printed value at that precision.
bool matches_printed(double computed, std::string_view printed);

} // namespace nuosc::app
