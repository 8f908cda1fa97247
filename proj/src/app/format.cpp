#include "nuosc/app/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "nuosc/errors.hpp"

namespace nuosc::app {

namespace {

std::string sprintf_double(char const* fmt, int precision, double v)
{
    char buf[64];
    int const len = std::snprintf(buf, sizeof buf, fmt, precision, v);
    return std::string(buf, static_cast<std::size_t>(len));
}

// %e rounds the exact binary value under the default (round-half-even) mode.
std::string round_sig(double v, int digits)
{
    return sprintf_double("%.*e", digits - 1, v);
}

int decimal_exponent(std::string const& sci)
{
    return std::atoi(sci.c_str() + sci.find('e') + 1);
}

} // namespace

std::string format_sig6(double v)
{
    if (v == 0.0) {
        return "0";
    }
    std::string const sci = round_sig(v, 6);
    int const exponent = decimal_exponent(sci);
    if (exponent >= 5 || exponent < -3) {
        return sci;
    }
    return sprintf_double("%.*f", 5 - exponent, v);
}

std::string format_coord(double v)
{
    if (v == 0.0) {
        return "0";
    }
    return sprintf_double("%.*g", 15, v);
}

int printed_precision(std::string_view printed)
{
    std::string_view mantissa = printed.substr(0, printed.find_first_of("eE"));
    std::size_t const dot = mantissa.find('.');
    if (dot != std::string_view::npos) {
        while (mantissa.size() > dot + 1 && mantissa.back() == '0') {
            mantissa.remove_suffix(1);
        }
    }
    int digits = 0;
    bool leading = true;
    for (char ch : mantissa) {
        if (ch < '0' || ch > '9') {
            continue;
        }
        if (leading && ch == '0') {
            continue;
        }
        leading = false;
        ++digits;
    }
    return std::max(digits, 1);
}

bool matches_printed(double computed, std::string_view printed)
{
    int const digits = std::min(printed_precision(printed), 6);
    std::string const text(printed);
    char* end = nullptr;
    double const table = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) {
        throw ConfigError("unparseable table value '" + text + "'");
    }
    return round_sig(computed, digits) == round_sig(table, digits);
}

} // namespace nuosc::app
