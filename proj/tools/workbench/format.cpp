#include "format.hpp"

#include <cstdio>
#include <cstdlib>

namespace envbounds::workbench {

std::string sig10_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double sig10(double v) { return std::strtod(sig10_string(v).c_str(), nullptr); }

std::string fixed_decimals(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace envbounds::workbench
