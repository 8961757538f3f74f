#pragma once

#include <string>

namespace envbounds::workbench {

/// Value rounded to 10 significant digits; JSON prints it in shortest form.
double sig10(double v);
std::string sig10_string(double v);
std::string fixed_decimals(double v, int decimals);

}  // namespace envbounds::workbench
