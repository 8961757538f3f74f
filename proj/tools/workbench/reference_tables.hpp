#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace envbounds::workbench {

/// A published value, kept as the exact printed string.
struct ReferenceCell {
    std::string_view printed;
    /// Set for cells that independent solvers agree are misprinted.
    bool known_unreproducible = false;
    std::string_view note = {};
};

/// P_{10}^{(1)}(2m) and β = P^{2m} for m = 2..6.
struct PNumberReferenceRow {
    int m;
    ReferenceCell P;
    ReferenceCell beta;
};

/// Ground state of -d²/dx² + x² + λ x^{2m}: exact energy, Gamma-P lower and
/// upper bounds, the Bhattacharya formula and the mixed-P lower bound.
struct AnharmonicReferenceRow {
    std::string_view lambda;
    ReferenceCell exact;
    ReferenceCell lower;
    ReferenceCell upper;
    ReferenceCell e_b;
    ReferenceCell e_l;
};

std::span<const PNumberReferenceRow> reference_table_1();
/// Quartic (m = 2) for table 2, sextic (m = 3) for table 3.
std::span<const AnharmonicReferenceRow> reference_anharmonic_table(int table);
int anharmonic_table_exponent_m(int table);

}  // namespace envbounds::workbench
