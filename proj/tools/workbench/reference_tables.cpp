#include "reference_tables.hpp"

#include <array>

#include "envbounds/errors.hpp"

namespace envbounds::workbench {

namespace {

// Values copied digit for digit from the published tables (digit-group spaces removed).
constexpr std::array<PNumberReferenceRow, 5> kTable1{{
    {2, {"0.6482831016477214"}, {"0.1766276965309679"}},
    {3, {"0.7522132877297533"}, {"0.1811531980432237"}},
    {4, {"0.8306928794474723"}, {"0.2267377863490461"}},
    {5, {"0.8927469751677408"}, {"0.3215761813712828"}},
    {6, {"0.9434071878408251"}, {"0.4970386601133180"}},
}};

constexpr std::array<AnharmonicReferenceRow, 11> kTable2{{
    {"0.001", {"1.00075"}, {"1.00062"}, {"1.00075"}, {"1.00079"}, {"1.00071"}},
    {"0.01", {"1.00737"}, {"1.00614"}, {"1.00739"}, {"1.00783"}, {"1.00697"}},
    {"0.1", {"1.06529"}, {"1.05585"}, {"1.06620"}, {"1.07005"}, {"1.06275"}},
    {"0.2", {"1.11829"}, {"1.10288"}, {"1.12062"}, {"1.12702"}, {"1.11473"}},
    {"1.0", {"1.39235"}, {"1.35510"}, {"1.40332"}, {"1.41155"}, {"1.38754"}},
    {"4.0", {"1.90314"}, {"1.83699"}, {"1.92881"}, {"1.91489"}, {"1.89895"}},
    {"10.0", {"2.44917"}, {"2.35648"}, {"2.48862"}, {"2.45005"}, {"2.44575"}},
    {"50.0", {"4.00399"}, {"3.841639"}, {"4.078522"}, {"3.99621"}, {"4.00182"}},
    {"100.0", {"4.99942"}, {"4.79395"}, {"5.09516"}, {"4.99161"}, {"4.99766"}},
    {"1000.0", {"10.63979"}, {"10.19449"}, {"10.85151"}, {"10.63521"}, {"10.63896"}},
    {"2000.0", {"13.38844"}, {"12.82706"}, {"13.65591"}, {"13.38474"}, {"13.38778"}},
}};

constexpr std::array<AnharmonicReferenceRow, 11> kTable3{{
    {"0.001", {"1.00185"}, {"1.000932"}, {"1.001859"}, {"1.00143"}, {"1.00144"}},
    {"0.01", {"1.01674"}, {"1.008994"}, {"1.017387"}, {"1.01374"}, {"1.01366"}},
    {"0.1", {"1.10908"}, {"1.070681"}, {"1.119935"}, {"1.10565"}, {"1.09920"}},
    {"0.2", {"1.17389"}, {"1.119782"}, {"1.192805"}, {"1.17513"}, {"1.16261"}},
    {"1.0",
     {"1.43653", true,
      "printed value looks digit-transposed; shooting and finite-difference solvers both give 1.435625"},
     {"1.334560"}, {"1.484050"}, {"1.44870"}, {"1.42400"}},
    {"4.0", {"1.83044"}, {"1.675050"}, {"1.916177"}, {"1.83193"}, {"1.82058"}},
    {"10.0", {"2.20572"}, {"2.004582"}, {"2.322916"}, {"2.19235"}, {"2.19734"}},
    {"50.0", {"3.15902"}, {"2.850163"}, {"3.348809"}, {"3.13471"}, {"3.15304"}},
    {"100.0", {"3.71698"}, {"3.347427"}, {"3.946987"}, {"3.69348"}, {"3.71187"}},
    {"1000.0", {"6.49235"}, {"5.828630"}, {"6.914382"}, {"6.47694"}, {"6.48941"}},
    {"2000.0", {"7.70174"}, {"6.911387"}, {"8.205757"}, {"7.68861"}, {"7.69925"}},
}};

}  // namespace

std::span<const PNumberReferenceRow> reference_table_1() { return kTable1; }

std::span<const AnharmonicReferenceRow> reference_anharmonic_table(int table) {
    switch (table) {
        case 2: return kTable2;
        case 3: return kTable3;
        default: throw DomainError("no anharmonic reference table " + std::to_string(table));
    }
}

int anharmonic_table_exponent_m(int table) {
    switch (table) {
        case 2: return 2;
        case 3: return 3;
        default: throw DomainError("no anharmonic reference table " + std::to_string(table));
    }
}

}  // namespace envbounds::workbench
