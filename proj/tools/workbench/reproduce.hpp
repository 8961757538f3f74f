#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envbounds/pnumbers.hpp"
#include "envbounds/radial_solver.hpp"
#include "reference_tables.hpp"

namespace envbounds::workbench {

enum class CellStatus { ok, fail, flagged };

struct CellResult {
    std::string column;
    double computed = 0.0;
    ReferenceCell reference;
    double reference_value = 0.0;
    /// |computed - reference|, relative for table 1.
    double deviation = 0.0;
    CellStatus status = CellStatus::ok;
};

struct RowResult {
    /// Printed row label (m or λ).
    std::string label;
    std::vector<CellResult> cells;
};

struct TableResult {
    int table = 0;
    std::string key_column;
    std::vector<std::string> columns;
    std::vector<RowResult> rows;
    double tolerance = 0.0;
    bool relative = false;

    int count(CellStatus s) const;
    bool passed() const { return count(CellStatus::fail) == 0; }
};

/// Default cell tolerance: 1e-5 relative for table 1, 2e-4 absolute otherwise.
double default_tolerance(int table);

TableResult reproduce_table(int table, const SolverConfig& cfg, PCache* cache, std::optional<double> tol = {});

/// Computed table, header row first, numbers printed to the reference precision.
std::string render_csv(const TableResult& t);
/// Computed table plus per-cell comparison.
std::string render_json(const TableResult& t);
/// One line per non-ok cell and a summary line.
std::string render_diff(const TableResult& t);

}  // namespace envbounds::workbench
