#include "reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "envbounds/anharmonic.hpp"
#include "envbounds/envelope.hpp"
#include "envbounds/errors.hpp"
#include "format.hpp"

namespace envbounds::workbench {

using nlohmann::json;

namespace {

int decimals_of(std::string_view printed) {
    const auto dot = printed.find('.');
    return dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

std::string_view status_name(CellStatus s) {
    switch (s) {
        case CellStatus::ok: return "ok";
        case CellStatus::fail: return "fail";
        case CellStatus::flagged: return "flagged";
    }
    return "?";
}

CellResult compare(std::string column, double computed, const ReferenceCell& ref, double tol, bool relative) {
    CellResult c{std::move(column), computed, ref, std::stod(std::string(ref.printed)), 0.0, CellStatus::ok};
    c.deviation = std::abs(c.computed - c.reference_value);
    if (relative) c.deviation /= std::abs(c.reference_value);
    if (!(c.deviation <= tol)) c.status = ref.known_unreproducible ? CellStatus::flagged : CellStatus::fail;
    return c;
}

}  // namespace

int TableResult::count(CellStatus s) const {
    int k = 0;
    for (const auto& r : rows)
        for (const auto& c : r.cells) k += c.status == s;
    return k;
}

double default_tolerance(int table) { return table == 1 ? 1e-5 : 2e-4; }

TableResult reproduce_table(int table, const SolverConfig& cfg, PCache* cache, std::optional<double> tol) {
    if (table < 1 || table > 3) throw DomainError("reproduce: table must be 1, 2 or 3");
    TableResult out;
    out.table = table;
    out.tolerance = tol.value_or(default_tolerance(table));
    out.relative = table == 1;

    if (table == 1) {
        out.key_column = "m";
        out.columns = {"P", "beta"};
        for (const auto& row : reference_table_1()) {
            const double p = p_lookup(2.0 * row.m, {1, 0, 1}, cfg, cache).P;
            RowResult r{std::to_string(row.m), {}};
            r.cells.push_back(compare("P", p, row.P, out.tolerance, true));
            r.cells.push_back(compare("beta", std::pow(p, 2.0 * row.m), row.beta, out.tolerance, true));
            out.rows.push_back(std::move(r));
        }
        return out;
    }

    const int m = anharmonic_table_exponent_m(table);
    out.key_column = "lambda";
    out.columns = {"exact", "lower", "upper", "E_b", "E_L"};
    for (const auto& row : reference_anharmonic_table(table)) {
        const double lambda = std::stod(std::string(row.lambda));
        const PotentialSpec pot(1, {{1.0, 2.0}, {lambda, 2.0 * m}});
        const auto rep = bounds_report(pot, {1, 0, 1}, cfg, cache, true);
        RowResult r{std::string(row.lambda), {}};
        r.cells.push_back(compare("exact", *rep.exact, row.exact, out.tolerance, false));
        r.cells.push_back(compare("lower", rep.gamma_lower_B->value, row.lower, out.tolerance, false));
        r.cells.push_back(compare("upper", rep.gamma_upper_B->value, row.upper, out.tolerance, false));
        r.cells.push_back(compare("E_b", bhattacharya_energy(lambda, m), row.e_b, out.tolerance, false));
        r.cells.push_back(compare("E_L", rep.mixed_B.value, row.e_l, out.tolerance, false));
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::string render_csv(const TableResult& t) {
    std::ostringstream os;
    os << t.key_column;
    for (const auto& c : t.columns) os << ',' << c;
    os << '\n';
    for (const auto& r : t.rows) {
        os << r.label;
        for (const auto& c : r.cells) os << ',' << fixed_decimals(c.computed, decimals_of(c.reference.printed));
        os << '\n';
    }
    return os.str();
}

std::string render_json(const TableResult& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = json::object();
        row[t.key_column] = r.label;
        json cells = json::object();
        for (const auto& c : r.cells) {
            json cell = {{"computed", sig10(c.computed)},
                         {"reference", std::string(c.reference.printed)},
                         {"deviation", sig10(c.deviation)},
                         {"status", std::string(status_name(c.status))}};
            if (!c.reference.note.empty()) cell["note"] = std::string(c.reference.note);
            cells[c.column] = std::move(cell);
        }
        row["cells"] = std::move(cells);
        rows.push_back(std::move(row));
    }
    json doc = {{"table", t.table},
                {"columns", t.columns},
                {"key_column", t.key_column},
                {"tolerance", t.tolerance},
                {"tolerance_kind", t.relative ? "relative" : "absolute"},
                {"rows", std::move(rows)},
                {"failed", t.count(CellStatus::fail)},
                {"flagged", t.count(CellStatus::flagged)},
                {"status", t.passed() ? "ok" : "fail"}};
    return doc.dump(2) + "\n";
}

std::string render_diff(const TableResult& t) {
    std::ostringstream os;
    for (const auto& r : t.rows)
        for (const auto& c : r.cells) {
            if (c.status == CellStatus::ok) continue;
            os << status_name(c.status) << ": table " << t.table << ' ' << t.key_column << '=' << r.label << ' '
               << c.column << " computed " << sig10_string(c.computed) << " reference " << c.reference.printed
               << " deviation " << sig10_string(c.deviation);
            if (!c.reference.note.empty()) os << " (" << c.reference.note << ')';
            os << '\n';
        }
    os << "table " << t.table << ": " << (t.passed() ? "ok" : "FAIL") << ", " << t.count(CellStatus::fail)
       << " failed, " << t.count(CellStatus::flagged) << " flagged, tolerance " << sig10_string(t.tolerance)
       << (t.relative ? " relative" : " absolute") << '\n';
    return os.str();
}

}  // namespace envbounds::workbench
