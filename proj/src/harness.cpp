#include "qie/harness.hpp"
#include "qie/errors.hpp"
#include "qie/fourier.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace qie::harness {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string num6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

states::StateModel model_for(const TableSpec& spec, double sweep_value) {
    states::StateModel m;
    m.id = spec.state;
    m.mode = spec.mode;
    if (spec.sweep_parameter == "A")
        m.amplitude = sweep_value;
    else
        m.lambda = sweep_value;
    return m;
}

double pick_column(const measures::MeasureReport& rep, const std::string& name) {
    if (name == "S_x") return rep.S_x;
    if (name == "S_k") return rep.S_k;
    if (name == "S_sum") return rep.bbm_sum;
    if (name == "bbm_bound") return rep.bbm_bound;
    if (name == "F_x") return rep.F_x;
    if (name == "F_k") return rep.F_k;
    if (name == "var_x") return rep.var_x;
    if (name == "var_k") return rep.var_k;
    if (name == "FxFk") return rep.fisher_product;
    throw InvalidParams("unknown table column: " + name);
}

const BlocklistEntry* find_blocked(const std::vector<BlocklistEntry>& blocklist,
                                   const std::string& table_id, const std::string& column) {
    for (const auto& b : blocklist)
        if (b.table_id == table_id && (b.column == "*" || b.column == column)) return &b;
    return nullptr;
}

} // namespace

const char* to_string(CellStatus s) {
    switch (s) {
    case CellStatus::Reproduced: return "Reproduced";
    case CellStatus::Deviates: return "Deviates";
    case CellStatus::KnownNonReproducible: return "KnownNonReproducible";
    }
    return "?";
}

std::vector<CellRecord> run_table(const TableSpec& spec, const quad::QuadratureConfig& cfg,
                                  const std::vector<BlocklistEntry>& blocklist) {
    std::vector<CellRecord> cells;
    for (size_t row = 0; row < spec.sweep_values.size(); ++row) {
        const double value = spec.sweep_values[row];
        const auto rep = measures::full_report(model_for(spec, value), cfg);
        for (size_t col = 0; col < spec.columns.size(); ++col) {
            const auto& column = spec.columns[col];
            CellRecord cell;
            cell.table_id = spec.table_id;
            cell.row_param = spec.sweep_parameter;
            cell.row_value = value;
            cell.column = column.name;
            cell.computed = pick_column(rep, column.name);
            cell.printed = spec.printed.at(row).at(col);
            cell.abs_dev = std::abs(cell.computed - cell.printed);
            cell.rel_dev = cell.printed != 0.0 ? cell.abs_dev / std::abs(cell.printed)
                                               : cell.abs_dev;
            if (const auto* blocked = find_blocked(blocklist, spec.table_id, column.name)) {
                cell.status = CellStatus::KnownNonReproducible;
                cell.note = blocked->reason;
            } else {
                const double tol = std::max(column.abs_tol, column.rel_tol * std::abs(cell.printed));
                cell.status = cell.abs_dev <= tol ? CellStatus::Reproduced : CellStatus::Deviates;
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::vector<CellRecord> run_all_tables(const quad::QuadratureConfig& cfg) {
    std::vector<CellRecord> ledger;
    for (const auto& spec : builtin_tables()) {
        auto cells = run_table(spec, cfg, builtin_blocklist());
        ledger.insert(ledger.end(), cells.begin(), cells.end());
    }
    return ledger;
}

std::string emit_csv(const std::vector<CellRecord>& ledger) {
    std::ostringstream out;
    out << "table_id,row_param,row_value,column,computed,printed,abs_dev,rel_dev,status\n";
    for (const auto& c : ledger) {
        out << c.table_id << ',' << c.row_param << ',' << num17(c.row_value) << ',' << c.column
            << ',' << num17(c.computed) << ',' << num17(c.printed) << ',' << num17(c.abs_dev)
            << ',' << num17(c.rel_dev) << ',' << to_string(c.status) << '\n';
    }
    return out.str();
}

std::string emit_json(const std::vector<CellRecord>& ledger) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& c : ledger) {
        out << (first ? "\n" : ",\n");
        first = false;
        out << "  {\"table_id\":\"" << c.table_id << "\",\"row_param\":\"" << c.row_param
            << "\",\"row_value\":" << num17(c.row_value) << ",\"column\":\"" << c.column
            << "\",\"computed\":" << num17(c.computed) << ",\"printed\":" << num17(c.printed)
            << ",\"abs_dev\":" << num17(c.abs_dev) << ",\"rel_dev\":" << num17(c.rel_dev)
            << ",\"status\":\"" << to_string(c.status) << "\"}";
    }
    out << (first ? "]" : "\n]") << "\n";
    return out.str();
}

bool has_deviating_cell(const std::vector<CellRecord>& ledger) {
    for (const auto& c : ledger)
        if (c.status == CellStatus::Deviates) return true;
    return false;
}

std::string emit_report_md(const std::vector<CellRecord>& ledger,
                           const quad::QuadratureConfig& cfg) {
    std::ostringstream out;
    out << "# Table reproduction report\n\n";

    struct Tally {
        int reproduced = 0;
        int deviates = 0;
        int flagged = 0;
    };
    std::map<std::string, Tally> tally;
    for (const auto& c : ledger) {
        auto& t = tally[c.table_id];
        if (c.status == CellStatus::Reproduced) ++t.reproduced;
        if (c.status == CellStatus::Deviates) ++t.deviates;
        if (c.status == CellStatus::KnownNonReproducible) ++t.flagged;
    }

    out << "## Per-table summary\n\n";
    out << "| table | cells | reproduced | deviating | known non-reproducible | reproduced % of "
           "checked |\n";
    out << "|-------|-------|------------|-----------|------------------------|------------------"
           "------|\n";
    for (const auto& [id, t] : tally) {
        const int total = t.reproduced + t.deviates + t.flagged;
        const int checked = t.reproduced + t.deviates;
        const double pct = checked > 0 ? 100.0 * t.reproduced / checked : 100.0;
        out << "| " << id << " | " << total << " | " << t.reproduced << " | " << t.deviates
            << " | " << t.flagged << " | " << num6(pct) << " |\n";
    }

    out << "\n## Deviating cells\n\n";
    bool any_dev = false;
    for (const auto& c : ledger) {
        if (c.status != CellStatus::Deviates) continue;
        any_dev = true;
        out << "- " << c.table_id << " " << c.row_param << "=" << num6(c.row_value) << " "
            << c.column << ": computed " << num6(c.computed) << " vs reference " << num6(c.printed)
            << " (abs dev " << num6(c.abs_dev) << ")\n";
    }
    if (!any_dev) out << "none\n";

    out << "\n## Known-non-reproducible cells\n\n";
    for (const auto& b : builtin_blocklist())
        out << "- " << b.table_id << " / " << b.column << ": " << b.reason << "\n";
    {
        // flagged cells that nevertheless matched their column tolerance
        int matched = 0, flagged = 0;
        for (const auto& c : ledger) {
            if (c.status != CellStatus::KnownNonReproducible || c.table_id != "T7") continue;
            ++flagged;
            if (c.abs_dev <= std::max(2e-2, 2e-2 * std::abs(c.printed))) ++matched;
        }
        if (flagged > 0)
            out << "\nNote: " << matched << " of " << flagged
                << " flagged T7 cells matched the reference within the wide tolerance anyway; "
                   "the flag records the series-validity concern, not a numeric mismatch.\n";
    }

    out << "\n## Regularized position entropy growth (quartic PDM)\n\n";
    out << "S_x of the non-normalizable quartic-PDM state over the box [-L, L], A = 0.1:\n\n";
    {
        states::StateModel m;
        m.id = states::StateId::QuarticPdm;
        m.amplitude = 0.1;
        for (double L : {10.0, 20.0, 40.0}) {
            quad::QuadratureConfig c = cfg;
            c.box_halfwidth = L;
            const double sx = measures::shannon_position(states::build_state(m, c), c);
            out << "- L = " << num6(L) << ": S_x = " << num6(sx) << "\n";
        }
        out << "\nThe integral keeps growing with L (reference value 2020.11 is unreachable "
               "for any plausible cutoff).\n";
    }

    out << "\n## Transform residuals (|printed phi|^2 vs |numeric FT|^2, unit mass)\n\n";
    {
        auto residual_line = [&](states::StateId id, double A, double lambda) {
            states::StateModel m;
            m.id = id;
            m.amplitude = A;
            m.lambda = lambda;
            const double r = fourier::transform_residual(m, cfg);
            out << "- " << states::state_name(id) << " ("
                << (id == states::StateId::QuarticConstMass || id == states::StateId::QuarticPdm
                        ? "A=" + num6(A)
                        : "lambda=" + num6(lambda))
                << "): " << num6(r) << "\n";
        };
        residual_line(states::StateId::QuarticConstMass, 3.5, 1.0);
        residual_line(states::StateId::QuarticPdm, 1.0, 1.0);
        residual_line(states::StateId::SymWellConstMass, 1.0, 0.2);
        residual_line(states::StateId::SymWellPdm, 1.0, 0.5);
    }

    out << "\n## Renormalized physics invariants\n\n";
    out << "Unit-norm states; momentum densities from the exact transform. BBM bound "
        << num6(measures::kBbmBound) << ", Fisher bound 4.\n\n";
    out << "| state | parameter | S_x + S_k | BBM margin | F_x F_k |\n";
    out << "|-------|-----------|-----------|------------|---------|\n";
    {
        auto physics_row = [&](states::StateId id, double value) {
            states::StateModel m;
            m.id = id;
            m.mode = states::NormalizationMode::Renormalized;
            std::string param;
            if (id == states::StateId::QuarticConstMass) {
                m.amplitude = value;
                param = "A=" + num6(value);
            } else {
                m.lambda = value;
                param = "lambda=" + num6(value);
            }
            const auto rep = measures::full_report(m, cfg);
            out << "| " << states::state_name(id) << " | " << param << " | " << num6(rep.bbm_sum)
                << " | " << num6(rep.bbm_margin) << " | " << num6(rep.fisher_product) << " |\n";
        };
        physics_row(states::StateId::QuarticConstMass, 0.5);
        physics_row(states::StateId::QuarticConstMass, std::numbers::pi);
        physics_row(states::StateId::QuarticConstMass, 4.0);
        physics_row(states::StateId::SymWellConstMass, 0.15);
        physics_row(states::StateId::SymWellConstMass, 0.25);
        physics_row(states::StateId::SymWellPdm, 0.05);
        physics_row(states::StateId::SymWellPdm, 2.4);
    }
    out << "\nEvery normalizable state keeps S_x + S_k above the BBM bound and F_x F_k above "
           "4.\n";
    return out.str();
}

} // namespace qie::harness
