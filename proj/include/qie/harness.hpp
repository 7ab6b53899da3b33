#pragma once

#include "qie/measures.hpp"
#include "qie/quadrature.hpp"
#include "qie/states.hpp"

#include <string>
#include <vector>

namespace qie::harness {

/// Per-column pass tolerance: |computed - printed| <= max(abs_tol, rel_tol * |printed|).
struct TableColumn {
    std::string name;
    double abs_tol;
    double rel_tol;
};

/// One reference table: sweep values and the reference numbers transcribed
/// verbatim, one row per sweep value.
struct TableSpec {
    std::string table_id;
    states::StateId state;
    std::string sweep_parameter;               // "A" or "lambda"
    std::vector<double> sweep_values;
    std::vector<TableColumn> columns;
    std::vector<std::vector<double>> printed;  // [row][column]
    states::NormalizationMode mode = states::NormalizationMode::PaperFaithful;
};

enum class CellStatus { Reproduced, Deviates, KnownNonReproducible };

const char* to_string(CellStatus s);

struct CellRecord {
    std::string table_id;
    std::string row_param;
    double row_value;
    std::string column;
    double computed;
    double printed;
    double abs_dev;
    double rel_dev;
    CellStatus status;
    std::string note;   // blocklist reason or empty; report-only, never serialized
};

/// Declarative list of cells that are known not to reproduce, with the
/// one-line reason each. column == "*" covers a whole table.
struct BlocklistEntry {
    std::string table_id;
    std::string column;
    std::string reason;
};

std::vector<TableSpec> builtin_tables();
const std::vector<BlocklistEntry>& builtin_blocklist();

std::vector<CellRecord> run_table(const TableSpec& spec, const quad::QuadratureConfig& cfg,
                                  const std::vector<BlocklistEntry>& blocklist);

/// Full T1..T8 run, rows in table order.
std::vector<CellRecord> run_all_tables(const quad::QuadratureConfig& cfg);

std::string emit_csv(const std::vector<CellRecord>& ledger);
std::string emit_json(const std::vector<CellRecord>& ledger);

/// Human summary: per-table reproduction percentages, blocklist reasons, the
/// regularized-entropy growth evidence, transform residuals and the
/// renormalized physics-invariant block.
std::string emit_report_md(const std::vector<CellRecord>& ledger,
                           const quad::QuadratureConfig& cfg);

bool has_deviating_cell(const std::vector<CellRecord>& ledger);

} // namespace qie::harness
