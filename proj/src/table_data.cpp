#include "qie/harness.hpp"

// Reference tables transcribed verbatim, one vector per row, plus the
// manifest of cells known not to reproduce. Column tolerances follow the
// acceptance gates: T1-T4 carry the per-column absolute tolerances pinned
// there; T5-T8 use 2e-2 absolute or 2% relative, whichever is larger.

namespace qie::harness {

namespace {

constexpr double kBound = 2.1447;   // printed value of 1 + ln(pi)

const TableColumn kSx5em4{"S_x", 5e-4, 0.0};
const TableColumn kSk5em4{"S_k", 5e-4, 0.0};
const TableColumn kSum1em3{"S_sum", 1e-3, 0.0};
const TableColumn kBoundCol{"bbm_bound", 1e-4, 0.0};

TableColumn wide(const char* name) { return {name, 2e-2, 2e-2}; }

} // namespace

std::vector<TableSpec> builtin_tables() {
    std::vector<TableSpec> tables;

    {
        TableSpec t;
        t.table_id = "T1";
        t.state = states::StateId::QuarticConstMass;
        t.sweep_parameter = "A";
        t.sweep_values = {3.5, 3.6, 3.7, 3.8, 3.9, 4.0, 4.2};
        t.columns = {kSx5em4, kSk5em4, kSum1em3, kBoundCol};
        t.printed = {
            {0.4137, 1.7359, 2.1496, kBound},
            {0.3894, 1.7605, 2.1499, kBound},
            {0.3650, 1.7848, 2.1498, kBound},
            {0.3406, 1.8088, 2.1494, kBound},
            {0.3161, 1.8324, 2.1485, kBound},
            {0.2915, 1.8558, 2.1473, kBound},
            {0.2424, 1.9016, 2.1448, kBound},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T2";
        t.state = states::StateId::QuarticConstMass;
        t.sweep_parameter = "A";
        t.sweep_values = {3.5, 3.6, 3.7, 3.8, 3.9, 4.0, 4.2};
        t.columns = {{"F_x", 5e-3, 0.0},
                     {"F_k", 5e-3, 0.0},
                     {"var_x", 1e-3, 0.0},
                     {"var_k", 1e-2, 0.0},
                     {"FxFk", 1e-2, 0.0}};
        t.printed = {
            {7.386, 0.6029, 0.1507, 1.846, 4.453},
            {7.704, 0.5945, 0.1486, 1.926, 4.580},
            {8.028, 0.5864, 0.1466, 2.007, 4.707},
            {8.356, 0.5786, 0.1447, 2.089, 4.834},
            {8.688, 0.5711, 0.1428, 2.172, 4.962},
            {9.024, 0.5640, 0.1410, 2.256, 5.089},
            {9.709, 0.5504, 0.1376, 2.427, 5.344},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T3";
        t.state = states::StateId::QuarticPdm;
        t.sweep_parameter = "A";
        t.sweep_values = {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4};
        t.columns = {{"S_x", 2e-2, 2e-2}, {"S_k", 1e-3, 0.0}, {"S_sum", 2e-2, 2e-2}, kBoundCol};
        t.printed = {
            {20.458, 0.00092, 20.459, kBound},
            {81.523, 0.0032, 81.526, kBound},
            {506.964, 0.0159, 506.98, kBound},
            {2020.11, 0.0514, 2020.16, kBound},
            {8049.46, 0.1564, 8049.62, kBound},
            {18070.50, 0.2872, 18070.79, kBound},
            {32073.9, 0.4290, 32074.33, kBound},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T4";
        t.state = states::StateId::QuarticPdm;
        t.sweep_parameter = "A";
        t.sweep_values = {1.2, 1.4, 1.6, 1.8, 2.0, 2.2, 2.4};
        t.columns = {{"F_x", 1e-2, 0.0},
                     {"F_k", 1e-3, 0.0},
                     {"var_x", 2e-2, 2e-2},
                     {"var_k", 2e-2, 2e-2},
                     {"FxFk", 2e-2, 0.0}};
        t.printed = {
            {2.215, 2.552, 0.6380, 0.5538, 5.652},
            {3.014, 3.474, 0.8685, 0.7535, 10.470},
            {3.937, 4.538, 1.134, 0.9842, 17.866},
            {4.982, 5.742, 1.436, 1.246, 28.607},
            {6.152, 7.090, 1.772, 1.538, 43.618},
            {7.444, 8.579, 2.145, 1.861, 63.862},
            {8.858, 10.209, 2.552, 2.214, 90.431},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T5";
        t.state = states::StateId::SymWellConstMass;
        t.sweep_parameter = "lambda";
        t.sweep_values = {0.15, 0.18, 0.20, 0.22, 0.25, 0.28, 0.30};
        t.columns = {wide("S_x"), wide("S_k"), wide("S_sum"), kBoundCol};
        t.printed = {
            {1.892, 0.2565, 2.149, kBound},
            {1.727, 0.4434, 2.170, kBound},
            {1.638, 0.5353, 2.174, kBound},
            {1.562, 0.6903, 2.252, kBound},
            {1.466, 0.6960, 2.162, kBound},
            {1.385, 0.7619, 2.147, kBound},
            {1.340, 0.810, 2.150, kBound},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T6";
        t.state = states::StateId::SymWellConstMass;
        t.sweep_parameter = "lambda";
        t.sweep_values = {0.01, 0.02, 0.05, 0.08, 0.10, 0.15, 0.20, 0.25};
        t.columns = {wide("F_x"), wide("F_k"), wide("var_x"), wide("var_k"), wide("FxFk")};
        t.printed = {
            {0.1834, 557.04, 139.26, 0.0458, 102.16},
            {0.2595, 196.94, 49.235, 0.0648, 51.105},
            {0.4103, 49.823, 12.455, 0.1026, 20.442},
            {0.5190, 24.618, 6.154, 0.1298, 12.777},
            {0.5803, 17.615, 4.403, 0.1450, 10.222},
            {0.7107, 9.588, 2.397, 0.1777, 6.814},
            {0.8206, 6.228, 1.557, 0.2051, 5.110},
            {0.9175, 4.456, 1.114, 0.2293, 4.088},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T7";
        t.state = states::StateId::SymWellPdm;
        t.sweep_parameter = "lambda";
        t.sweep_values = {2.0, 2.1, 2.2, 2.3, 2.4, 2.5, 2.6};
        t.columns = {wide("S_x"), wide("S_k"), wide("S_sum"), kBoundCol};
        t.printed = {
            {0.6033, 1.6511, 2.254, kBound},
            {0.6034, 1.8394, 2.443, kBound},
            {0.6107, 2.0343, 2.645, kBound},
            {0.6289, 2.2036, 2.832, kBound},
            {0.6630, 2.2848, 2.948, kBound},
            {0.7190, 2.1661, 2.885, kBound},
            {0.8035, 1.6592, 2.463, kBound},
        };
        tables.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.table_id = "T8";
        t.state = states::StateId::SymWellPdm;
        t.sweep_parameter = "lambda";
        t.sweep_values = {0.01, 0.02, 0.03, 0.04, 0.05, 0.08, 0.1};
        t.columns = {wide("F_x"), wide("F_k"), wide("var_x"), wide("var_k"), wide("FxFk")};
        t.printed = {
            {1.3600, 50.009, 12.502, 0.34, 68.012},
            {1.3595, 25.0406, 6.260, 0.3398, 34.042},
            {1.3596, 16.7331, 4.183, 0.1942, 22.750},
            {1.3597, 12.5902, 3.1476, 0.3399, 17.119},
            {1.3597, 10.1128, 2.5282, 0.3399, 13.750},
            {1.36003, 6.4257, 1.6064, 0.3400, 8.739},
            {1.3606, 5.2142, 1.3036, 0.3402, 7.094},
        };
        tables.push_back(std::move(t));
    }
    return tables;
}

const std::vector<BlocklistEntry>& builtin_blocklist() {
    static const std::vector<BlocklistEntry> list = {
        {"T3", "S_x",
         "position entropy of the quartic-PDM state diverges logarithmically (density ~ 1/|x|); "
         "box values grow without bound in L and the reference magnitudes are unreachable"},
        {"T3", "S_sum", "inherits the divergent S_x term"},
        {"T4", "var_x",
         "reference column equals F_k/4, not a moment of the printed state; the raw position "
         "moment diverges with box size"},
        {"T4", "var_k",
         "reference column equals F_x/4, not the momentum moment A^2 sqrt(pi)/4 of the printed "
         "phi"},
        {"T7", "S_x", "lambda in [2.0, 2.6] is outside the |lambda x| < pi series validity of "
                      "the state; attempted and recorded"},
        {"T7", "S_k", "lambda in [2.0, 2.6] is outside the |lambda x| < pi series validity of "
                      "the state; attempted and recorded"},
        {"T7", "S_sum", "lambda in [2.0, 2.6] is outside the |lambda x| < pi series validity of "
                        "the state; attempted and recorded"},
        {"T8", "var_x", "reference column equals F_k/4, not a moment of the printed state"},
        {"T8", "var_k", "reference column equals F_x/4, not a moment of the printed state"},
    };
    return list;
}

} // namespace qie::harness
