#include "qie/cli.hpp"
#include "qie/errors.hpp"
#include "qie/fourier.hpp"
#include "qie/harness.hpp"
#include "qie/measures.hpp"
#include "qie/zk.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace qie::cli {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct RunConfig {
    std::string state = "quartic-const";
    double A = 1.0;
    double lambda = 1.0;
    std::string mode = "paper";

    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double box_L = 10.0;
    int max_level = 12;

    std::string mass = "constant";
    double m0 = 1.0;
    std::string potential = "harmonic";
    double a = 1.0;
    double b = 1.0;
    double V0 = 1.0;
    int order = 6;

    double grid_L = 10.0;
    int grid_n = 2000;

    std::string out_dir = ".";
    std::string format = "both";
};

quad::QuadratureConfig quad_config(const RunConfig& rc) {
    quad::QuadratureConfig cfg;
    cfg.abs_tol = rc.abs_tol;
    cfg.rel_tol = rc.rel_tol;
    cfg.box_halfwidth = rc.box_L;
    cfg.max_refinement_level = rc.max_level;
    cfg.validate();
    return cfg;
}

states::StateId parse_state(const std::string& s) {
    if (s == "quartic-const") return states::StateId::QuarticConstMass;
    if (s == "quartic-pdm") return states::StateId::QuarticPdm;
    if (s == "symwell-const") return states::StateId::SymWellConstMass;
    if (s == "symwell-pdm") return states::StateId::SymWellPdm;
    throw UsageError("unknown state: " + s);
}

states::StateModel make_model(const RunConfig& rc) {
    states::StateModel m;
    m.id = parse_state(rc.state);
    m.amplitude = rc.A;
    m.lambda = rc.lambda;
    m.mode = rc.mode == "renormalized" ? states::NormalizationMode::Renormalized
                                       : states::NormalizationMode::PaperFaithful;
    return m;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IOFailure("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw IOFailure("failed writing " + path.string());
}

std::string report_json(const measures::MeasureReport& rep, const RunConfig& rc) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"state\": \"" << rc.state << "\",\n";
    out << "  \"S_x\": " << num17(rep.S_x) << ",\n";
    out << "  \"S_k\": " << num17(rep.S_k) << ",\n";
    out << "  \"bbm_sum\": " << num17(rep.bbm_sum) << ",\n";
    out << "  \"bbm_bound\": " << num17(rep.bbm_bound) << ",\n";
    out << "  \"bbm_margin\": " << num17(rep.bbm_margin) << ",\n";
    out << "  \"F_x\": " << num17(rep.F_x) << ",\n";
    out << "  \"F_k\": " << num17(rep.F_k) << ",\n";
    out << "  \"fisher_product\": " << num17(rep.fisher_product) << ",\n";
    out << "  \"fisher_bound\": " << num17(rep.fisher_bound) << ",\n";
    out << "  \"var_x\": " << num17(rep.var_x) << ",\n";
    out << "  \"var_k\": " << num17(rep.var_k) << ",\n";
    out << "  \"fisher_var_ratio_x\": " << num17(rep.fisher_var_ratio_x) << ",\n";
    out << "  \"fisher_var_ratio_k\": " << num17(rep.fisher_var_ratio_k) << ",\n";
    out << "  \"mode\": \"" << (rep.mode == states::NormalizationMode::Renormalized
                                    ? "renormalized"
                                    : "paper")
        << "\",\n";
    out << "  \"divergence_flags\": [";
    bool first = true;
    for (const auto f : rep.divergence_flags) {
        out << (first ? "" : ", ");
        first = false;
        out << '"'
            << (f == measures::DivergenceFlag::PositionEntropyRegularized
                    ? "PositionEntropyRegularized"
                    : "NormDeviatesFromUnity")
            << '"';
    }
    out << "],\n";
    out << "  \"box_L\": " << num17(rep.box_L) << "\n";
    out << "}\n";
    return out.str();
}

int cmd_compute(const RunConfig& rc, std::ostream& out) {
    const auto cfg = quad_config(rc);
    const auto rep = measures::full_report(make_model(rc), cfg);
    out << report_json(rep, rc);
    return 0;
}

int cmd_tables(const RunConfig& rc, std::ostream& out) {
    const auto cfg = quad_config(rc);
    const auto ledger = harness::run_all_tables(cfg);

    const std::filesystem::path dir(rc.out_dir);
    std::filesystem::create_directories(dir);
    if (rc.format == "both" || rc.format == "csv")
        write_file(dir / "ledger.csv", harness::emit_csv(ledger));
    if (rc.format == "both" || rc.format == "json")
        write_file(dir / "ledger.json", harness::emit_json(ledger));
    write_file(dir / "report.md", harness::emit_report_md(ledger, cfg));

    int reproduced = 0, deviates = 0, flagged = 0;
    for (const auto& c : ledger) {
        if (c.status == harness::CellStatus::Reproduced) ++reproduced;
        if (c.status == harness::CellStatus::Deviates) ++deviates;
        if (c.status == harness::CellStatus::KnownNonReproducible) ++flagged;
    }
    out << "cells: " << ledger.size() << " reproduced: " << reproduced
        << " deviating: " << deviates << " known-non-reproducible: " << flagged << "\n";
    out << "wrote " << (dir / "ledger.csv").string() << ", " << (dir / "ledger.json").string()
        << ", " << (dir / "report.md").string() << "\n";
    return deviates == 0 ? 0 : 1;
}

int cmd_solve(const RunConfig& rc, std::ostream& out) {
    states::MassProfile mass = rc.mass == "solitonic" ? states::MassProfile::solitonic(rc.m0)
                                                      : states::MassProfile::constant(rc.m0);
    states::PotentialSpec pot;
    if (rc.potential == "harmonic")
        pot = states::PotentialSpec::harmonic();
    else if (rc.potential == "quartic")
        pot = states::PotentialSpec::quartic(rc.a, rc.b);
    else if (rc.potential == "symwell")
        pot = states::PotentialSpec::symmetric_well(rc.V0, rc.lambda);
    else if (rc.potential == "symwell-series")
        pot = states::PotentialSpec::symmetric_well_series(rc.V0, rc.lambda, rc.order);
    else
        throw UsageError("unknown potential: " + rc.potential);

    zk::Grid grid{rc.grid_L, rc.grid_n};
    const auto H = zk::build_hamiltonian(mass, pot, grid);
    const auto gs = zk::ground_state(H);

    std::ostringstream csv;
    csv << "x,psi\n";
    for (int i = 0; i < grid.n_points; ++i)
        csv << num17(grid.x(i)) << ',' << num17(gs.psi[i]) << '\n';
    const std::filesystem::path dir(rc.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "psi.csv", csv.str());

    out << "E0 = " << num17(gs.energy) << "\n";
    out << "wrote " << (dir / "psi.csv").string() << "\n";
    return 0;
}

int cmd_ft_residual(const RunConfig& rc, bool state_given, std::ostream& out) {
    const auto cfg = quad_config(rc);
    auto print_one = [&](const states::StateModel& m) {
        out << states::state_name(m.id) << ": " << num17(fourier::transform_residual(m, cfg))
            << "\n";
    };
    if (state_given) {
        print_one(make_model(rc));
        return 0;
    }
    states::StateModel m;
    m.id = states::StateId::QuarticConstMass;
    m.amplitude = 3.5;
    print_one(m);
    m.id = states::StateId::QuarticPdm;
    m.amplitude = 1.0;
    print_one(m);
    m.id = states::StateId::SymWellConstMass;
    m.lambda = 0.2;
    print_one(m);
    m.id = states::StateId::SymWellPdm;
    m.lambda = 0.5;
    print_one(m);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"ground-state information measures for constant-mass and "
                 "position-dependent-mass states"};
    app.set_config("--config", "", "flat key=value config file (# comments)");
    app.allow_config_extras(false);

    app.add_option("--state", rc.state, "state id")
        ->check(CLI::IsMember({"quartic-const", "quartic-pdm", "symwell-const", "symwell-pdm"}))
        ->capture_default_str();
    auto positive = [](const std::string& name) {
        return CLI::Validator(
            [name](std::string& s) -> std::string {
                try {
                    if (std::stod(s) > 0.0) return {};
                } catch (...) {
                }
                return name + " must be > 0";
            },
            "POSITIVE");
    };
    app.add_option("--A", rc.A, "amplitude/width parameter A (quartic states)")
        ->check(positive("A"))
        ->capture_default_str();
    app.add_option("--lambda", rc.lambda, "well parameter lambda (symmetric-well states)")
        ->check(positive("lambda"))
        ->capture_default_str();
    app.add_option("--mode", rc.mode, "paper (verbatim forms) or renormalized (unit norm)")
        ->check(CLI::IsMember({"paper", "renormalized"}))
        ->capture_default_str();

    app.add_option("--abs-tol", rc.abs_tol, "quadrature absolute tolerance")
        ->check(positive("abs-tol"))
        ->capture_default_str();
    app.add_option("--rel-tol", rc.rel_tol, "quadrature relative tolerance")
        ->check(positive("rel-tol"))
        ->capture_default_str();
    app.add_option("--box-L", rc.box_L, "box halfwidth for regularized integrals")
        ->check(positive("box-L"))
        ->capture_default_str();
    app.add_option("--max-level", rc.max_level, "max quadrature refinement level")
        ->check(CLI::Range(1, 14))
        ->capture_default_str();

    app.add_option("--mass", rc.mass, "mass profile for the solver")
        ->check(CLI::IsMember({"constant", "solitonic"}))
        ->capture_default_str();
    app.add_option("--m0", rc.m0, "mass scale m0")->check(positive("m0"))->capture_default_str();
    app.add_option("--potential", rc.potential, "potential for the solver")
        ->check(CLI::IsMember({"harmonic", "quartic", "symwell", "symwell-series"}))
        ->capture_default_str();
    app.add_option("--a", rc.a, "quartic coefficient a")->capture_default_str();
    app.add_option("--b", rc.b, "quartic coefficient b (> 0)")
        ->check(positive("b"))
        ->capture_default_str();
    app.add_option("--V0", rc.V0, "well depth V0")->capture_default_str();
    app.add_option("--order", rc.order, "well series truncation order")
        ->check(CLI::IsMember({2, 4, 6}))
        ->capture_default_str();
    app.add_option("--grid-L", rc.grid_L, "solver grid halfwidth")
        ->check(positive("grid-L"))
        ->capture_default_str();
    app.add_option("--grid-n", rc.grid_n, "solver grid points (>= 64)")
        ->check(CLI::Range(64, 2000000))
        ->capture_default_str();

    app.add_option("--out", rc.out_dir, "output directory")
        ->envname("QIE_OUT_DIR")
        ->capture_default_str();
    app.add_option("--format", rc.format, "ledger output format")
        ->check(CLI::IsMember({"both", "csv", "json"}))
        ->capture_default_str();

    auto* compute = app.add_subcommand("compute", "measures for one state, JSON to stdout");
    auto* tables = app.add_subcommand("tables", "reproduce the reference tables T1..T8");
    auto* solve = app.add_subcommand("solve", "finite-difference ground state");
    auto* ft = app.add_subcommand("ft-residual", "printed vs numeric momentum density");
    for (auto* sub : {compute, tables, solve, ft}) sub->fallthrough();
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(rc, out);
        if (tables->parsed()) return cmd_tables(rc, out);
        if (solve->parsed()) return cmd_solve(rc, out);
        if (ft->parsed()) return cmd_ft_residual(rc, app.count("--state") > 0, out);
        err << "usage error: expected a command (compute | tables | solve | ft-residual)\n";
        err << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedOrder& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace qie::cli
