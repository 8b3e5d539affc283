// esir: edge irregularity strength toolkit for dandelion-family graphs.
//
// Exit codes: 0 success/valid, 1 invalid labeling or sweep discrepancy,
// 2 usage/parameter/parse error, 3 search budget exhausted.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "esir/construct.hpp"
#include "esir/graph.hpp"
#include "esir/labeling.hpp"
#include "esir/serialize.hpp"
#include "esir/solver.hpp"
#include "esir/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw esir::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

esir::SearchBudget make_budget(std::uint64_t nodes, std::int64_t ms) {
    esir::SearchBudget budget;
    if (nodes > 0) budget.max_nodes = nodes;
    if (ms > 0) budget.max_time = std::chrono::milliseconds(ms);
    return budget;
}

int cmd_gen(int n, int l, const std::string& format) {
    esir::Graph g = esir::dandelion(n, l);
    if (format == "dot") std::cout << esir::to_dot(g);
    else std::cout << esir::to_json(g) << "\n";
    return 0;
}

int cmd_label(int n, int l, bool verbatim) {
    esir::ConstructionResult result = esir::construct(n, l, /*allow_repair=*/!verbatim);
    std::cout << esir::to_json(result, n, l) << "\n";
    return result.report.valid ? 0 : 1;
}

int cmd_verify(const std::string& graph_file, const std::string& labeling_file) {
    esir::Graph g = esir::graph_from_json(read_file(graph_file));
    esir::Labeling phi = esir::labeling_from_json(read_file(labeling_file));
    esir::VerifyReport report = esir::verify(g, phi);
    std::cout << esir::to_json(report) << "\n";
    return report.valid ? 0 : 1;
}

int cmd_es(int n, int l, const esir::SearchBudget& budget) {
    esir::EsResult result = esir::es_exact(esir::dandelion(n, l), budget);
    std::cout << esir::to_json(result) << "\n";
    return result.status == esir::EsResult::Status::exact ? 0 : 3;
}

int cmd_sweep(const esir::SweepOptions& opt) {
    std::vector<esir::SweepRecord> records = esir::run_sweep(opt);
    std::cout << esir::sweep_csv(records);
    int discrepancies = esir::count_discrepancies(records);
    std::cerr << "sweep: " << records.size() << " instances, " << discrepancies
              << " discrepancies\n";
    return discrepancies == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge irregularity strength toolkit for dandelion graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;  // reserved; every subcommand is deterministic
    app.add_option("--seed", seed, "reserved, currently unused")->group("");

    int n = 0, l = 0;
    std::string format = "json";
    bool verbatim = false, repair = false;
    std::uint64_t budget_nodes = 50'000'000;
    std::int64_t budget_ms = 60'000;

    auto* gen = app.add_subcommand("gen", "emit a dandelion graph document");
    gen->add_option("n", n, "total vertex count")->required();
    gen->add_option("l", l, "path vertex count")->required();
    gen->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();

    auto* label = app.add_subcommand("label", "emit the constructive labeling and its report");
    label->add_option("n", n, "total vertex count")->required();
    label->add_option("l", l, "path vertex count")->required();
    auto* opt_verbatim =
        label->add_flag("--verbatim", verbatim, "emit the verbatim case formulas, never repair");
    label->add_flag("--repair", repair, "allow the repair variant (default)")
        ->excludes(opt_verbatim);

    auto* verify = app.add_subcommand("verify", "check a labeling document against a graph");
    std::string graph_file, labeling_file;
    verify->add_option("graph", graph_file, "graph JSON file")->required();
    verify->add_option("labeling", labeling_file, "labeling JSON file")->required();

    auto* es = app.add_subcommand("es", "exact edge irregularity strength");
    es->add_option("n", n, "total vertex count")->required();
    es->add_option("l", l, "path vertex count")->required();
    es->add_option("--budget-nodes", budget_nodes, "search node limit, 0 = unlimited")
        ->capture_default_str();
    es->add_option("--budget-ms", budget_ms, "search time limit in ms, 0 = unlimited")
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "run the (n,l) grid and emit CSV");
    esir::SweepOptions sweep_opt;
    sweep->add_option("l_min", sweep_opt.l_min, "smallest path length")->required();
    sweep->add_option("l_max", sweep_opt.l_max, "largest path length")->required();
    sweep->add_option("n_max", sweep_opt.n_max, "largest vertex count")->required();
    sweep->add_option("--exact-up-to", sweep_opt.exact_up_to,
                      "run the exact solver for n up to this value")
        ->capture_default_str();
    sweep->add_option("--jobs", sweep_opt.jobs, "parallel workers")->capture_default_str();
    sweep->add_flag("--verbatim", sweep_opt.verbatim, "verbatim constructions, no repair");
    std::string sweep_format = "csv";
    sweep->add_option("--format", sweep_format, "output format")
        ->check(CLI::IsMember({"csv"}))
        ->capture_default_str();
    sweep->add_option("--budget-nodes", budget_nodes, "per-instance search node limit")
        ->capture_default_str();
    sweep->add_option("--budget-ms", budget_ms, "per-instance search time limit in ms")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(n, l, format);
        if (label->parsed()) return cmd_label(n, l, verbatim);
        if (verify->parsed()) return cmd_verify(graph_file, labeling_file);
        if (es->parsed()) return cmd_es(n, l, make_budget(budget_nodes, budget_ms));
        if (sweep->parsed()) {
            sweep_opt.budget = make_budget(budget_nodes, budget_ms);
            return cmd_sweep(sweep_opt);
        }
    } catch (const esir::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const esir::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const esir::UnlabeledVertex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
