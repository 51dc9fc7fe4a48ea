#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gridset/baselines.hpp"
#include "gridset/dsdp.hpp"
#include "gridset/ingest.hpp"
#include "gridset/render.hpp"

namespace fs = std::filesystem;
using namespace gridset;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitSolver = 2;

std::string resolve_case(const std::string& arg) {
    std::vector<fs::path> tries{arg, std::string(arg) + ".m"};
    if (const char* dir = std::getenv("GRIDSET_DATA_DIR")) {
        tries.push_back(fs::path(dir) / arg);
        tries.push_back(fs::path(dir) / (arg + ".m"));
    }
    for (const auto& p : tries)
        if (fs::exists(p)) return p.string();
    return arg;  // let load_case report the failure
}

struct EdgeOrderOpt {
    std::string raw = "input";
    EdgeOrder order() const {
        if (raw == "input") return EdgeOrder::Input;
        if (raw == "degree") return EdgeOrder::Degree;
        if (raw.rfind("explicit:", 0) == 0) return EdgeOrder::Explicit;
        throw CLI::ValidationError("--edge-order", "expected input|degree|explicit:<file>");
    }
    std::vector<std::pair<int, int>> priority() const {
        if (raw.rfind("explicit:", 0) != 0) return {};
        CaseFile cf = load_case(raw.substr(9));
        return cf.branches;
    }
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

SolveReport run_solver(const Graph& g, const std::string& solver, const EdgeOrderOpt& eo,
                       double budget) {
    if (solver == "bd") return solve_planar_mds(g, eo.order(), eo.priority());
    SolveReport rep;
    rep.solver = solver;
    rep.planar = is_planar(g);
    std::vector<int> dense;
    if (solver == "greedy") {
        dense = greedy_ds(g).members;
        rep.exact = false;
    } else if (solver == "bnb") {
        BnBResult r = exact_bnb_ds(g, budget);
        dense = r.set.members;
        rep.exact = r.optimal;
    } else if (solver == "brute") {
        dense = brute_force_ds(g).members;
        rep.exact = true;
    } else {
        throw Error("unknown solver: " + solver);
    }
    for (int v : dense) rep.members.push_back(g.label(v));
    std::sort(rep.members.begin(), rep.members.end());
    rep.cardinality = static_cast<int>(rep.members.size());
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimum dominating sets on power-network graphs"};
    app.require_subcommand(1);

    std::string case_path, report_path, out_path, solver = "bd";
    EdgeOrderOpt eo;
    double budget = 60.0;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("case", case_path, "case file (.m or edge list)")->required();
        cmd->add_option("--edge-order", eo.raw, "input|degree|explicit:<file>");
        cmd->add_option("--out", out_path, "output file");
    };
    auto* c_solve = app.add_subcommand("solve", "solve minimum dominating set");
    add_common(c_solve);
    c_solve->add_option("--solver", solver, "bd|greedy|bnb|brute");
    c_solve->add_option("--time-budget", budget, "seconds (bnb)");
    auto* c_bw = app.add_subcommand("bw", "branch-width and decomposition");
    add_common(c_bw);
    auto* c_compare = app.add_subcommand("compare", "benchmark table row");
    add_common(c_compare);
    c_compare->add_option("--time-budget", budget, "seconds (bnb)");
    auto* c_render = app.add_subcommand("render", "SVG figure from a report");
    add_common(c_render);
    c_render->add_option("report", report_path, "report file")->required();
    c_render->add_option("--seed", seed, "layout seed");

    CLI11_PARSE(app, argc, argv);

    CaseFile cf;
    try {
        cf = load_case(resolve_case(case_path));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        Graph g = cf.graph();
        if (c_solve->parsed()) {
            SolveReport rep = run_solver(g, solver, eo, budget);
            rep.case_name = cf.name;
            std::cout << "|D| = " << rep.cardinality << ", "
                      << (rep.exact ? "exact" : "exact=false") << "\n";
            std::cout << "members:";
            for (int m : rep.members) std::cout << " " << m;
            std::cout << "\n";
            std::ostringstream os;
            write_report(os, rep);
            write_text_file(out_path.empty() ? cf.name + ".report" : out_path, os.str());
        } else if (c_bw->parsed()) {
            bool planar = is_planar(g);
            Graph sub = planar ? g : maximal_planar_subgraph(g, eo.order(), eo.priority()).subgraph;
            std::ostringstream os;
            int bw = 0;
            if (sub.num_edges() >= 2 && is_connected(sub)) {
                PlanarEmbedding emb = PlanarEmbedding::of(sub);
                BranchDecomposition bd = optimal_branch_decomposition(emb);
                bw = bd.width;
                write_decomposition(os, sub, bd);
            } else if (sub.num_edges() == 1) {
                bw = 0;
            } else if (is_star(sub)) {
                bw = 1;
            }
            if (planar)
                std::cout << "planar: yes, bw = " << bw << "\n";
            else
                std::cout << "planar: no, subgraph bw = " << bw << "\n";
            if (!os.str().empty())
                write_text_file(out_path.empty() ? cf.name + ".bd" : out_path, os.str());
        } else if (c_compare->parsed()) {
            SolveReport bd = solve_planar_mds(g, eo.order(), eo.priority());
            BnBResult bnb = exact_bnb_ds(g, budget);
            DominatingSet gr = greedy_ds(g);
            std::cout << g.num_vertices() << " " << g.num_edges() << " "
                      << (bd.planar ? "yes" : "no") << " " << bd.branch_width << " "
                      << bnb.set.cardinality() << " " << bd.cardinality << " "
                      << gr.cardinality() << "\n";
        } else if (c_render->parsed()) {
            std::ifstream rin(report_path);
            if (!rin) throw Error("cannot open report: " + report_path);
            SolveReport rep = read_report(rin);
            std::string svg = render_svg(cf, rep, {.seed = seed});
            write_text_file(out_path.empty() ? cf.name + ".svg" : out_path, svg);
        }
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }
    return 0;
}
