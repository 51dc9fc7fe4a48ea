#include "gridset/report.hpp"

#include <charconv>
#include <istream>
#include <string_view>
#include <ostream>
#include <sstream>

#include "gridset/graph.hpp"

namespace gridset {

void write_report(std::ostream& os, const SolveReport& r) {
    os << "gridset-report v1\n";
    os << "solver " << r.solver << "\n";
    if (!r.case_name.empty()) os << "case " << r.case_name << "\n";
    os << "planar " << (r.planar ? "yes" : "no") << "\n";
    os << "exact " << (r.exact ? "yes" : "no") << "\n";
    if (r.branch_width >= 0) os << "branch-width " << r.branch_width << "\n";
    os << "cardinality " << r.cardinality << "\n";
    for (const auto& [stage, sec] : r.timings) {
        // shortest representation that parses back to the identical double
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, sec);
        os << "timing " << stage << " " << std::string_view(buf, res.ptr) << "\n";
    }
    for (auto [u, v] : r.removed_edges) os << "removed " << u << " " << v << "\n";
    for (int m : r.members) os << "member " << m << "\n";
}

SolveReport read_report(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header != "gridset-report v1")
        throw Error("report: unsupported version (expected 'gridset-report v1')");
    SolveReport r;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "solver") {
            ls >> r.solver;
        } else if (key == "case") {
            ls >> r.case_name;
        } else if (key == "planar" || key == "exact") {
            std::string v;
            ls >> v;
            if (v != "yes" && v != "no") throw Error("report: bad flag line: " + line);
            (key == "planar" ? r.planar : r.exact) = (v == "yes");
        } else if (key == "branch-width") {
            ls >> r.branch_width;
        } else if (key == "cardinality") {
            ls >> r.cardinality;
        } else if (key == "timing") {
            std::string stage;
            double sec;
            ls >> stage >> sec;
            r.timings[stage] = sec;
        } else if (key == "removed") {
            int u, v;
            ls >> u >> v;
            r.removed_edges.push_back({u, v});
        } else if (key == "member") {
            int m;
            ls >> m;
            r.members.push_back(m);
        } else {
            throw Error("report: unknown key '" + key + "'");
        }
        if (ls.fail()) throw Error("report: malformed line: " + line);
    }
    return r;
}

}  // namespace gridset
