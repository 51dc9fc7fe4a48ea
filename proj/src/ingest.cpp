#include "gridset/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace gridset {

Graph CaseFile::graph() const {
    std::set<int> touched;
    for (auto [u, v] : branches)
        if (u != v) {
            touched.insert(u);
            touched.insert(v);
        }
    std::vector<int> isolated;
    for (int b : buses)
        if (!touched.count(b)) isolated.push_back(b);
    return Graph::from_edges(branches, isolated);
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::string strip_comment(const std::string& line, char marker) {
    auto p = line.find(marker);
    return p == std::string::npos ? line : line.substr(0, p);
}

// numeric row of a MATPOWER matrix block; trailing `;` tolerated
std::vector<double> parse_row(std::string line, int line_no) {
    for (char& c : line)
        if (c == ';' || c == ',') c = ' ';
    std::istringstream is(line);
    std::vector<double> vals;
    double x;
    while (is >> x) vals.push_back(x);
    if (!is.eof()) throw ParseError("malformed matrix row", line_no);
    return vals;
}

}  // namespace

CaseFile parse_matpower(const std::string& text) {
    CaseFile cf;
    cf.format = "matpower";
    auto lines = split_lines(text);
    bool saw_bus = false, saw_branch = false;
    std::string block;  // "", "bus", "branch"
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        int line_no = i + 1;
        std::string line = strip_comment(lines[i], '%');
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;

        if (block.empty()) {
            for (const char* name : {"bus", "branch"}) {
                std::string open = std::string("mpc.") + name;
                auto p = line.find(open);
                if (p != std::string::npos && line.find('[', p) != std::string::npos) {
                    block = name;
                    (block == "bus" ? saw_bus : saw_branch) = true;
                    line = line.substr(line.find('[', p) + 1);
                    break;
                }
            }
            if (block.empty()) continue;
        }
        bool closes = line.find(']') != std::string::npos;
        if (closes) line = line.substr(0, line.find(']'));

        auto vals = parse_row(line, line_no);
        if (!vals.empty()) {
            if (block == "bus") {
                cf.buses.push_back(static_cast<int>(vals[0]));
            } else {
                if (vals.size() < 2) throw ParseError("branch row needs two endpoints", line_no);
                cf.branches.push_back({static_cast<int>(vals[0]), static_cast<int>(vals[1])});
            }
        }
        if (closes) block.clear();
    }
    if (!saw_bus) throw Error("matpower: missing mpc.bus block");
    if (!saw_branch) throw Error("matpower: missing mpc.branch block");
    std::set<int> bus_ids(cf.buses.begin(), cf.buses.end());
    if (bus_ids.size() != cf.buses.size()) throw Error("matpower: duplicate bus id");
    for (auto [u, v] : cf.branches)
        if (!bus_ids.count(u) || !bus_ids.count(v))
            throw Error("matpower: branch references undeclared bus " +
                        std::to_string(bus_ids.count(u) ? v : u));
    return cf;
}

CaseFile parse_edge_list(const std::string& text) {
    CaseFile cf;
    cf.format = "edgelist";
    std::set<int> bus_ids;
    auto lines = split_lines(text);
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        std::string line = strip_comment(lines[i], '#');
        std::istringstream is(line);
        int u, v;
        if (is >> u) {
            if (!(is >> v)) throw ParseError("edge line needs two endpoints", i + 1);
            std::string rest;
            if (is >> rest) throw ParseError("trailing tokens on edge line", i + 1);
            cf.branches.push_back({u, v});
            bus_ids.insert(u);
            bus_ids.insert(v);
        } else {
            std::string tok;
            std::istringstream check(line);
            if (check >> tok) throw ParseError("non-integer token '" + tok + "'", i + 1);
        }
    }
    cf.buses.assign(bus_ids.begin(), bus_ids.end());
    return cf;
}

CaseFile load_case(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open case file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
    std::string ext = dot == std::string::npos ? "" : base.substr(dot);
    CaseFile cf = ext == ".m" ? parse_matpower(buf.str()) : parse_edge_list(buf.str());
    cf.name = stem;
    return cf;
}

}  // namespace gridset
