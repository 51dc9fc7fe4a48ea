#ifndef GRIDSET_INGEST_HPP
#define GRIDSET_INGEST_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridset/graph.hpp"

namespace gridset {

/// Parsed benchmark case: bus ids (with optional drawing coordinates) and
/// branch endpoint pairs, before simple-graph collapse.
struct CaseFile {
    std::string name;
    std::vector<int> buses;
    std::vector<std::pair<double, double>> coords;  // empty or parallel to buses
    std::vector<std::pair<int, int>> branches;      // from-bus, to-bus (raw, with dups)
    std::string format;                             // "matpower" | "edgelist"

    Graph graph() const;  // dedup + self-loop drop, isolated buses kept
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

/// MATPOWER case subset: `mpc.bus = [...]` and `mpc.branch = [...]` matrix
/// blocks. Bus ids from bus column 1, branches from branch columns 1-2; the
/// status column is ignored, every branch becomes an edge. `%` comments and
/// arbitrary whitespace tolerated. Branch endpoints must reference declared
/// buses.
CaseFile parse_matpower(const std::string& text);

/// Plain edge list: `u v` per line, `#` comments. Self-loops are recorded in
/// branches but dropped by graph().
CaseFile parse_edge_list(const std::string& text);

/// Reads a file and dispatches on extension: `.m` -> matpower, otherwise
/// edge list. Case name derived from the file stem.
CaseFile load_case(const std::string& path);

}  // namespace gridset

#endif
