#ifndef GRIDSET_REPORT_HPP
#define GRIDSET_REPORT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gridset {

/// Result of one solver run. Members and removed edges use external bus
/// labels, ascending, so serialized reports are diff-stable.
struct SolveReport {
    std::string solver;     // bd | greedy | bnb | brute
    std::string case_name;  // optional, set by the CLI
    bool planar = true;
    bool exact = true;
    int branch_width = -1;  // -1 when the solver does not compute one
    int cardinality = 0;
    std::vector<int> members;
    std::vector<std::pair<int, int>> removed_edges;  // planarization casualties
    std::map<std::string, double> timings;           // stage -> seconds

    bool operator==(const SolveReport&) const = default;
};

/// Key-value text format, `gridset-report v1` header, one member per line.
/// Round-trips bit-exact: read(write(r)) == r and write(read(t)) == t.
void write_report(std::ostream& os, const SolveReport& r);
SolveReport read_report(std::istream& is);  // throws Error on version mismatch

}  // namespace gridset

#endif
