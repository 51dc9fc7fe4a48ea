#ifndef GRIDSET_RENDER_HPP
#define GRIDSET_RENDER_HPP

#include <string>

#include "gridset/ingest.hpp"
#include "gridset/report.hpp"

namespace gridset {

struct RenderOptions {
    int width = 900;
    int height = 900;
    unsigned seed = 0;  // force-directed layout only
};

/// SVG view of a solve result: buses as circles, dominating-set members as
/// red rectangles, planarization-removed edges dashed. Bus coordinates from
/// the case file when present; otherwise Tutte barycentric layout on planar
/// graphs, seeded force-directed layout otherwise. Pure view: inputs are
/// not modified. Throws if report members are not case buses.
std::string render_svg(const CaseFile& cf, const SolveReport& rep,
                       const RenderOptions& opt = {});

}  // namespace gridset

#endif
