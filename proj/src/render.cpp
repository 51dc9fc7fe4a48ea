#include "gridset/render.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gridset/planarity.hpp"

namespace gridset {

namespace {

using Points = std::vector<std::pair<double, double>>;

// Tutte barycentric layout: pin the largest face on a circle, every other
// vertex at the average of its neighbors (solved as a linear system).
Points tutte_layout(const Graph& g) {
    int n = g.num_vertices();
    Points pts(n, {0.5, 0.5});
    if (n == 1) return pts;
    PlanarEmbedding emb = PlanarEmbedding::of(g);
    const auto* outer = &emb.faces()[0];
    for (const auto& f : emb.faces())
        if (f.size() > outer->size()) outer = &f;
    std::vector<int> rim;
    std::set<int> on_rim;
    for (const auto& d : *outer)
        if (on_rim.insert(d.head).second) rim.push_back(d.head);
    for (int i = 0; i < static_cast<int>(rim.size()); ++i) {
        double a = 2 * M_PI * i / rim.size();
        pts[rim[i]] = {0.5 + 0.48 * std::cos(a), 0.5 + 0.48 * std::sin(a)};
    }
    std::vector<int> inner, row(n, -1);
    for (int v = 0; v < n; ++v)
        if (!on_rim.count(v)) {
            row[v] = static_cast<int>(inner.size());
            inner.push_back(v);
        }
    if (inner.empty()) return pts;
    int m = static_cast<int>(inner.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
        int v = inner[i];
        A(i, i) = g.degree(v);
        for (int u : g.neighbors(v)) {
            if (row[u] >= 0) {
                A(i, row[u]) -= 1;
            } else {
                bx(i) += pts[u].first;
                by(i) += pts[u].second;
            }
        }
    }
    Eigen::VectorXd x = A.fullPivLu().solve(bx), y = A.fullPivLu().solve(by);
    for (int i = 0; i < m; ++i) pts[inner[i]] = {x(i), y(i)};
    return pts;
}

Points force_layout(const Graph& g, unsigned seed) {
    int n = g.num_vertices();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    Points pts(n);
    for (auto& p : pts) p = {u(rng), u(rng)};
    if (n <= 1) return pts;
    double k = std::sqrt(1.0 / n);
    for (int iter = 0; iter < 300; ++iter) {
        double temp = 0.1 * (1.0 - iter / 300.0);
        Points disp(n, {0, 0});
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                double dx = pts[v].first - pts[w].first;
                double dy = pts[v].second - pts[w].second;
                double d2 = std::max(dx * dx + dy * dy, 1e-8);
                double rep = k * k / d2;
                disp[v].first += dx * rep;
                disp[v].second += dy * rep;
                disp[w].first -= dx * rep;
                disp[w].second -= dy * rep;
            }
        for (const auto& e : g.edges()) {
            double dx = pts[e.u].first - pts[e.v].first;
            double dy = pts[e.u].second - pts[e.v].second;
            double d = std::sqrt(std::max(dx * dx + dy * dy, 1e-8));
            double att = d / k * 0.01;
            disp[e.u].first -= dx * att;
            disp[e.u].second -= dy * att;
            disp[e.v].first += dx * att;
            disp[e.v].second += dy * att;
        }
        for (int v = 0; v < n; ++v) {
            double d = std::sqrt(disp[v].first * disp[v].first +
                                 disp[v].second * disp[v].second);
            if (d < 1e-12) continue;
            double step = std::min(d, temp) / d;
            pts[v].first = std::clamp(pts[v].first + disp[v].first * step, 0.02, 0.98);
            pts[v].second = std::clamp(pts[v].second + disp[v].second * step, 0.02, 0.98);
        }
    }
    return pts;
}

}  // namespace

std::string render_svg(const CaseFile& cf, const SolveReport& rep,
                       const RenderOptions& opt) {
    std::set<int> bus_set(cf.buses.begin(), cf.buses.end());
    for (int m : rep.members)
        if (!bus_set.count(m)) throw Error("render: member " + std::to_string(m) +
                                           " is not a bus of the case");

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << " "
        << opt.height << "\">\n";
    if (!cf.buses.empty()) {
        Graph g = cf.graph();
        Points pts;
        if (!cf.coords.empty()) {
            // normalize supplied coordinates into the unit square
            double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
            for (auto [x, y] : cf.coords) {
                xmin = std::min(xmin, x); xmax = std::max(xmax, x);
                ymin = std::min(ymin, y); ymax = std::max(ymax, y);
            }
            double sx = xmax > xmin ? xmax - xmin : 1, sy = ymax > ymin ? ymax - ymin : 1;
            pts.resize(g.num_vertices());
            for (size_t i = 0; i < cf.buses.size(); ++i) {
                int v = g.index_of_label(cf.buses[i]);
                pts[v] = {0.05 + 0.9 * (cf.coords[i].first - xmin) / sx,
                          0.05 + 0.9 * (cf.coords[i].second - ymin) / sy};
            }
        } else if (is_planar(g) && is_connected(g)) {
            pts = tutte_layout(g);
        } else {
            pts = force_layout(g, opt.seed);
        }
        auto X = [&](int v) { return 0.05 * opt.width + 0.9 * opt.width * pts[v].first; };
        auto Y = [&](int v) { return 0.05 * opt.height + 0.9 * opt.height * pts[v].second; };

        std::set<std::pair<int, int>> removed(rep.removed_edges.begin(),
                                              rep.removed_edges.end());
        for (const auto& e : g.edges()) {
            int lu = g.label(e.u), lv = g.label(e.v);
            bool dashed = removed.count({std::min(lu, lv), std::max(lu, lv)}) > 0;
            svg << "  <line x1=\"" << X(e.u) << "\" y1=\"" << Y(e.u) << "\" x2=\""
                << X(e.v) << "\" y2=\"" << Y(e.v) << "\" stroke=\""
                << (dashed ? "#999" : "#444") << "\" stroke-width=\"1\""
                << (dashed ? " stroke-dasharray=\"5,4\"" : "") << "/>\n";
        }
        std::set<int> members(rep.members.begin(), rep.members.end());
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (members.count(g.label(v))) {
                svg << "  <rect class=\"member\" x=\"" << X(v) - 6 << "\" y=\""
                    << Y(v) - 6 << "\" width=\"12\" height=\"12\" fill=\"red\"/>\n";
            } else {
                svg << "  <circle cx=\"" << X(v) << "\" cy=\"" << Y(v)
                    << "\" r=\"4\" fill=\"#2266cc\"/>\n";
            }
            svg << "  <text x=\"" << X(v) + 7 << "\" y=\"" << Y(v) - 7
                << "\" font-size=\"9\">" << g.label(v) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gridset
