#include "paulipt/contour.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace paulipt {

const char* to_string(FieldKind f) {
    switch (f) {
        case FieldKind::S: return "s";
        case FieldKind::H: return "h";
        case FieldKind::H0I: return "h0i";
        case FieldKind::DetRe: return "detre";
        case FieldKind::DetIm: return "detim";
    }
    return "?";
}

namespace {

// Grid edge id: ((j * stride + i) << 1) | orientation. Orientation 0 is the
// horizontal edge from node (i,j) to (i+1,j); 1 is vertical to (i,j+1).
using EdgeId = long long;

EdgeId edge_id(int i, int j, int orient, int stride) {
    return ((static_cast<long long>(j) * stride + i) << 1) | orient;
}

}  // namespace

ContourSet marching_squares(const BiPoly& f, double level, BBox bbox, int resolution) {
    if (resolution < 8) throw std::invalid_argument("marching_squares: resolution < 8");
    if (!(bbox.xmax > bbox.xmin) || !(bbox.ymax > bbox.ymin))
        throw DegenerateBox("marching_squares: degenerate bbox");

    const int n = resolution;
    const int stride = n + 1;
    const double dx = (bbox.xmax - bbox.xmin) / n;
    const double dy = (bbox.ymax - bbox.ymin) / n;

    BiPolyD fd(f);

    std::vector<double> vals(static_cast<size_t>(stride) * stride);
    std::vector<double> xs(static_cast<size_t>(stride)), ys(static_cast<size_t>(stride));
    for (int i = 0; i <= n; ++i) xs[static_cast<size_t>(i)] = bbox.xmin + dx * i;
    for (int j = 0; j <= n; ++j) ys[static_cast<size_t>(j)] = bbox.ymin + dy * j;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            vals[static_cast<size_t>(j) * stride + i] =
                fd.eval(xs[static_cast<size_t>(i)], ys[static_cast<size_t>(j)]) - level;

    auto val = [&](int i, int j) { return vals[static_cast<size_t>(j) * stride + i]; };

    std::map<EdgeId, std::array<double, 2>> crossing;
    auto cross_point = [&](int i, int j, int orient) {
        EdgeId id = edge_id(i, j, orient, stride);
        auto it = crossing.find(id);
        if (it != crossing.end()) return id;
        double va = val(i, j);
        double vb = orient == 0 ? val(i + 1, j) : val(i, j + 1);
        double t = (va == vb) ? 0.5 : va / (va - vb);
        t = std::clamp(t, 0.0, 1.0);
        std::array<double, 2> pt;
        if (orient == 0)
            pt = {xs[static_cast<size_t>(i)] + t * dx, ys[static_cast<size_t>(j)]};
        else
            pt = {xs[static_cast<size_t>(i)], ys[static_cast<size_t>(j)] + t * dy};
        crossing.emplace(id, pt);
        return id;
    };

    std::map<EdgeId, std::vector<EdgeId>> adjacency;
    auto add_segment = [&](EdgeId a, EdgeId b) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    };

    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int bl = val(i, j) >= 0.0;
            int br = val(i + 1, j) >= 0.0;
            int tr = val(i + 1, j + 1) >= 0.0;
            int tl = val(i, j + 1) >= 0.0;
            int config = bl | (br << 1) | (tr << 2) | (tl << 3);
            if (config == 0 || config == 15) continue;

            auto bottom = [&] { return cross_point(i, j, 0); };
            auto top = [&] { return cross_point(i, j + 1, 0); };
            auto left = [&] { return cross_point(i, j, 1); };
            auto right = [&] { return cross_point(i + 1, j, 1); };

            switch (config) {
                case 1: case 14: add_segment(left(), bottom()); break;
                case 2: case 13: add_segment(bottom(), right()); break;
                case 3: case 12: add_segment(left(), right()); break;
                case 4: case 11: add_segment(top(), right()); break;
                case 6: case 9:  add_segment(bottom(), top()); break;
                case 7: case 8:  add_segment(left(), top()); break;
                case 5: case 10: {
                    double cx = xs[static_cast<size_t>(i)] + 0.5 * dx;
                    double cy = ys[static_cast<size_t>(j)] + 0.5 * dy;
                    bool center_in = fd.eval(cx, cy) - level >= 0.0;
                    bool bl_in = config == 5 ? true : false;  // config 5: bl & tr inside
                    if (center_in == bl_in) {
                        add_segment(left(), top());
                        add_segment(bottom(), right());
                    } else {
                        add_segment(left(), bottom());
                        add_segment(top(), right());
                    }
                    break;
                }
            }
        }
    }

    // stitch segments into polylines: open chains first, then cycles
    ContourSet out;
    out.level = level;
    out.bbox = bbox;
    out.resolution = resolution;

    std::map<EdgeId, std::vector<bool>> visited;
    for (auto& [id, nbrs] : adjacency) visited[id] = std::vector<bool>(nbrs.size(), false);

    auto walk = [&](EdgeId start) {
        Polyline line;
        line.push_back(crossing[start]);
        EdgeId cur = start;
        EdgeId prev = -1;
        while (true) {
            auto& nbrs = adjacency[cur];
            auto& vis = visited[cur];
            int next_idx = -1;
            for (size_t m = 0; m < nbrs.size(); ++m) {
                if (!vis[m]) {
                    next_idx = static_cast<int>(m);
                    break;
                }
            }
            if (next_idx < 0) break;
            EdgeId nxt = nbrs[static_cast<size_t>(next_idx)];
            vis[static_cast<size_t>(next_idx)] = true;
            // mark reverse direction
            auto& rn = adjacency[nxt];
            auto& rv = visited[nxt];
            for (size_t m = 0; m < rn.size(); ++m) {
                if (rn[m] == cur && !rv[m]) {
                    rv[m] = true;
                    break;
                }
            }
            line.push_back(crossing[nxt]);
            prev = cur;
            cur = nxt;
            (void)prev;
        }
        return line;
    };

    for (auto& [id, nbrs] : adjacency) {
        if (nbrs.size() == 1) {
            bool any_unvisited = false;
            for (bool v : visited[id])
                if (!v) any_unvisited = true;
            if (!any_unvisited) continue;
            Polyline line = walk(id);
            if (line.size() > 1) out.polylines.push_back(std::move(line));
        }
    }
    for (auto& [id, nbrs] : adjacency) {
        bool any_unvisited = false;
        for (bool v : visited[id])
            if (!v) any_unvisited = true;
        if (!any_unvisited) continue;
        Polyline line = walk(id);
        if (line.size() > 1) out.polylines.push_back(std::move(line));
    }

    return out;
}

std::vector<std::array<double, 2>> contour_intersections(const ContourSet& a,
                                                         const ContourSet& b) {
    struct Seg {
        double x0, y0, x1, y1;
    };
    auto collect = [](const ContourSet& cs) {
        std::vector<Seg> segs;
        for (const auto& line : cs.polylines)
            for (size_t m = 0; m + 1 < line.size(); ++m)
                segs.push_back({line[m][0], line[m][1], line[m + 1][0], line[m + 1][1]});
        return segs;
    };
    auto sa = collect(a), sb = collect(b);

    std::vector<std::array<double, 2>> out;
    for (const auto& p : sa) {
        double pxmin = std::min(p.x0, p.x1), pxmax = std::max(p.x0, p.x1);
        double pymin = std::min(p.y0, p.y1), pymax = std::max(p.y0, p.y1);
        for (const auto& q : sb) {
            if (std::max(q.x0, q.x1) < pxmin || std::min(q.x0, q.x1) > pxmax ||
                std::max(q.y0, q.y1) < pymin || std::min(q.y0, q.y1) > pymax)
                continue;
            double rx = p.x1 - p.x0, ry = p.y1 - p.y0;
            double sx = q.x1 - q.x0, sy = q.y1 - q.y0;
            double denom = rx * sy - ry * sx;
            if (denom == 0.0) continue;
            double qpx = q.x0 - p.x0, qpy = q.y0 - p.y0;
            double t = (qpx * sy - qpy * sx) / denom;
            double u = (qpx * ry - qpy * rx) / denom;
            if (t < -1e-12 || t > 1.0 + 1e-12 || u < -1e-12 || u > 1.0 + 1e-12) continue;
            out.push_back({p.x0 + t * rx, p.y0 + t * ry});
        }
    }
    return out;
}

}  // namespace paulipt
