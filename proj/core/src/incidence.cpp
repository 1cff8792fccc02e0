#include "legreal/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace legreal {

namespace {

std::string pt_str(const FrontPoint& p) {
    std::ostringstream os;
    os << "(" << p.y.get_str() << ", " << p.z.get_str() << ")";
    return os.str();
}

struct EdgeRec {
    int strand;
    std::size_t index;
    FrontPoint a, b;
    Rat slope;
    double ylo, yhi, zlo, zhi;  // conservative outward-rounded box
};

void set_box(EdgeRec& e) {
    auto [y1l, y1h] = rat_double_bounds(e.a.y);
    auto [y2l, y2h] = rat_double_bounds(e.b.y);
    auto [z1l, z1h] = rat_double_bounds(e.a.z);
    auto [z2l, z2h] = rat_double_bounds(e.b.z);
    e.ylo = std::min(y1l, y2l);
    e.yhi = std::max(y1h, y2h);
    e.zlo = std::min(z1l, z2l);
    e.zhi = std::max(z1h, z2h);
}

bool boxes_disjoint(const EdgeRec& e, const EdgeRec& f) {
    return e.yhi < f.ylo || f.yhi < e.ylo || e.zhi < f.zlo || f.zhi < e.zlo;
}

bool on_segment_collinear(const FrontPoint& p, const FrontPoint& a, const FrontPoint& b) {
    // assumes p collinear with ab
    const Rat& lo = a.y < b.y ? a.y : b.y;
    const Rat& hi = a.y < b.y ? b.y : a.y;
    if (lo == hi) {  // should not happen (no vertical edges) but stay safe
        const Rat& zlo = a.z < b.z ? a.z : b.z;
        const Rat& zhi = a.z < b.z ? b.z : a.z;
        return p.y == a.y && zlo <= p.z && p.z <= zhi;
    }
    return lo <= p.y && p.y <= hi;
}

FrontPoint line_intersection(const FrontPoint& p1, const FrontPoint& p2,
                             const FrontPoint& q1, const FrontPoint& q2) {
    // Non-parallel lines (p1p2), (q1q2).
    Rat a1 = p2.z - p1.z, b1 = p1.y - p2.y;
    Rat c1 = a1 * p1.y + b1 * p1.z;
    Rat a2 = q2.z - q1.z, b2 = q1.y - q2.y;
    Rat c2 = a2 * q1.y + b2 * q1.z;
    Rat det = a1 * b2 - a2 * b1;
    FrontPoint r;
    r.y = (c1 * b2 - c2 * b1) / det;
    r.z = (a1 * c2 - a2 * c1) / det;
    return r;
}

struct PairKey {
    int sa;
    std::size_t ea;
    int sb;
    std::size_t eb;
    bool operator<(const PairKey& o) const {
        if (sa != o.sa) return sa < o.sa;
        if (ea != o.ea) return ea < o.ea;
        if (sb != o.sb) return sb < o.sb;
        return eb < o.eb;
    }
};

} // namespace

int orient(const FrontPoint& a, const FrontPoint& b, const FrontPoint& c) {
    Rat d = (b.y - a.y) * (c.z - a.z) - (b.z - a.z) * (c.y - a.y);
    return rat_sign(d);
}

SegPairResult classify_segments(const FrontPoint& p1, const FrontPoint& p2,
                                const FrontPoint& q1, const FrontPoint& q2) {
    int d1 = orient(q1, q2, p1);
    int d2 = orient(q1, q2, p2);
    int d3 = orient(p1, p2, q1);
    int d4 = orient(p1, p2, q2);

    if (d1 == 0 && d2 == 0) {
        // collinear: compare y-intervals (edges are never vertical)
        Rat plo = p1.y < p2.y ? p1.y : p2.y, phi = p1.y < p2.y ? p2.y : p1.y;
        Rat qlo = q1.y < q2.y ? q1.y : q2.y, qhi = q1.y < q2.y ? q2.y : q1.y;
        Rat lo = plo > qlo ? plo : qlo;
        Rat hi = phi < qhi ? phi : qhi;
        if (lo > hi) return {SegRel::Disjoint, std::nullopt};
        if (lo == hi) {
            FrontPoint t;
            t.y = lo;
            t.z = p1.y == lo ? p1.z : (p2.y == lo ? p2.z : (q1.y == lo ? q1.z : q2.z));
            return {SegRel::Touch, t};
        }
        return {SegRel::Overlap, std::nullopt};
    }

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return {SegRel::InteriorCross, line_intersection(p1, p2, q1, q2)};
    }

    // touching cases: an endpoint of one lies on the other
    auto touch = [&](const FrontPoint& p, const FrontPoint& a, const FrontPoint& b,
                     bool col) -> std::optional<FrontPoint> {
        if (col && on_segment_collinear(p, a, b)) return p;
        return std::nullopt;
    };
    if (auto t = touch(p1, q1, q2, d1 == 0)) return {SegRel::Touch, t};
    if (auto t = touch(p2, q1, q2, d2 == 0)) return {SegRel::Touch, t};
    if (auto t = touch(q1, p1, p2, d3 == 0)) return {SegRel::Touch, t};
    if (auto t = touch(q2, p1, p2, d4 == 0)) return {SegRel::Touch, t};
    return {SegRel::Disjoint, std::nullopt};
}

std::vector<CuspInfo> analyze_cusps(const FrontStrand& strand) {
    std::vector<CuspInfo> out;
    std::size_t n = strand.points.size();
    std::size_t ec = strand.edge_count();
    if (ec < 2) return out;

    for (std::size_t v : strand.cusps) {
        if (!strand.closed && (v == 0 || v + 1 >= n)) continue;
        CuspInfo info;
        info.vertex = v;
        std::size_t e_in = strand.closed ? (v + ec - 1) % ec : v - 1;
        std::size_t e_out = v % ec;
        info.ray_slope = strand.slope(e_out);
        info.ray_dir = strand.y_dir(e_out);

        // walk forward from the cusp along the out-branch while collinear
        auto walk = [&](bool forward) {
            std::vector<std::size_t> run;
            std::optional<std::size_t> sep;
            bool degen = false;
            std::size_t e = forward ? e_out : e_in;
            int steps = 0;
            while (true) {
                run.push_back(e);
                ++steps;
                if (steps > static_cast<int>(ec)) { degen = true; break; }
                std::size_t far_vertex = forward ? (e + 1) % n : e % n;
                if (!strand.closed) {
                    far_vertex = forward ? e + 1 : e;
                    if ((forward && far_vertex + 1 >= n) || (!forward && far_vertex == 0)) {
                        // reached the strand end while still on the ray
                        sep = far_vertex;
                        degen = true;
                        break;
                    }
                }
                std::size_t e_next;
                if (forward) {
                    e_next = (e + 1);
                    if (strand.closed) e_next %= ec; else if (e_next >= ec) { sep = far_vertex; degen = true; break; }
                } else {
                    if (!strand.closed && e == 0) { sep = far_vertex; degen = true; break; }
                    e_next = strand.closed ? (e + ec - 1) % ec : e - 1;
                }
                bool reverses = strand.is_cusp(far_vertex);
                Rat next_slope = strand.slope(e_next);
                if (reverses) {
                    if (next_slope == info.ray_slope) { degen = true; }
                    sep = far_vertex;
                    if (!degen) degen = true;  // reversal while collinear: nested cusp
                    break;
                }
                if (next_slope != info.ray_slope) {
                    sep = far_vertex;
                    break;
                }
                e = e_next;
            }
            return std::tuple<std::vector<std::size_t>, std::optional<std::size_t>, bool>(run, sep, degen);
        };

        auto [out_run, out_sep, out_degen] = walk(true);
        auto [in_run, in_sep, in_degen] = walk(false);
        info.out_run = out_run;
        info.in_run = in_run;

        auto run_extent = [&](const std::vector<std::size_t>& run) {
            Rat len = 0;
            for (std::size_t e : run) {
                auto [a, b] = strand.edge(e);
                len += rat_abs(b.y - a.y);
            }
            return len;
        };
        Rat out_len = run_extent(out_run);
        Rat in_len = run_extent(in_run);

        if (out_degen && in_degen) {
            info.degenerate = true;
            out.push_back(info);
            continue;
        }
        bool shorter_is_out;
        std::optional<std::size_t> sep;
        bool sep_degen;
        if (out_degen) { shorter_is_out = false; sep = in_sep; sep_degen = in_degen; }
        else if (in_degen) { shorter_is_out = true; sep = out_sep; sep_degen = out_degen; }
        else if (out_len < in_len) { shorter_is_out = true; sep = out_sep; sep_degen = out_degen; }
        else if (in_len < out_len) { shorter_is_out = false; sep = in_sep; sep_degen = in_degen; }
        else { info.degenerate = true; out.push_back(info); continue; }

        if (sep_degen || !sep.has_value()) {
            info.degenerate = true;
            out.push_back(info);
            continue;
        }
        info.shorter_is_out = shorter_is_out;
        info.separation_vertex = sep;

        // slope of the shorter branch just past the separation vertex
        std::size_t w = *sep;
        std::size_t e_turn;
        if (shorter_is_out) {
            e_turn = strand.closed ? w % ec : w;  // edge leaving w forward
        } else {
            e_turn = strand.closed ? (w + ec - 1) % ec : w - 1;  // edge entering w, continued backward
        }
        Rat turn_slope = strand.slope(e_turn);
        int above = rat_sign((turn_slope - info.ray_slope) * Rat(info.ray_dir));
        if (above == 0) {
            info.degenerate = true;
        } else {
            info.determined = true;
            bool shorter_above = above > 0;
            info.upper_is_out = (shorter_above == info.shorter_is_out);
        }
        out.push_back(info);
    }
    return out;
}

IncidenceResult analyze_diagram(const FrontDiagram& diagram, const IncidenceOptions& opt) {
    IncidenceResult res;
    auto report = [&](const std::string& kind, const std::string& detail,
                      std::optional<FrontPoint> where = std::nullopt) {
        res.violations.push_back({kind, detail, where});
    };

    // Collect edges.
    std::vector<EdgeRec> edges;
    for (int s = 0; s < static_cast<int>(diagram.strands.size()); ++s) {
        const FrontStrand& st = diagram.strands[s];
        for (std::size_t e = 0; e < st.edge_count(); ++e) {
            auto [a, b] = st.edge(e);
            if (a.y == b.y) continue;  // vertical edges are reported by check_strand
            EdgeRec rec{s, e, a, b, st.slope(e), 0, 0, 0, 0};
            set_box(rec);
            edges.push_back(rec);
        }
    }

    // Expected incidences derived from cusp local models:
    //  - edge pairs lying on a common cusp ray (sibling runs) may overlap;
    //  - the shorter run's vertices may sit on the longer run's edges.
    std::set<std::pair<PairKey, int>> dummy;
    std::set<PairKey> ray_pairs;
    std::set<std::pair<PairKey, std::string>> sep_touches;  // pair + point string
    std::vector<std::vector<CuspInfo>> cusp_infos(diagram.strands.size());
    for (int s = 0; s < static_cast<int>(diagram.strands.size()); ++s) {
        cusp_infos[s] = analyze_cusps(diagram.strands[s]);
        for (const CuspInfo& ci : cusp_infos[s]) {
            if (ci.degenerate && !ci.separation_vertex) {
                report("DegenerateCusp", "cusp branches do not separate", diagram.strands[s].points[ci.vertex]);
                continue;
            }
            for (std::size_t ea : ci.in_run) {
                for (std::size_t eb : ci.out_run) {
                    PairKey k{s, std::min(ea, eb), s, std::max(ea, eb)};
                    ray_pairs.insert(k);
                }
            }
        }
    }

    // Vertex positions: strand vertices and declared diagram vertices.
    // Track exact coincidences.
    std::map<FrontPoint, std::vector<std::pair<int, std::size_t>>> vertex_map;
    for (int s = 0; s < static_cast<int>(diagram.strands.size()); ++s) {
        const FrontStrand& st = diagram.strands[s];
        for (std::size_t i = 0; i < st.points.size(); ++i)
            vertex_map[st.points[i]].push_back({s, i});
    }
    std::set<FrontPoint> declared;
    for (const auto& v : diagram.vertices) declared.insert(v.at);

    for (auto& [pt, refs] : vertex_map) {
        if (refs.size() < 2) continue;
        if (declared.count(pt)) continue;  // graph vertex: ends meet by design
        report("CoincidentVertices", "distinct strand vertices share position", pt);
    }

    // Structural adjacency: edges sharing a strand vertex, or both ending at a
    // declared diagram vertex.
    auto strand_adjacent = [&](const EdgeRec& e, const EdgeRec& f) {
        if (e.strand != f.strand) return false;
        const FrontStrand& st = diagram.strands[e.strand];
        std::size_t n = st.points.size();
        std::size_t ec = st.edge_count();
        auto touch_vertices = [&](const EdgeRec& r) {
            return std::pair<std::size_t, std::size_t>(r.index % n, (r.index + 1) % n);
        };
        auto [a1, a2] = touch_vertices(e);
        auto [b1, b2] = touch_vertices(f);
        (void)ec;
        return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
    };
    auto edge_endpoint_at = [&](const EdgeRec& e, const FrontPoint& p) {
        return e.a == p || e.b == p;
    };

    std::map<FrontPoint, int> crossing_points;  // multiplicity check (triple points)

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const EdgeRec& e = edges[i];
            const EdgeRec& f = edges[j];
            if (boxes_disjoint(e, f)) continue;
            PairKey key{e.strand, e.index, f.strand, f.index};
            bool sibling = ray_pairs.count(key) > 0;

            SegPairResult r = classify_segments(e.a, e.b, f.a, f.b);
            if (r.rel == SegRel::Disjoint) continue;

            if (r.rel == SegRel::Overlap) {
                if (sibling) continue;  // cusp-branch overlap is the local model
                report(opt.embedded_only ? "LiftRetrace" : "OverlappingSegments",
                       "collinear segments share a subsegment", e.a);
                continue;
            }

            if (r.rel == SegRel::InteriorCross) {
                if (e.slope == f.slope) {
                    report("TangentialCrossing", "crossing with equal slopes", *r.at);
                    continue;
                }
                if (opt.collect_crossings) {
                    Crossing c;
                    c.strand_a = e.strand;
                    c.edge_a = e.index;
                    c.strand_b = f.strand;
                    c.edge_b = f.index;
                    c.at = *r.at;
                    c.slope_a = e.slope;
                    c.slope_b = f.slope;
                    res.crossings.push_back(c);
                }
                crossing_points[*r.at] += 1;
                continue;
            }

            // Touch: a single shared point involving at least one endpoint.
            const FrontPoint& t = *r.at;
            bool e_end = edge_endpoint_at(e, t);
            bool f_end = edge_endpoint_at(f, t);
            if (e_end && f_end) {
                bool adjacent = strand_adjacent(e, f);
                bool at_declared = declared.count(t) > 0;
                if (adjacent || at_declared) continue;  // shared vertex by structure
                if (sibling) continue;
                report("EndpointContact", "edges touch at a non-structural shared endpoint", t);
                continue;
            }
            // vertex of one edge interior to the other
            if (sibling) continue;
            // allowed: separation vertex of a cusp run on the longer run edge,
            // or an edge incident to that vertex touching the covering edge.
            bool allowed = false;
            {
                int vs = e_end ? e.strand : f.strand;
                const EdgeRec& cover = e_end ? f : e;
                if (vs == cover.strand) {
                    for (const CuspInfo& ci : cusp_infos[vs]) {
                        if (!ci.separation_vertex) continue;
                        const FrontStrand& st = diagram.strands[vs];
                        const FrontPoint& w = st.points[*ci.separation_vertex % st.points.size()];
                        if (!(w == t)) continue;
                        const auto& longer = ci.shorter_is_out ? ci.in_run : ci.out_run;
                        for (std::size_t le : longer)
                            if (le == cover.index) { allowed = true; break; }
                        if (allowed) break;
                    }
                }
            }
            if (allowed) continue;
            if (declared.count(t)) {
                report("EdgeThroughVertex", "edge passes through a declared vertex", t);
            } else {
                report("VertexOnEdge", "strand vertex lies interior to another edge", t);
            }
        }
    }

    for (auto& [pt, count] : crossing_points) {
        if (count > 1) report("TriplePoint", "multiple crossings at one point", pt);
        if (vertex_map.count(pt)) report("CrossingAtVertex", "crossing coincides with a vertex", pt);
    }

    if (opt.embedded_only) {
        // keep only violations that certify a non-embedded lift
        std::vector<Violation> keep;
        for (auto& v : res.violations) {
            if (v.kind == "LiftRetrace" || v.kind == "OverlappingSegments" ||
                v.kind == "CoincidentVertices" || v.kind == "VertexOnEdge" ||
                v.kind == "TangentialCrossing" || v.kind == "EndpointContact")
                keep.push_back(v);
        }
        res.violations = keep;
    }
    (void)pt_str;
    return res;
}

} // namespace legreal
