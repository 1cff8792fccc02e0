#include "legreal/graph.hpp"

#include <algorithm>
#include <map>

#include "legreal/errors.hpp"
#include "legreal/incidence.hpp"

namespace legreal {

namespace {

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
    return *it;
}

// End slope and side of an edge strand at one of its endpoints.
std::pair<Rat, Side> end_geometry(const FrontStrand& s, bool at_start) {
    std::size_t e = at_start ? 0 : s.edge_count() - 1;
    auto [a, b] = s.edge(e);
    Rat slope = s.slope(e);
    const FrontPoint& vertex_pt = at_start ? a : b;
    const FrontPoint& other = at_start ? b : a;
    Side side = other.y < vertex_pt.y ? Side::Left : Side::Right;
    return {slope, side};
}

} // namespace

LegendrianGraphFront parse_lgf(const Json& doc) {
    if (need(doc, "format").get<std::string>() != "legreal.lgf/1")
        throw SchemaError("not a legreal.lgf/1 document");
    LegendrianGraphFront g;
    g.front = front_from_json(need(doc, "front"));
    if (!g.front.vertices.empty())
        throw SchemaError("lgf front must not carry its own vertex table");

    for (const auto& v : need(doc, "vertices")) {
        GraphVertex gv;
        gv.position = point_from_json(need(v, "at"));
        g.vertices.push_back(gv);
    }
    for (const auto& e : need(doc, "edges")) {
        GraphEdge ge;
        ge.strand = need(e, "strand").get<int>();
        ge.source = need(e, "source").get<int>();
        ge.target = need(e, "target").get<int>();
        if (ge.strand < 0 || ge.strand >= static_cast<int>(g.front.strands.size()))
            throw SchemaError("edge references missing strand");
        if (ge.source < 0 || ge.source >= static_cast<int>(g.vertices.size()) ||
            ge.target < 0 || ge.target >= static_cast<int>(g.vertices.size()))
            throw SchemaError("edge references missing vertex");
        g.edges.push_back(ge);
    }
    if (g.edges.size() != g.front.strands.size())
        throw SchemaError("every strand must be claimed by exactly one edge");
    std::vector<bool> claimed(g.front.strands.size(), false);
    for (const auto& e : g.edges) {
        if (claimed[e.strand]) throw SchemaError("strand claimed twice");
        claimed[e.strand] = true;
        const FrontStrand& s = g.front.strands[e.strand];
        if (s.closed || s.points.size() < 2) throw SchemaError("edge strand must be open");
        if (!(s.points.front() == g.vertices[e.source].position))
            throw SchemaError("strand start does not match source vertex");
        if (!(s.points.back() == g.vertices[e.target].position))
            throw SchemaError("strand end does not match target vertex");
    }

    for (const auto& s : g.front.strands) {
        auto r = check_strand(s);
        if (!r.ok()) throw GenericityError("strand geometry: " + r.summary());
    }

    // populate the diagram vertex table and the cyclic orders
    for (int vi = 0; vi < static_cast<int>(g.vertices.size()); ++vi) {
        GraphVertex& gv = g.vertices[vi];
        DiagramVertex dv;
        dv.at = gv.position;
        std::vector<EdgeEnd> ends;
        for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
            const GraphEdge& ge = g.edges[ei];
            const FrontStrand& s = g.front.strands[ge.strand];
            if (ge.source == vi) {
                auto [slope, side] = end_geometry(s, true);
                ends.push_back({ei, true, slope, side});
                dv.ends.push_back({ge.strand, true});
            }
            if (ge.target == vi) {
                auto [slope, side] = end_geometry(s, false);
                ends.push_back({ei, false, slope, side});
                dv.ends.push_back({ge.strand, false});
            }
        }
        if (ends.size() < 2) throw ValencyOneVertexError("vertex of valency < 2");
        std::stable_sort(ends.begin(), ends.end(), [](const EdgeEnd& a, const EdgeEnd& b) {
            if (a.side != b.side) return a.side == Side::Left;
            if (a.side == Side::Left) return a.slope > b.slope;
            return a.slope < b.slope;
        });
        gv.cyclic_ends = ends;
        g.front.vertices.push_back(dv);
    }
    return g;
}

Json lgf_to_json(const LegendrianGraphFront& g) {
    FrontDiagram bare = g.front;
    bare.vertices.clear();
    Json verts = Json::array();
    for (const auto& v : g.vertices) verts.push_back(Json{{"at", point_to_json(v.position)}});
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json{{"source", e.source}, {"strand", e.strand}, {"target", e.target}});
    return Json{{"edges", edges},
                {"format", "legreal.lgf/1"},
                {"front", front_to_json(bare)},
                {"vertices", verts}};
}

ValidationReport validate_graph(const LegendrianGraphFront& g) {
    ValidationReport rep = check_generic(g.front);

    // connectivity: every component must contain an edge, i.e. no vertex is
    // isolated and the edge graph is connected per component with >= 1 edge
    std::vector<int> comp(g.vertices.size(), -1);
    int ncomp = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (comp[v] != -1) continue;
        std::vector<std::size_t> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const auto& e : g.edges) {
                std::size_t nb;
                if (e.source == static_cast<int>(cur)) nb = e.target;
                else if (e.target == static_cast<int>(cur)) nb = e.source;
                else continue;
                if (comp[nb] == -1) {
                    comp[nb] = ncomp;
                    stack.push_back(nb);
                }
            }
        }
        ++ncomp;
    }
    std::vector<bool> has_edge(ncomp, false);
    for (const auto& e : g.edges) has_edge[comp[e.source]] = true;
    for (int c = 0; c < ncomp; ++c)
        if (!has_edge[c])
            rep.items.push_back({"IsolatedVertex", "component without edges", std::nullopt});
    return rep;
}

namespace {

// Positions (accumulated |dy| from the strand start) of every cusp and
// every crossing point on the given strand.
std::vector<Rat> obstruction_positions(const LegendrianGraphFront& g, int strand) {
    const FrontStrand& s = g.front.strands[strand];
    std::vector<Rat> cuts;
    Rat acc = 0;
    std::vector<Rat> edge_start_pos;
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
        edge_start_pos.push_back(acc);
        auto [a, b] = s.edge(e);
        acc += rat_abs(b.y - a.y);
    }
    for (std::size_t c : s.cusps) {
        if (c > 0 && c < s.points.size()) cuts.push_back(edge_start_pos[std::min<std::size_t>(c, edge_start_pos.size() - 1)]);
    }
    for (const auto& x : crossings(g.front)) {
        auto add = [&](int st, std::size_t e, const FrontPoint& at) {
            if (st != strand) return;
            auto [a, b] = s.edge(e);
            cuts.push_back(edge_start_pos[e] + rat_abs(at.y - a.y));
            (void)b;
        };
        add(x.strand_a, x.edge_a, x.at);
        add(x.strand_b, x.edge_b, x.at);
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

Rat strand_y_extent(const FrontStrand& s) {
    Rat acc = 0;
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
        auto [a, b] = s.edge(e);
        acc += rat_abs(b.y - a.y);
    }
    return acc;
}

// Point at accumulated |dy| position t along the strand, with the edge it
// lies on (ties resolved to the earlier edge's interior when possible).
std::pair<FrontPoint, std::size_t> point_at(const FrontStrand& s, const Rat& t) {
    Rat acc = 0;
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
        auto [a, b] = s.edge(e);
        Rat len = rat_abs(b.y - a.y);
        if (t <= acc + len) {
            Rat local = t - acc;
            Rat frac = local / len;
            FrontPoint p;
            p.y = a.y + frac * (b.y - a.y);
            p.z = a.z + frac * (b.z - a.z);
            return {p, e};
        }
        acc += len;
    }
    return {s.points.back(), s.edge_count() - 1};
}

FrontStrand sub_polyline(const FrontStrand& s, const Rat& from, const Rat& to) {
    FrontStrand out;
    auto [p0, e0] = point_at(s, from);
    auto [p1, e1] = point_at(s, to);
    out.points.push_back(p0);
    Rat acc = 0;
    std::map<std::size_t, std::size_t> index_map;  // strand vertex -> out index
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
        auto [a, b] = s.edge(e);
        Rat len = rat_abs(b.y - a.y);
        Rat end_pos = acc + len;
        if (end_pos > from && end_pos < to) {
            // interior vertex e+1 of the strand enters the window
            if (!(s.points[e + 1] == out.points.back())) {
                out.points.push_back(s.points[e + 1]);
            }
            index_map[e + 1] = out.points.size() - 1;
        }
        acc = end_pos;
    }
    if (!(p1 == out.points.back())) out.points.push_back(p1);
    for (std::size_t c : s.cusps) {
        auto it = index_map.find(c);
        if (it != index_map.end()) out.cusps.insert(it->second);
    }
    return out;
}

} // namespace

HandleExtents compute_extents(const LegendrianGraphFront& g) {
    HandleExtents ext;
    // shortest incident edge extent per vertex
    std::vector<Rat> min_extent(g.vertices.size(), Rat(0));
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<Rat> extents;
    for (const auto& e : g.edges) {
        Rat len = strand_y_extent(g.front.strands[e.strand]);
        extents.push_back(len);
        for (int v : {e.source, e.target}) {
            if (!seen[v] || len < min_extent[v]) min_extent[v] = len;
            seen[v] = true;
        }
    }

    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
        const GraphEdge& ge = g.edges[ei];
        const FrontStrand& s = g.front.strands[ge.strand];
        Rat total = extents[ei];
        std::vector<Rat> obstructions = obstruction_positions(g, ge.strand);

        auto collar = [&](bool at_source) {
            Rat bound = min_extent[at_source ? ge.source : ge.target] / 4;
            Rat first_obstruction = total;  // distance from this end
            for (const Rat& o : obstructions) {
                Rat d = at_source ? o : total - o;
                if (d > 0 && d < first_obstruction) first_obstruction = d;
            }
            Rat c = bound;
            if (c >= first_obstruction) c = first_obstruction / 2;
            if (c <= 0) throw DegenerateExtentError("collar collapsed to zero");
            return c;
        };
        Rat c_src = collar(true);
        Rat c_tgt = collar(false);

        HandleExtents::EdgeCut cut;
        auto [ps, es] = point_at(s, c_src);
        auto [pt, et] = point_at(s, total - c_tgt);
        cut.src_cut = ps;
        cut.tgt_cut = pt;
        cut.src_edge = es;
        cut.tgt_edge = et;
        cut.core = sub_polyline(s, c_src, total - c_tgt);
        cut.src_skeleton = sub_polyline(s, Rat(0), c_src);
        cut.tgt_skeleton = sub_polyline(s, total - c_tgt, total);
        ext.per_edge.push_back(cut);
    }
    return ext;
}

FrontStrand edge_core_segments(const LegendrianGraphFront& g, int edge,
                               const HandleExtents& extents) {
    (void)g;
    return extents.per_edge[edge].core;
}

} // namespace legreal
