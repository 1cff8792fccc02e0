#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legreal/curve.hpp"
#include "legreal/graph.hpp"

namespace legreal {

struct ZeroHandle {
    int vertex = -1;
    std::vector<EdgeEnd> attaching_arcs;  // cyclic, equals the vertex order
};

struct OneHandle {
    int edge = -1;
    FrontStrand core;
};

/// The abstract ribbon of a Legendrian graph: an oriented fatgraph with one
/// 0-handle per vertex and one 1-handle per edge, plus derived topology.
struct AbstractRibbon {
    std::vector<ZeroHandle> zero_handles;
    std::vector<OneHandle> one_handles;
    int euler = 0;      // V - E
    int boundary = 0;   // number of boundary components
    int genus = 0;

    int edge_source(int e) const { return sources[e]; }
    int edge_target(int e) const { return targets[e]; }
    std::vector<int> sources, targets;
    std::vector<std::string> boundary_words;
};

AbstractRibbon build_ribbon(const LegendrianGraphFront& graph);

/// Fatgraph constructor for combinatorial tests: per-vertex cyclic lists of
/// edge-ends, no geometry.
AbstractRibbon ribbon_from_fatgraph(const std::vector<std::vector<EdgeEnd>>& vertex_orders,
                                    const std::vector<std::pair<int, int>>& edge_endpoints);

struct BoundaryInfo {
    int count = 0;
    std::vector<std::string> words;
};

BoundaryInfo boundary_components(const AbstractRibbon& ribbon);

struct Z2Class {
    std::vector<int> per_handle;  // pass parity per 1-handle
    bool zero() const {
        for (int v : per_handle)
            if (v) return false;
        return true;
    }
};

struct HomologyVerdict {
    bool nontrivial = false;
    std::optional<int> witness_handle;  // first handle with odd pass count
};

HomologyVerdict is_homologically_nontrivial(const AbstractRibbon& ribbon,
                                            const CurveOnRibbon& curve);

struct OracleVerdict {
    Z2Class z2;
    bool nontrivial = false;
};

/// Independent check: builds the CW chain complex of the handle
/// decomposition, routes the curve in the 1-skeleton, and decides whether
/// its class vanishes in H_1 over Z/2 by linear algebra.
OracleVerdict z2_homology_oracle(const AbstractRibbon& ribbon, const CurveOnRibbon& curve);

Json ribbon_summary(const AbstractRibbon& ribbon);

/// Boundary front of the ribbon surface, for rendering: band sides as
/// vertical offsets of the cores, joined around the vertex disks.
FrontDiagram render_ribbon_front(const LegendrianGraphFront& graph);

} // namespace legreal
