#pragma once

#include <vector>

#include "legreal/front.hpp"
#include "legreal/json_io.hpp"

namespace legreal {

enum class Side { Left, Right };

/// One edge-end incident to a vertex, with the data the ribbon structure
/// needs: which edge, which end, the incidence slope, and the side from
/// which the edge approaches the vertex in the front.
struct EdgeEnd {
    int edge = -1;
    bool at_source = true;
    Rat slope;
    Side side = Side::Right;
    bool operator==(const EdgeEnd& o) const {
        return edge == o.edge && at_source == o.at_source;
    }
};

struct GraphVertex {
    FrontPoint position;
    /// Cyclic order around the vertex disk: ends approaching from the left
    /// by decreasing slope, then ends from the right by increasing slope.
    std::vector<EdgeEnd> cyclic_ends;
};

struct GraphEdge {
    int strand = -1;     // index into front.strands; oriented source -> target
    int source = -1;
    int target = -1;
};

struct LegendrianGraphFront {
    FrontDiagram front;
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;

    const FrontStrand& edge_strand(int e) const { return front.strands[edges[e].strand]; }
};

/// Collar/core split of every edge: the cut positions bounding the vertex
/// collars, measured in accumulated |dy| along the strand.
struct HandleExtents {
    struct EdgeCut {
        FrontPoint src_cut, tgt_cut;          // exact cut points
        std::size_t src_edge = 0, tgt_edge = 0; // edges of the strand containing the cuts
        FrontStrand core;                      // cut-to-cut sub-polyline
        FrontStrand src_skeleton;              // vertex -> src cut
        FrontStrand tgt_skeleton;              // tgt cut -> vertex
    };
    std::vector<EdgeCut> per_edge;
};

LegendrianGraphFront parse_lgf(const Json& doc);
Json lgf_to_json(const LegendrianGraphFront& g);

/// Validates geometry + graph structure; throws on schema errors, returns
/// the genericity report otherwise.
ValidationReport validate_graph(const LegendrianGraphFront& g);

HandleExtents compute_extents(const LegendrianGraphFront& g);

/// The Legendrian core of an edge's 1-handle (collars removed).
FrontStrand edge_core_segments(const LegendrianGraphFront& g, int edge,
                               const HandleExtents& extents);

} // namespace legreal
