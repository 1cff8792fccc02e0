#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "legreal/front.hpp"

namespace legreal {

// Exact segment-pair classification and the diagram-wide incidence scan.
// Everything downstream (genericity, embeddedness, crossing extraction,
// invariants) is built on this one engine.

enum class SegRel {
    Disjoint,
    InteriorCross,   // single point, interior to both
    Touch,           // single point, endpoint of at least one
    Overlap          // collinear, shared subsegment of positive length
};

struct SegPairResult {
    SegRel rel = SegRel::Disjoint;
    std::optional<FrontPoint> at;   // for InteriorCross / Touch
};

int orient(const FrontPoint& a, const FrontPoint& b, const FrontPoint& c);

SegPairResult classify_segments(const FrontPoint& p1, const FrontPoint& p2,
                                const FrontPoint& q1, const FrontPoint& q2);

/// Walk data for one cusp: the two collinear branch runs emanating from it,
/// where they separate, and which branch is locally the upper one.
struct CuspInfo {
    std::size_t vertex = 0;
    Rat ray_slope;
    int ray_dir = 0;                      // y-direction of the branches away from the cusp
    std::vector<std::size_t> in_run;      // edge ids of the incoming branch's collinear run
    std::vector<std::size_t> out_run;     // edge ids of the outgoing branch's run
    std::optional<std::size_t> separation_vertex; // far vertex of the shorter run
    bool shorter_is_out = false;
    bool determined = false;              // upper branch resolved
    bool upper_is_out = false;
    bool degenerate = false;              // nested reversal / no separation
};

std::vector<CuspInfo> analyze_cusps(const FrontStrand& strand);

struct IncidenceOptions {
    bool collect_crossings = true;
    bool embedded_only = false;  // report only lift-embeddedness violations
};

struct IncidenceResult {
    std::vector<Crossing> crossings;
    std::vector<Violation> violations;
};

IncidenceResult analyze_diagram(const FrontDiagram& diagram, const IncidenceOptions& opt);

} // namespace legreal
