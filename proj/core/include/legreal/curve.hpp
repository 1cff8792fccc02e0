#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legreal/front.hpp"
#include "legreal/json_io.hpp"

namespace legreal {

struct AbstractRibbon;

/// One pass of the curve through a 1-handle. `rank` is the 1-based height of
/// the strand inside the abstract handle, 1 = lowest.
struct Pass {
    int handle = -1;
    bool with_core = true;
    int rank = 1;
};

/// Simple closed curve on the abstract ribbon, as a cyclic pass word; the
/// 0-handle chords between consecutive passes are implied by the ranks and
/// validated for planarity.
struct CurveOnRibbon {
    std::vector<Pass> passes;
};

CurveOnRibbon parse_crv(const Json& doc);
Json crv_to_json(const CurveOnRibbon& c);

/// Endpoint of a pass on an attaching arc: which edge-end, and which rank
/// slot along the arc.
struct ArcSlot {
    int edge = -1;
    bool at_source = true;
    int rank = 1;
};

struct ChordSeg {
    int vertex = -1;
    ArcSlot from, to;  // exit slot of the previous pass, entry slot of the next
};

struct PassSeg {
    Pass pass;
    int src_vertex = -1, tgt_vertex = -1;  // vertices at the pass's entry/exit
};

/// Step-1 subdivision: alternating 1-handle passes and 0-handle chords,
/// starting with the distinguished pass. Junction j sits between segment j
/// and segment j+1 (cyclically); junction 2k-1 closes back to the start.
struct SegmentList {
    int n = 0;  // segment count, even
    std::vector<PassSeg> passes;   // n/2 entries, traversal order
    std::vector<ChordSeg> chords;  // chords[i] follows passes[i]
    bool reversed = false;
    int start_pass = 0;  // index into the original curve's pass list
};

void validate_curve(const AbstractRibbon& ribbon, const CurveOnRibbon& curve);

SegmentList subdivide(const AbstractRibbon& ribbon, const CurveOnRibbon& curve,
                      std::optional<int> start_pass = std::nullopt,
                      bool reverse_orientation = false);

} // namespace legreal
