#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "legreal/rational.hpp"

namespace legreal {

struct FrontPoint {
    Rat y, z;
    bool operator==(const FrontPoint& o) const { return y == o.y && z == o.z; }
    bool operator<(const FrontPoint& o) const {
        return y < o.y || (y == o.y && z < o.z);
    }
};

/// Piecewise-linear strand in the (y,z)-plane. Cusp vertices are marked by
/// index; at a cusp the traversal direction in y reverses and the two
/// incident edge slopes coincide. No edge may be vertical.
struct FrontStrand {
    std::vector<FrontPoint> points;
    std::set<std::size_t> cusps;
    bool closed = false;

    std::size_t edge_count() const {
        if (points.size() < 2) return 0;
        return closed ? points.size() : points.size() - 1;
    }
    const FrontPoint& point(std::size_t i) const { return points[i % points.size()]; }
    std::pair<FrontPoint, FrontPoint> edge(std::size_t e) const {
        return {point(e), point(e + 1)};
    }
    Rat slope(std::size_t e) const {
        auto [a, b] = edge(e);
        return Rat(b.z - a.z) / Rat(b.y - a.y);
    }
    int y_dir(std::size_t e) const {
        auto [a, b] = edge(e);
        return b.y > a.y ? 1 : (b.y < a.y ? -1 : 0);
    }
    bool is_cusp(std::size_t vertex) const { return cusps.count(vertex) > 0; }

    FrontStrand reversed() const;
    FrontStrand translated(const Rat& dz) const;
    FrontStrand mirrored_z() const;
};

struct LiftedPoint {
    Rat x, y, z;
};

struct VertexEndRef {
    int strand = -1;
    bool at_start = true;
    bool operator==(const VertexEndRef& o) const {
        return strand == o.strand && at_start == o.at_start;
    }
};

struct DiagramVertex {
    FrontPoint at;
    std::vector<VertexEndRef> ends;
};

struct FrontDiagram {
    std::vector<FrontStrand> strands;
    std::vector<DiagramVertex> vertices;
};

struct Violation {
    std::string kind;
    std::string detail;
    std::optional<FrontPoint> where;
};

struct ValidationReport {
    std::vector<Violation> items;
    bool ok() const { return items.empty(); }
    std::string summary() const;
};

/// A transverse crossing between two edges; over/under is derived from the
/// slopes (the strand with the algebraically smaller slope has the larger
/// x-coordinate and passes in front).
struct Crossing {
    int strand_a = 0;
    std::size_t edge_a = 0;
    int strand_b = 0;
    std::size_t edge_b = 0;
    FrontPoint at;
    Rat slope_a, slope_b;
    bool a_over() const { return slope_a < slope_b; }
};

// -- operations ------------------------------------------------------------

/// Legendrian lift: two samples per edge (x constant on each edge, x = -slope).
std::vector<LiftedPoint> lift(const FrontStrand& strand);

/// Sum over edges of x * dy; equals z(start) - z(end), exactly 0 when closed.
Rat closure_integral(const FrontStrand& strand);

/// Local strand invariants: verticals, zero-length edges, direction
/// consistency at non-cusp vertices, cusp slope equality.
ValidationReport check_strand(const FrontStrand& strand);

/// Full genericity validation of a diagram against the admissible local
/// models: regular points, transverse double points with distinct slopes,
/// cusps, and declared vertices with pairwise distinct incidence slopes.
ValidationReport check_generic(const FrontDiagram& diagram);

/// All pairwise transverse crossings of a generic diagram.
std::vector<Crossing> crossings(const FrontDiagram& diagram);

/// True iff the Legendrian lift of the closed strand is embedded.
bool check_embedded(const FrontStrand& knot);

long writhe(const FrontStrand& knot);
long thurston_bennequin(const FrontStrand& knot);
long rotation_number(const FrontStrand& knot);

/// Linking number of two disjoint closed fronts (half the signed count of
/// inter-strand crossings).
long linking_number(const FrontStrand& a, const FrontStrand& b);

/// Smallest positive vertical distance between non-adjacent, non-sibling
/// features of the diagram; the scale guard for vertical perturbations.
/// Returns nullopt when the diagram has no such feature pair.
std::optional<Rat> min_vertical_feature_gap(const FrontDiagram& diagram);

} // namespace legreal
