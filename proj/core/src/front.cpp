#include "legreal/front.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "legreal/errors.hpp"
#include "legreal/incidence.hpp"

namespace legreal {

FrontStrand FrontStrand::reversed() const {
    FrontStrand r;
    r.closed = closed;
    std::size_t n = points.size();
    if (closed && n > 0) {
        // keep the base point: p0, p_{n-1}, ..., p_1
        r.points.push_back(points[0]);
        for (std::size_t k = 1; k < n; ++k) r.points.push_back(points[n - k]);
        for (std::size_t c : cusps) r.cusps.insert((n - c) % n);
    } else {
        r.points.assign(points.rbegin(), points.rend());
        for (std::size_t c : cusps) r.cusps.insert(n - 1 - c);
    }
    return r;
}

FrontStrand FrontStrand::translated(const Rat& dz) const {
    FrontStrand t = *this;
    for (auto& p : t.points) p.z += dz;
    return t;
}

FrontStrand FrontStrand::mirrored_z() const {
    FrontStrand t = *this;
    for (auto& p : t.points) p.z = -p.z;
    return t;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    if (items.empty()) return "clean";
    for (const auto& v : items) {
        os << v.kind;
        if (v.where) os << " at (" << v.where->y.get_str() << ", " << v.where->z.get_str() << ")";
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<LiftedPoint> lift(const FrontStrand& strand) {
    std::vector<LiftedPoint> out;
    for (std::size_t e = 0; e < strand.edge_count(); ++e) {
        auto [a, b] = strand.edge(e);
        if (a.y == b.y) throw VerticalEdgeError("vertical edge in front strand");
        Rat x = -strand.slope(e);
        out.push_back({x, a.y, a.z});
        out.push_back({x, b.y, b.z});
    }
    return out;
}

Rat closure_integral(const FrontStrand& strand) {
    Rat total = 0;
    for (std::size_t e = 0; e < strand.edge_count(); ++e) {
        auto [a, b] = strand.edge(e);
        if (a.y == b.y) throw VerticalEdgeError("vertical edge in front strand");
        Rat x = -strand.slope(e);
        total += x * (b.y - a.y);
    }
    return total;
}

ValidationReport check_strand(const FrontStrand& strand) {
    ValidationReport rep;
    auto bad = [&](const std::string& kind, const std::string& detail,
                   std::optional<FrontPoint> where = std::nullopt) {
        rep.items.push_back({kind, detail, where});
    };
    std::size_t n = strand.points.size();
    if (n < 2) {
        if (n != 0) bad("TooFewPoints", "strand needs at least two points");
        return rep;
    }
    if (strand.closed && n < 3) {
        bad("TooFewPoints", "closed strand needs at least three points");
        return rep;
    }
    std::size_t ec = strand.edge_count();
    for (std::size_t e = 0; e < ec; ++e) {
        auto [a, b] = strand.edge(e);
        if (a == b) bad("ZeroLengthEdge", "consecutive points coincide", a);
        else if (a.y == b.y) bad("VerticalEdge", "edge with zero y-extent", a);
    }
    if (!rep.ok()) return rep;

    for (std::size_t c : strand.cusps) {
        if (c >= n) { bad("BadCuspIndex", "cusp index out of range"); continue; }
        if (!strand.closed && (c == 0 || c == n - 1))
            bad("BadCuspIndex", "cusp marked at strand endpoint", strand.points[c]);
    }
    if (!rep.ok()) return rep;

    // direction consistency / cusp model at interior vertices
    std::size_t first_interior = strand.closed ? 0 : 1;
    std::size_t last_interior = strand.closed ? n - 1 : n - 2;
    for (std::size_t v = first_interior; v <= last_interior && n >= 2; ++v) {
        std::size_t e_in = strand.closed ? (v + ec - 1) % ec : v - 1;
        std::size_t e_out = v % ec;
        if (e_out >= ec) continue;
        int din = strand.y_dir(e_in);
        int dout = strand.y_dir(e_out);
        bool reverses = (din != dout);
        if (strand.is_cusp(v)) {
            if (!reverses)
                bad("CuspNoReversal", "marked cusp without y-reversal", strand.points[v]);
            else if (strand.slope(e_in) != strand.slope(e_out))
                bad("CuspSlopeMismatch", "cusp edges have different slopes", strand.points[v]);
        } else if (reverses) {
            bad("UnmarkedReversal", "y-direction reverses at a non-cusp vertex", strand.points[v]);
        }
    }
    return rep;
}

ValidationReport check_generic(const FrontDiagram& diagram) {
    ValidationReport rep;
    bool engine_safe = true;
    for (const auto& st : diagram.strands) {
        auto r = check_strand(st);
        for (auto& v : r.items) rep.items.push_back(v);
        if (!r.ok()) engine_safe = false;
    }

    // declared vertex incidences: strand ends present, distinct slopes
    for (const auto& vert : diagram.vertices) {
        std::vector<Rat> slopes;
        for (const auto& end : vert.ends) {
            if (end.strand < 0 || end.strand >= static_cast<int>(diagram.strands.size())) {
                rep.items.push_back({"BadVertexRef", "vertex references missing strand", vert.at});
                continue;
            }
            const FrontStrand& st = diagram.strands[end.strand];
            if (st.points.empty() || st.closed) {
                rep.items.push_back({"BadVertexRef", "vertex references closed or empty strand", vert.at});
                continue;
            }
            const FrontPoint& p = end.at_start ? st.points.front() : st.points.back();
            if (!(p == vert.at)) {
                rep.items.push_back({"VertexDetached", "strand end does not lie at its vertex", vert.at});
                continue;
            }
            std::size_t e = end.at_start ? 0 : st.edge_count() - 1;
            auto [a, b] = st.edge(e);
            if (a.y != b.y) slopes.push_back(st.slope(e));
        }
        std::sort(slopes.begin(), slopes.end());
        for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
            if (slopes[i] == slopes[i + 1])
                rep.items.push_back({"VertexSlopeClash", "equal incidence slopes at a vertex", vert.at});
    }

    if (engine_safe) {
        IncidenceOptions opt;
        opt.collect_crossings = false;
        auto res = analyze_diagram(diagram, opt);
        for (auto& v : res.violations) rep.items.push_back(v);
    }
    return rep;
}

std::vector<Crossing> crossings(const FrontDiagram& diagram) {
    IncidenceOptions opt;
    opt.collect_crossings = true;
    auto res = analyze_diagram(diagram, opt);
    return res.crossings;
}

bool check_embedded(const FrontStrand& knot) {
    if (!check_strand(knot).ok()) return false;
    FrontDiagram d;
    d.strands.push_back(knot);
    IncidenceOptions opt;
    opt.collect_crossings = false;
    opt.embedded_only = true;
    auto res = analyze_diagram(d, opt);
    return res.violations.empty();
}

namespace {

// Direction of travel of edge e (as a vector in the (y,z)-plane).
std::pair<Rat, Rat> edge_dir(const FrontStrand& st, std::size_t e) {
    auto [a, b] = st.edge(e);
    return {b.y - a.y, b.z - a.z};
}

long signed_crossing_sum(const FrontDiagram& d, bool inter_only) {
    auto xs = crossings(d);
    long sum = 0;
    for (const auto& c : xs) {
        if (inter_only && c.strand_a == c.strand_b) continue;
        if (!inter_only && c.strand_a != c.strand_b) continue;
        bool a_over = c.a_over();
        const FrontStrand& sa = d.strands[c.strand_a];
        const FrontStrand& sb = d.strands[c.strand_b];
        auto [oy, oz] = a_over ? edge_dir(sa, c.edge_a) : edge_dir(sb, c.edge_b);
        auto [uy, uz] = a_over ? edge_dir(sb, c.edge_b) : edge_dir(sa, c.edge_a);
        Rat det = oy * uz - oz * uy;
        sum += rat_sign(det);
    }
    return sum;
}

} // namespace

long writhe(const FrontStrand& knot) {
    FrontDiagram d;
    d.strands.push_back(knot);
    return signed_crossing_sum(d, false);
}

long thurston_bennequin(const FrontStrand& knot) {
    if (!knot.closed) throw Error("thurston_bennequin needs a closed strand");
    if (knot.cusps.size() % 2 != 0)
        throw OddCuspCountError("closed front with odd cusp count");
    return writhe(knot) - static_cast<long>(knot.cusps.size()) / 2;
}

long rotation_number(const FrontStrand& knot) {
    if (!knot.closed) throw Error("rotation_number needs a closed strand");
    auto infos = analyze_cusps(knot);
    long down = 0, up = 0;
    for (const auto& ci : infos) {
        if (!ci.determined)
            throw Error("rotation_number: cusp with undetermined branch order");
        if (ci.upper_is_out) ++up; else ++down;
    }
    return (down - up) / 2;
}

long linking_number(const FrontStrand& a, const FrontStrand& b) {
    FrontDiagram d;
    d.strands.push_back(a);
    d.strands.push_back(b);
    long sum = signed_crossing_sum(d, true);
    if (sum % 2 != 0) throw Error("linking_number: odd signed crossing sum");
    return sum / 2;
}

std::optional<Rat> min_vertical_feature_gap(const FrontDiagram& diagram) {
    struct Seg { FrontPoint a, b; int strand; std::size_t idx; };
    std::vector<Seg> segs;
    for (int s = 0; s < static_cast<int>(diagram.strands.size()); ++s) {
        const auto& st = diagram.strands[s];
        for (std::size_t e = 0; e < st.edge_count(); ++e) {
            auto [a, b] = st.edge(e);
            if (a.y == b.y) continue;
            segs.push_back({a, b, s, e});
        }
    }
    auto z_at = [](const Seg& s, const Rat& y) {
        Rat t = (y - s.a.y) / (s.b.y - s.a.y);
        return s.a.z + t * (s.b.z - s.a.z);
    };
    std::optional<Rat> best;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& p = segs[i];
            const Seg& q = segs[j];
            Rat plo = p.a.y < p.b.y ? p.a.y : p.b.y, phi = p.a.y < p.b.y ? p.b.y : p.a.y;
            Rat qlo = q.a.y < q.b.y ? q.a.y : q.b.y, qhi = q.a.y < q.b.y ? q.b.y : q.a.y;
            Rat lo = plo > qlo ? plo : qlo;
            Rat hi = phi < qhi ? phi : qhi;
            if (lo > hi) continue;
            Rat dlo = z_at(p, lo) - z_at(q, lo);
            Rat dhi = z_at(p, hi) - z_at(q, hi);
            int slo = rat_sign(dlo), shi = rat_sign(dhi);
            if (slo == 0 || shi == 0 || slo != shi) continue;  // touching or crossing pair
            Rat m = rat_abs(dlo) < rat_abs(dhi) ? rat_abs(dlo) : rat_abs(dhi);
            if (!best || m < *best) best = m;
        }
    }
    return best;
}

} // namespace legreal
