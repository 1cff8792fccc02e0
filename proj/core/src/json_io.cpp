#include "legreal/json_io.hpp"

#include "legreal/errors.hpp"

namespace legreal {

namespace {

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
    return *it;
}

bool integer_string(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Json rat_to_json(const Rat& q) {
    auto [num, den] = rat_to_strings(q);
    return Json{{"den", den}, {"num", num}};
}

Rat rat_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("rational must be an object");
    std::string num = need(j, "num").get<std::string>();
    std::string den = need(j, "den").get<std::string>();
    if (!integer_string(num) || !integer_string(den))
        throw SchemaError("rational fields must be integer strings");
    Rat q = rat_from_strings(num, den);
    if (q.get_den() <= 0) throw SchemaError("rational denominator must be positive");
    return q;
}

Json point_to_json(const FrontPoint& p) {
    return Json{{"y", rat_to_json(p.y)}, {"z", rat_to_json(p.z)}};
}

FrontPoint point_from_json(const Json& j) {
    FrontPoint p;
    p.y = rat_from_json(need(j, "y"));
    p.z = rat_from_json(need(j, "z"));
    return p;
}

Json strand_to_json(const FrontStrand& s) {
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(point_to_json(p));
    Json cusps = Json::array();
    for (std::size_t c : s.cusps) cusps.push_back(c);
    return Json{{"closed", s.closed}, {"cusps", cusps}, {"points", pts}};
}

FrontStrand strand_from_json(const Json& j) {
    FrontStrand s;
    s.closed = need(j, "closed").get<bool>();
    for (const auto& p : need(j, "points")) s.points.push_back(point_from_json(p));
    for (const auto& c : need(j, "cusps")) {
        long v = c.get<long>();
        if (v < 0 || v >= static_cast<long>(s.points.size()))
            throw SchemaError("cusp index out of range");
        s.cusps.insert(static_cast<std::size_t>(v));
    }
    return s;
}

Json front_to_json(const FrontDiagram& d) {
    Json strands = Json::array();
    for (const auto& s : d.strands) strands.push_back(strand_to_json(s));
    Json verts = Json::array();
    for (const auto& v : d.vertices) {
        Json ends = Json::array();
        for (const auto& e : v.ends)
            ends.push_back(Json{{"end", e.at_start ? "src" : "tgt"}, {"strand", e.strand}});
        verts.push_back(Json{{"at", point_to_json(v.at)}, {"ends", ends}});
    }
    return Json{{"format", "legreal.front/1"}, {"strands", strands}, {"vertices", verts}};
}

FrontDiagram front_from_json(const Json& j) {
    if (need(j, "format").get<std::string>() != "legreal.front/1")
        throw SchemaError("not a legreal.front/1 document");
    FrontDiagram d;
    for (const auto& s : need(j, "strands")) d.strands.push_back(strand_from_json(s));
    for (const auto& v : need(j, "vertices")) {
        DiagramVertex dv;
        dv.at = point_from_json(need(v, "at"));
        for (const auto& e : need(v, "ends")) {
            VertexEndRef ref;
            ref.strand = need(e, "strand").get<int>();
            std::string end = need(e, "end").get<std::string>();
            if (end != "src" && end != "tgt") throw SchemaError("vertex end must be src or tgt");
            ref.at_start = end == "src";
            dv.ends.push_back(ref);
        }
        d.vertices.push_back(dv);
    }
    return d;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

} // namespace legreal
