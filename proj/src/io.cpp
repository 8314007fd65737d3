#include "minkcx/io.hpp"

#include "minkcx/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace minkcx {

using json = nlohmann::ordered_json;

namespace {

json rational_to_json(const Rational& r) {
    if (is_integral(r)) {
        const Integer num = numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(num);
    }
    return to_string(r);
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw ParseError(where + ": floating-point coordinates are not accepted; use \"p/q\"");
    throw ParseError(where + ": expected an integer or a fraction string");
}

RatVector vector_from_json(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(dim))
        throw ParseError(where + ": expected a coordinate list of length " + std::to_string(dim));
    RatVector v(static_cast<std::size_t>(dim));
    for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = rational_from_json(j[c], where + "[" + std::to_string(c) + "]");
    return v;
}

json vector_to_json(const RatVector& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(rational_to_json(c));
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
}

int int_field(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError("missing or non-integer field \"" + key + "\"");
    return j[key].get<int>();
}

}  // namespace

SimplicialComplex parse_complex_doc(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("complex document must be an object");
    const int n = int_field(j, "n");
    if (n < 0 || n > kMaxVertices)
        throw ParseError("n = " + std::to_string(n) + " outside [0.." +
                         std::to_string(kMaxVertices) + "]");
    const bool is_void = j.value("void", false);
    if (!j.contains("facets") || !j["facets"].is_array())
        throw ParseError("missing facet list");
    std::vector<std::vector<int>> facets;
    for (std::size_t f = 0; f < j["facets"].size(); ++f) {
        const json& jf = j["facets"][f];
        if (!jf.is_array()) throw ParseError("facets[" + std::to_string(f) + "] is not a list");
        std::vector<int> facet;
        for (const auto& v : jf) {
            if (!v.is_number_integer())
                throw ParseError("facets[" + std::to_string(f) + "] has a non-integer vertex");
            const int vi = v.get<int>();
            if (vi < 1 || vi > n)
                throw ParseError("facets[" + std::to_string(f) + "]: vertex " + std::to_string(vi) +
                                 " out of range [1.." + std::to_string(n) + "]");
            facet.push_back(vi);
        }
        facets.push_back(std::move(facet));
    }
    if (is_void) {
        if (!facets.empty()) throw ParseError("a void complex cannot list facets");
        return void_complex(n);
    }
    if (facets.empty())
        throw ParseError("facet list is empty; use \"void\": true for the void complex");
    return from_facets(n, facets);
}

std::string complex_doc(const SimplicialComplex& cx) {
    json j;
    j["n"] = cx.n;
    json facets = json::array();
    for (Subset f : cx.facets) facets.push_back(subset_vertices(f));
    j["facets"] = std::move(facets);
    if (cx.is_void) j["void"] = true;
    return j.dump(2) + "\n";
}

PolytopeFamily parse_family_doc(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("family document must be an object");
    const int dim = int_field(j, "dim");
    if (dim < 0) throw ParseError("dim must be nonnegative");
    if (!j.contains("polytopes") || !j["polytopes"].is_array())
        throw ParseError("missing polytope list");
    std::vector<LatticePolytope> members;
    for (std::size_t p = 0; p < j["polytopes"].size(); ++p) {
        const json& jp = j["polytopes"][p];
        const std::string where = "polytopes[" + std::to_string(p) + "]";
        if (!jp.is_object() || !jp.contains("vertices") || !jp["vertices"].is_array() ||
            jp["vertices"].empty())
            throw ParseError(where + ": expected {\"vertices\": [...]} with at least one vertex");
        std::vector<RatVector> verts;
        for (std::size_t v = 0; v < jp["vertices"].size(); ++v)
            verts.push_back(vector_from_json(jp["vertices"][v],
                                             dim, where + ".vertices[" + std::to_string(v) + "]"));
        try {
            members.push_back(make_polytope(dim, std::move(verts)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (!j.contains("mu")) throw ParseError("missing basepoint \"mu\"");
    RatVector mu = vector_from_json(j["mu"], dim, "mu");
    try {
        return make_family(dim, std::move(members), std::move(mu));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string family_doc(const PolytopeFamily& fam) {
    json j;
    j["dim"] = fam.dim;
    json polys = json::array();
    for (const auto& p : fam.members) {
        json jp;
        json verts = json::array();
        for (const auto& v : p.vertices) verts.push_back(vector_to_json(v));
        jp["vertices"] = std::move(verts);
        polys.push_back(std::move(jp));
    }
    j["polytopes"] = std::move(polys);
    j["mu"] = vector_to_json(fam.basepoint);
    return j.dump(2) + "\n";
}

DiscreteFamily parse_discrete_doc(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("discrete family document must be an object");
    const int dim = int_field(j, "dim");
    if (dim < 0) throw ParseError("dim must be nonnegative");
    if (!j.contains("sets") || !j["sets"].is_array()) throw ParseError("missing set list");
    std::vector<std::vector<RatVector>> sets;
    for (std::size_t s = 0; s < j["sets"].size(); ++s) {
        const json& js = j["sets"][s];
        const std::string where = "sets[" + std::to_string(s) + "]";
        if (!js.is_array() || js.empty())
            throw ParseError(where + ": expected a nonempty point list");
        std::vector<RatVector> points;
        for (std::size_t p = 0; p < js.size(); ++p)
            points.push_back(vector_from_json(js[p], dim, where + "[" + std::to_string(p) + "]"));
        sets.push_back(std::move(points));
    }
    if (!j.contains("mu")) throw ParseError("missing basepoint \"mu\"");
    RatVector mu = vector_from_json(j["mu"], dim, "mu");
    try {
        return make_discrete_family(dim, std::move(sets), std::move(mu));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string discrete_doc(const DiscreteFamily& dfam) {
    json j;
    j["dim"] = dfam.dim;
    json sets = json::array();
    for (const auto& s : dfam.sets) {
        json points = json::array();
        for (const auto& p : s) points.push_back(vector_to_json(p));
        sets.push_back(std::move(points));
    }
    j["sets"] = std::move(sets);
    j["mu"] = vector_to_json(dfam.basepoint);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace minkcx
