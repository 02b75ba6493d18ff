#include "bier/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bier {

using nlohmann::json;

Complex complex_from_json_text(const std::string& text)
{
    const json doc = json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("input must be a JSON object");
    if (!doc.contains("m") || !doc["m"].is_number_integer())
        throw std::invalid_argument("field \"m\" missing or not an integer");
    const int m = doc["m"].get<int>();
    if (m < 1 || m > 32) throw std::invalid_argument("field \"m\" must be in 1..32, got " + std::to_string(m));
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw std::invalid_argument("field \"facets\" missing or not an array");
    std::vector<VertexSubset> gens;
    std::size_t idx = 0;
    for (const auto& facet : doc["facets"]) {
        if (!facet.is_array())
            throw std::invalid_argument("facets[" + std::to_string(idx) + "] is not an array");
        std::vector<int> vs;
        for (const auto& v : facet) {
            if (!v.is_number_integer())
                throw std::invalid_argument("facets[" + std::to_string(idx) + "] contains a non-integer vertex");
            const int vi = v.get<int>();
            if (vi < 1 || vi > m)
                throw std::invalid_argument("facets[" + std::to_string(idx) + "] vertex " + std::to_string(vi) +
                                            " outside 1.." + std::to_string(m));
            vs.push_back(vi);
        }
        gens.push_back(VertexSubset::of(vs));
        ++idx;
    }
    return make_complex(m, gens);
}

Complex load_complex(const std::string& path_or_inline)
{
    if (!path_or_inline.empty() && path_or_inline.front() == '{') return complex_from_json_text(path_or_inline);
    std::ifstream in(path_or_inline);
    if (!in) throw std::invalid_argument("cannot open input file: " + path_or_inline);
    std::stringstream ss;
    ss << in.rdbuf();
    return complex_from_json_text(ss.str());
}

namespace {

json faces_json(const std::vector<VertexSubset>& faces)
{
    json arr = json::array();
    for (VertexSubset f : faces) {
        json face = json::array();
        for (int v : f.members()) face.push_back(v);
        arr.push_back(face);
    }
    return arr;
}

} // namespace

std::string complex_to_json(const Complex& K)
{
    json doc;
    doc["m"] = K.ground_size();
    doc["faces"] = faces_json(K.faces());
    return doc.dump();
}

std::string bier_to_json(const BierComplex& B)
{
    json doc;
    doc["base_m"] = B.base_m();
    doc["m"] = B.complex().ground_size();
    doc["faces"] = faces_json(B.complex().faces());
    return doc.dump();
}

} // namespace bier
