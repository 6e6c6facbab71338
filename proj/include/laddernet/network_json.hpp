#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "network.hpp"

namespace laddernet {

namespace detail {

inline double require_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw schema_error(std::string("missing or non-numeric field: ") + key);
    return j[key].get<double>();
}

inline int require_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw schema_error(std::string("missing or non-integer field: ") + key);
    return j[key].get<int>();
}

}  // namespace detail

// Accepted document shape, closed to unknown keys:
//   { "vertices": k, "edges": [{"u","v","R","L","D"}...], "a0": v,
//     "boundary": [v...] }
// Vertices are labeled 0..k-1. Rejects anything else with schema_error.
inline Network parse_network_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw schema_error("document must be an object");
    for (const auto& item : doc.items()) {
        const std::string& k = item.key();
        if (k != "vertices" && k != "edges" && k != "a0" && k != "boundary")
            throw schema_error("unknown field: " + k);
    }

    const int count = detail::require_int(doc, "vertices");
    if (count < 2) throw schema_error("vertices must be at least 2");
    std::vector<int> vertices(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) vertices[static_cast<std::size_t>(i)] = i;

    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw schema_error("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_object()) throw schema_error("each edge must be an object");
        for (const auto& item : e.items()) {
            const std::string& k = item.key();
            if (k != "u" && k != "v" && k != "R" && k != "L" && k != "D")
                throw schema_error("unknown edge field: " + k);
        }
        const int u = detail::require_int(e, "u");
        const int v = detail::require_int(e, "v");
        if (u < 0 || u >= count || v < 0 || v >= count)
            throw schema_error("edge endpoint out of range");
        const double R = detail::require_number(e, "R");
        const double L = detail::require_number(e, "L");
        const double D = detail::require_number(e, "D");
        try {
            edges.push_back({u, v, EdgeParams(R, L, D)});
        } catch (const std::invalid_argument& ex) {
            throw schema_error(std::string("bad edge parameters: ") + ex.what());
        }
    }

    const int a0 = detail::require_int(doc, "a0");
    if (!doc.contains("boundary") || !doc["boundary"].is_array())
        throw schema_error("boundary must be an array");
    std::vector<int> boundary;
    for (const auto& b : doc["boundary"]) {
        if (!b.is_number_integer())
            throw schema_error("boundary entries must be integers");
        boundary.push_back(b.get<int>());
    }

    try {
        return Network(vertices, edges, a0, boundary);
    } catch (const std::invalid_argument& ex) {
        throw schema_error(std::string("invalid network: ") + ex.what());
    }
}

inline Network read_network_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network_json(buf.str());
}

// Serializes with vertices relabeled to the dense range 0..k-1 in ascending
// label order. Edges carrying a fixed admittance instead of R/L/D parameters
// have no representation here.
inline std::string write_network_json(const Network& net) {
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < net.vertices().size(); ++i)
        relabel[net.vertices()[i]] = static_cast<int>(i);

    nlohmann::json doc;
    doc["vertices"] = static_cast<int>(net.vertices().size());
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : net.edges()) {
        const EdgeParams* p = std::get_if<EdgeParams>(&e.weight);
        if (!p)
            throw schema_error("edge weight has no R/L/D representation");
        nlohmann::json je;
        je["u"] = relabel.at(e.u);
        je["v"] = relabel.at(e.v);
        je["R"] = p->R;
        je["L"] = p->L;
        je["D"] = p->D;
        doc["edges"].push_back(je);
    }
    doc["a0"] = relabel.at(net.a0());
    nlohmann::json jb = nlohmann::json::array();
    std::vector<int> boundary = net.boundary();
    std::sort(boundary.begin(), boundary.end());
    for (int b : boundary) jb.push_back(relabel.at(b));
    doc["boundary"] = jb;
    return doc.dump(2);
}

inline void save_network_json(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw schema_error("cannot open file for writing: " + path);
    out << write_network_json(net) << '\n';
}

}  // namespace laddernet
