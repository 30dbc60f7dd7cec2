#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bga/brauer_graph.hpp"
#include "bga/ribbon_graph.hpp"

namespace bga {

/// Parses the JSON document format:
///   { "half_edges": 2E, "rho": [...], "iota": [...],
///     "multiplicity": [...],                (by canonical vertex id)
///     "edge_weight": [...],  (optional)     (by canonical edge id)
///     "arrow_degree": [...] } (optional)    (by half-edge id)
/// Absent optional arrays mean all-zero.  Ribbon graph axioms and array
/// shapes are validated; violations throw std::invalid_argument.
inline BrauerGraph parse_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("document must be a JSON object");

    auto int_array = [&](const char* key, bool required) -> std::vector<int> {
        if (!doc.contains(key)) {
            if (required) throw std::invalid_argument(std::string("missing key: ") + key);
            return {};
        }
        if (!doc[key].is_array()) {
            throw std::invalid_argument(std::string(key) + " must be an integer array");
        }
        std::vector<int> out;
        for (const auto& x : doc[key]) {
            if (!x.is_number_integer()) {
                throw std::invalid_argument(std::string(key) + " must be an integer array");
            }
            out.push_back(x.get<int>());
        }
        return out;
    };

    if (!doc.contains("half_edges") || !doc["half_edges"].is_number_integer()) {
        throw std::invalid_argument("missing or non-integer half_edges");
    }
    const int n = doc["half_edges"].get<int>();
    RibbonGraph g{int_array("rho", true), int_array("iota", true)};
    if (g.half_edge_count() != n || static_cast<int>(g.iota.size()) != n) {
        throw std::invalid_argument("rho/iota lengths disagree with half_edges");
    }
    require_valid(g);

    std::vector<int> mult = int_array("multiplicity", true);
    std::vector<int> weight = int_array("edge_weight", false);
    std::vector<int> degree = int_array("arrow_degree", false);
    return BrauerGraph(std::move(g), std::move(mult), std::move(weight), std::move(degree));
}

/// Canonical serialization: sorted keys, no whitespace, all-zero optional
/// arrays omitted.  parse(serialize(x)) == x and serialize(parse(s))
/// canonicalizes any valid document byte-exactly.
inline std::string serialize_document(const BrauerGraph& bg) {
    nlohmann::json doc;
    doc["half_edges"] = bg.half_edge_count();
    doc["rho"] = bg.graph().rho;
    doc["iota"] = bg.graph().iota;
    doc["multiplicity"] = bg.multiplicities();
    auto all_zero = [](const std::vector<int>& v) {
        for (int x : v)
            if (x != 0) return false;
        return true;
    };
    if (!all_zero(bg.edge_weights())) doc["edge_weight"] = bg.edge_weights();
    if (!all_zero(bg.arrow_degrees())) doc["arrow_degree"] = bg.arrow_degrees();
    return doc.dump();
}

}  // namespace bga
