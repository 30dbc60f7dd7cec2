#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bga/brauer_graph.hpp"

namespace bga {

/// Arrow alpha_h of the Brauer graph quiver: one arrow per half-edge h, from
/// the edge of h to the edge of rho(h).
struct Arrow {
    int id;      // = half-edge index
    int source;  // edge id of h
    int target;  // edge id of rho(h)
};

/// The closed path C^power where C winds the vertex of `start_half_edge` once:
/// traversed arrows are alpha_{rho^j(start)} for j = 0 .. arrow_count*power - 1.
struct CyclePower {
    int start_half_edge;
    int power;        // multiplicity of the winding vertex
    int arrow_count;  // valency of the winding vertex
    int length() const { return power * arrow_count; }
};

/// Commutation relation at one edge: lhs - sign * rhs, where both cycle
/// powers are the maximal closed paths based at that edge (one per incident
/// half-edge, the minimal half-edge on the left) and sign = (-1)^edge_weight.
struct CommutationRelation {
    int edge;
    CyclePower lhs;
    int sign;
    CyclePower rhs;
};

/// Quiver presentation of a (modified) Brauer graph algebra: quiver vertices
/// are the edges of the graph, plus the zero relations and the signed cycle
/// commutation relations.
struct QuiverPresentation {
    std::vector<int> quiver_vertices;                 // edge ids, ascending
    std::vector<Arrow> arrows;                        // by half-edge id
    std::vector<int> pi;                              // pi[alpha_h] = alpha_{rho^{-1}(h)}
    std::vector<std::pair<int, int>> zero_relations;  // (a, b): the path "b then a" is zero
    std::vector<CommutationRelation> commutation_relations;  // one per edge, by edge id
};

inline QuiverPresentation build_quiver(const BrauerGraph& bg) {
    require_connected(bg);
    const int n = bg.half_edge_count();
    QuiverPresentation q;
    q.quiver_vertices.resize(bg.edge_count());
    for (int e = 0; e < bg.edge_count(); ++e) q.quiver_vertices[e] = e;

    q.arrows.reserve(n);
    for (int h = 0; h < n; ++h) q.arrows.push_back({h, bg.edge_of(h), bg.edge_of(bg.rho(h))});

    std::vector<int> rho_inv(n);
    for (int h = 0; h < n; ++h) rho_inv[bg.rho(h)] = h;
    q.pi = rho_inv;

    // (a, b) composable means target(b) == source(a); the product is zero
    // unless a = pi^{-1}(b), i.e. a continues the winding of b.
    for (int b = 0; b < n; ++b) {
        const int target_b = q.arrows[b].target;
        auto [h1, h2] = bg.index().edge_half_edges(target_b);
        for (int a : {h1, h2}) {
            if (q.pi[a] != b) q.zero_relations.emplace_back(a, b);
        }
    }
    std::sort(q.zero_relations.begin(), q.zero_relations.end());

    for (int e = 0; e < bg.edge_count(); ++e) {
        auto [h, hbar] = bg.index().edge_half_edges(e);
        CommutationRelation rel;
        rel.edge = e;
        rel.lhs = {h, bg.multiplicity(bg.vertex_of(h)), bg.valency(bg.vertex_of(h))};
        rel.rhs = {hbar, bg.multiplicity(bg.vertex_of(hbar)), bg.valency(bg.vertex_of(hbar))};
        rel.sign = (bg.edge_weight(e) % 2 == 0) ? 1 : -1;
        q.commutation_relations.push_back(rel);
    }
    return q;
}

/// Arrow sequence of a cycle power in traversal order (first arrow first).
inline std::vector<int> cycle_word(const BrauerGraph& bg, const CyclePower& c) {
    std::vector<int> word;
    word.reserve(c.length());
    int h = c.start_half_edge;
    for (int i = 0; i < c.length(); ++i) {
        word.push_back(h);
        h = bg.rho(h);
    }
    return word;
}

}  // namespace bga
