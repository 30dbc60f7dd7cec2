#pragma once

#include <string>
#include <vector>

#include "bga/brauer_graph.hpp"

namespace bga {

/// Total arrow degree of the counterclockwise arrow path from `h_from` to
/// `h_to` inside one half-edge fan (both must sit at the same vertex).  Zero
/// steps when the two coincide.
inline int corner_degree(const BrauerGraph& bg, int h_from, int h_to) {
    if (bg.vertex_of(h_from) != bg.vertex_of(h_to)) {
        throw std::invalid_argument("corner_degree: half-edges at different vertices");
    }
    int deg = 0;
    int h = h_from;
    while (h != h_to) {
        deg += bg.arrow_degree(h);
        h = bg.rho(h);
    }
    return deg;
}

/// Corner degree measured from the canonical basepoint (minimal half-edge)
/// of the vertex fan.
inline int corner_prefix_degree(const BrauerGraph& bg, int h) {
    return corner_degree(bg, bg.index().vertex_half_edges(bg.vertex_of(h)).front(), h);
}

/// Admissibility of (arrow_degree, edge_weight):
///   (A1) around every vertex the arrow degrees sum to zero, so full cycles
///        are degree 0 and the relation ideal is homogeneous;
///   (A2) around every cycle of the underlying graph, the corner degrees and
///        the edge weights agree mod 2.
/// Under (A1) a corner's parity does not depend on which corner of a visit is
/// taken, so (A2) reduces to: the per-edge parity
///   L(e) = prefix(h) + prefix(iota h) + weight(e)  (mod 2)
/// must be a coboundary of a vertex potential, checked on a spanning tree
/// with every co-tree edge and loop verified.  Returns all violations.
inline std::vector<std::string> check_grading_admissible(const BrauerGraph& bg) {
    require_connected(bg);
    std::vector<std::string> out;
    for (int v = 0; v < bg.vertex_count(); ++v) {
        int sum = 0;
        for (int h : bg.index().vertex_half_edges(v)) sum += bg.arrow_degree(h);
        if (sum != 0) {
            out.push_back("A1: arrow degrees around vertex " + std::to_string(v) + " sum to " +
                          std::to_string(sum));
        }
    }

    auto edge_parity = [&](int e) {
        auto [h, hbar] = bg.index().edge_half_edges(e);
        int p = corner_prefix_degree(bg, h) + corner_prefix_degree(bg, hbar) + bg.edge_weight(e);
        return ((p % 2) + 2) % 2;
    };

    std::vector<int> phi(bg.vertex_count(), -1);
    phi[0] = 0;
    std::vector<int> stack{0};
    std::vector<char> edge_seen(bg.edge_count(), 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : bg.index().vertex_half_edges(v)) {
            int e = bg.edge_of(h);
            int w = bg.vertex_of(bg.iota(h));
            if (w == v) {
                if (!edge_seen[e] && edge_parity(e) != 0) {
                    out.push_back("A2: parity mismatch on loop edge " + std::to_string(e));
                }
                edge_seen[e] = 1;
                continue;
            }
            if (phi[w] < 0) {
                phi[w] = (phi[v] + edge_parity(e)) % 2;
                edge_seen[e] = 1;
                stack.push_back(w);
            } else if (!edge_seen[e]) {
                edge_seen[e] = 1;
                if ((phi[v] + phi[w] + edge_parity(e)) % 2 != 0) {
                    out.push_back("A2: parity mismatch on cycle through edge " + std::to_string(e));
                }
            }
        }
    }
    return out;
}

inline bool grading_admissible(const BrauerGraph& bg) {
    return check_grading_admissible(bg).empty();
}

inline void require_admissible(const BrauerGraph& bg) {
    auto diag = check_grading_admissible(bg);
    if (diag.empty()) return;
    std::string msg = "inadmissible grading: " + diag.front();
    if (diag.size() > 1) msg += " (+" + std::to_string(diag.size() - 1) + " more)";
    throw std::invalid_argument(msg);
}

}  // namespace bga
