#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/cover.hpp"
#include "bga/grading.hpp"

namespace bga {

/// Delta_C of the closed or open walk of `length` arrows starting at
/// `start_half_edge` (winding its vertex): the total arrow degree of the
/// portion traversed strictly before the cut arrow of that vertex, or 0 when
/// the cut arrow does not occur.  The walk must contain the cut arrow at
/// most once.
inline int delta_cut(const BrauerGraph& bg, const Cut& cut, int start_half_edge, int length) {
    validate_cut(bg, cut);
    const int v = bg.vertex_of(start_half_edge);
    const int chosen = cut.chosen[v];
    int h = start_half_edge;
    int prefix = 0;
    int result = 0;
    int occurrences = 0;
    for (int i = 0; i < length; ++i) {
        if (h == chosen) {
            if (++occurrences > 1) {
                throw std::invalid_argument("delta_cut: walk passes the cut arrow more than once");
            }
            result = prefix;
        }
        prefix += bg.arrow_degree(h);
        h = bg.rho(h);
    }
    return occurrences ? result : 0;
}

inline bool contains_cut_arrow(const BrauerGraph& bg, const Cut& cut, int start_half_edge,
                               int length) {
    const int chosen = cut.chosen[bg.vertex_of(start_half_edge)];
    int h = start_half_edge;
    for (int i = 0; i < length; ++i) {
        if (h == chosen) return true;
        h = bg.rho(h);
    }
    return false;
}

/// The per-vertex sign exponents solving, for every edge with endpoints p, q
/// and maximal cycles C_p, C_q based at it,
///   Delta_C(C_p) + Delta_p == Delta_C(C_q) + Delta_q + weight(edge)  (mod 2).
struct DeltaData {
    std::vector<int> delta_p;
};

/// Solves the constraint system over a spanning tree rooted at vertex 0
/// (Delta_root = 0) and verifies every co-tree edge and loop.  The optional
/// edge order steers which tree is used; the constraints of an admissible
/// grading are consistent for every choice.
inline DeltaData solve_delta_p(const BrauerGraph& bg, const Cut& cut,
                               const std::vector<int>& edge_order) {
    require_connected(bg);
    validate_cut(bg, cut);
    for (int v = 0; v < bg.vertex_count(); ++v) {
        if (bg.multiplicity(v) != 1) {
            throw std::invalid_argument("solve_delta_p requires trivial multiplicities");
        }
    }
    require_admissible(bg);

    // Right-hand side per edge: weight + Delta_C of the two based cycles.
    std::vector<int> rhs(bg.edge_count());
    for (int e = 0; e < bg.edge_count(); ++e) {
        auto [h, hbar] = bg.index().edge_half_edges(e);
        int s = bg.edge_weight(e) + delta_cut(bg, cut, h, bg.max_cycle_length_at(h)) +
                delta_cut(bg, cut, hbar, bg.max_cycle_length_at(hbar));
        rhs[e] = ((s % 2) + 2) % 2;
    }

    std::vector<int> delta(bg.vertex_count(), -1);
    delta[0] = 0;
    for (bool progress = true; progress;) {
        progress = false;
        for (int e : edge_order) {
            auto [h, hbar] = bg.index().edge_half_edges(e);
            const int p = bg.vertex_of(h);
            const int q = bg.vertex_of(hbar);
            if (delta[p] >= 0 && delta[q] < 0) {
                delta[q] = (delta[p] + rhs[e]) % 2;
                progress = true;
            } else if (delta[q] >= 0 && delta[p] < 0) {
                delta[p] = (delta[q] + rhs[e]) % 2;
                progress = true;
            }
        }
    }
    for (int e = 0; e < bg.edge_count(); ++e) {
        auto [h, hbar] = bg.index().edge_half_edges(e);
        if ((delta[bg.vertex_of(h)] + delta[bg.vertex_of(hbar)] + rhs[e]) % 2 != 0) {
            throw std::invalid_argument(
                "delta_p constraints inconsistent: grading violates the winding parity law");
        }
    }
    return DeltaData{std::move(delta)};
}

inline DeltaData solve_delta_p(const BrauerGraph& bg, const Cut& cut) {
    std::vector<int> order(bg.edge_count());
    std::iota(order.begin(), order.end(), 0);
    return solve_delta_p(bg, cut, order);
}

/// Delta(walk) = Delta_C(walk) + Delta_p(walk): the vertex exponent is added
/// exactly when the walk passes its cut arrow.
inline int delta_total(const BrauerGraph& bg, const Cut& cut, const DeltaData& dd,
                       int start_half_edge, int length) {
    int d = delta_cut(bg, cut, start_half_edge, length);
    if (contains_cut_arrow(bg, cut, start_half_edge, length)) {
        d += dd.delta_p.at(bg.vertex_of(start_half_edge));
    }
    return d;
}

}  // namespace bga
