#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/ribbon_graph.hpp"

namespace bga {

namespace detail {

// Propagates the image of one half-edge over its whole component.  A ribbon
// morphism commutes with rho and iota, so the anchor image determines every
// other image; returns the partial map or nothing on a clash.
inline bool propagate_anchor(const RibbonGraph& a, const RibbonGraph& b, int ha, int hb,
                             std::vector<int>& map, std::vector<char>& used) {
    std::vector<int> stack;
    auto assign = [&](int from, int to) {
        if (map[from] >= 0) return map[from] == to;
        if (used[to]) return false;
        map[from] = to;
        used[to] = 1;
        stack.push_back(from);
        return true;
    };
    if (!assign(ha, hb)) return false;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        if (!assign(a.rho[h], b.rho[map[h]])) return false;
        if (!assign(a.iota[h], b.iota[map[h]])) return false;
    }
    return true;
}

inline std::vector<int> component_of(const RibbonGraph& g, int h0) {
    std::vector<char> seen(g.half_edge_count(), 0);
    std::vector<int> stack{h0}, comp;
    seen[h0] = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        comp.push_back(h);
        for (int n : {g.rho[h], g.iota[h]})
            if (!seen[n]) {
                seen[n] = 1;
                stack.push_back(n);
            }
    }
    return comp;
}

}  // namespace detail

/// Searches for a half-edge bijection commuting with rho and iota and
/// preserving multiplicities.  The search is anchored: on a connected graph a
/// ribbon morphism is determined by the image of one half-edge, so one fixed
/// half-edge of `a` is matched against every half-edge of `b`.  Disconnected
/// graphs are matched component by component.  Returns the bijection or
/// nothing; different half-edge counts yield nothing (not an error).
inline std::optional<std::vector<int>> are_isomorphic(const BrauerGraph& a, const BrauerGraph& b) {
    const RibbonGraph& ga = a.graph();
    const RibbonGraph& gb = b.graph();
    const int n = ga.half_edge_count();
    if (gb.half_edge_count() != n) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);

    // Match the component of the smallest unmapped half-edge against each
    // candidate anchor in b; greedy is enough since isomorphy of components
    // is an equivalence.
    for (int h0 = 0; h0 < n; ++h0) {
        if (map[h0] >= 0) continue;
        const auto comp_a = detail::component_of(ga, h0);
        bool matched = false;
        for (int hb = 0; hb < n && !matched; ++hb) {
            if (used[hb]) continue;
            std::vector<int> trial_map = map;
            std::vector<char> trial_used = used;
            if (!detail::propagate_anchor(ga, gb, h0, hb, trial_map, trial_used)) continue;
            // the image component must be exactly covered and carry the same
            // multiplicities
            auto comp_b = detail::component_of(gb, hb);
            bool good = comp_b.size() == comp_a.size();
            for (int h : comp_b) good = good && trial_used[h];
            for (int h : comp_a) {
                good = good && a.multiplicity(a.vertex_of(h)) ==
                                   b.multiplicity(b.vertex_of(trial_map[h]));
            }
            if (good) {
                map = std::move(trial_map);
                used = std::move(trial_used);
                matched = true;
            }
        }
        if (!matched) return std::nullopt;
    }
    return map;
}

inline std::optional<std::vector<int>> are_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    if (!is_valid(a) || !is_valid(b)) throw std::invalid_argument("are_isomorphic requires valid graphs");
    GraphIndex ia(a), ib(b);
    BrauerGraph ba(a, std::vector<int>(ia.vertex_count(), 1));
    BrauerGraph bb(b, std::vector<int>(ib.vertex_count(), 1));
    return are_isomorphic(ba, bb);
}

/// Complete isomorphism key for connected ribbon graphs: the lexicographically
/// minimal (rho, iota) encoding over all breadth-first relabelings, one per
/// anchor half-edge.  Two connected graphs are isomorphic iff keys agree.
inline std::string canonical_key(const RibbonGraph& g) {
    require_connected(g);
    const int n = g.half_edge_count();
    if (n > 127) throw std::invalid_argument("canonical_key supports at most 127 half-edges");
    std::string best;
    std::vector<int> label(n);
    for (int anchor = 0; anchor < n; ++anchor) {
        std::fill(label.begin(), label.end(), -1);
        std::vector<int> order;
        order.reserve(n);
        label[anchor] = 0;
        order.push_back(anchor);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) {
            int h = order[i];
            for (int nb : {g.rho[h], g.iota[h]}) {
                if (label[nb] < 0) {
                    label[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            }
        }
        std::string key(2 * n, '\0');
        for (int h = 0; h < n; ++h) {
            key[label[h]] = static_cast<char>(label[g.rho[h]]);
            key[n + label[h]] = static_cast<char>(label[g.iota[h]]);
        }
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

}  // namespace bga
