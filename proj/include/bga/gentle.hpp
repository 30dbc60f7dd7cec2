#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/cover.hpp"
#include "bga/grading.hpp"
#include "bga/quiver.hpp"

namespace bga {

struct GentleArrow {
    int id;
    int source;
    int target;
    int degree = 0;
};

/// Quiver with quadratic monomial relations; gentle when check_gentle
/// reports nothing.  Quiver vertices are 0..num_vertices-1 (for a cut
/// presentation these are the edges of the Brauer graph).
struct GentlePresentation {
    int num_vertices = 0;
    std::vector<GentleArrow> arrows;
    std::vector<std::pair<int, int>> zero_relations;  // (a, b): the path "b then a" is zero
};

/// Checks the gentle axioms plus finite-dimensionality:
///   - at most two arrows in and out of every vertex;
///   - relations are composable pairs, and for each arrow there is at most
///     one relation partner and at most one relation-free continuation on
///     either side;
///   - every sufficiently long path meets a relation (no relation-free
///     oriented cycle).
inline std::vector<std::string> check_gentle(const GentlePresentation& p) {
    std::vector<std::string> out;
    std::map<int, int> by_id;
    for (int i = 0; i < static_cast<int>(p.arrows.size()); ++i) {
        const GentleArrow& a = p.arrows[i];
        if (a.source < 0 || a.source >= p.num_vertices || a.target < 0 ||
            a.target >= p.num_vertices) {
            out.push_back("arrow " + std::to_string(a.id) + " has endpoints out of range");
        }
        if (!by_id.emplace(a.id, i).second) {
            out.push_back("duplicate arrow id " + std::to_string(a.id));
        }
    }
    if (!out.empty()) return out;

    std::vector<int> in_deg(p.num_vertices, 0), out_deg(p.num_vertices, 0);
    for (const GentleArrow& a : p.arrows) {
        ++out_deg[a.source];
        ++in_deg[a.target];
    }
    for (int v = 0; v < p.num_vertices; ++v) {
        if (in_deg[v] > 2) out.push_back("vertex " + std::to_string(v) + " has >2 incoming arrows");
        if (out_deg[v] > 2) out.push_back("vertex " + std::to_string(v) + " has >2 outgoing arrows");
    }

    std::set<std::pair<int, int>> rel;
    for (auto [a_id, b_id] : p.zero_relations) {
        if (!by_id.count(a_id) || !by_id.count(b_id)) {
            out.push_back("relation references unknown arrow");
            continue;
        }
        const GentleArrow& a = p.arrows[by_id[a_id]];
        const GentleArrow& b = p.arrows[by_id[b_id]];
        if (b.target != a.source) {
            out.push_back("relation (" + std::to_string(a_id) + "," + std::to_string(b_id) +
                          ") is not composable");
        }
        if (!rel.emplace(a_id, b_id).second) out.push_back("duplicate relation");
    }
    if (!out.empty()) return out;

    for (const GentleArrow& b : p.arrows) {
        int with_rel = 0, without_rel = 0;
        for (const GentleArrow& a : p.arrows) {
            if (b.target != a.source) continue;
            (rel.count({a.id, b.id}) ? with_rel : without_rel)++;
        }
        if (with_rel > 1)
            out.push_back("arrow " + std::to_string(b.id) + " has two relation continuations");
        if (without_rel > 1)
            out.push_back("arrow " + std::to_string(b.id) + " has two relation-free continuations");
    }
    for (const GentleArrow& a : p.arrows) {
        int with_rel = 0, without_rel = 0;
        for (const GentleArrow& b : p.arrows) {
            if (b.target != a.source) continue;
            (rel.count({a.id, b.id}) ? with_rel : without_rel)++;
        }
        if (with_rel > 1)
            out.push_back("arrow " + std::to_string(a.id) + " has two relation predecessors");
        if (without_rel > 1)
            out.push_back("arrow " + std::to_string(a.id) +
                          " has two relation-free predecessors");
    }

    // finite-dimensionality: the relation-free composition graph is acyclic
    const int n = static_cast<int>(p.arrows.size());
    std::vector<std::vector<int>> next(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (p.arrows[i].target == p.arrows[j].source &&
                !rel.count({p.arrows[j].id, p.arrows[i].id})) {
                next[i].push_back(j);
            }
        }
    }
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    bool cyclic = false;
    auto dfs = [&](auto&& self, int i) -> void {
        state[i] = 1;
        for (int j : next[i]) {
            if (state[j] == 1) cyclic = true;
            if (state[j] == 0) self(self, j);
        }
        state[i] = 2;
    };
    for (int i = 0; i < n && !cyclic; ++i) {
        if (state[i] == 0) dfs(dfs, i);
    }
    if (cyclic) out.push_back("relation-free oriented cycle: algebra is infinite-dimensional");
    return out;
}

inline bool is_gentle(const GentlePresentation& p) { return check_gentle(p).empty(); }

/// Removes the cut arrows alpha_{chosen(v)} from the Brauer graph quiver,
/// keeping the surviving zero relations.  Requires trivial multiplicities
/// and an admissible grading; the result is validated to be gentle and
/// finite-dimensional.
inline GentlePresentation gentle_from_cut(const BrauerGraph& bg, const Cut& cut) {
    require_connected(bg);
    validate_cut(bg, cut);
    for (int v = 0; v < bg.vertex_count(); ++v) {
        if (bg.multiplicity(v) != 1) {
            throw std::invalid_argument("gentle extraction requires trivial multiplicities");
        }
    }
    require_admissible(bg);

    std::vector<char> removed(bg.half_edge_count(), 0);
    for (int h : cut.chosen) removed[h] = 1;

    const QuiverPresentation q = build_quiver(bg);
    GentlePresentation out;
    out.num_vertices = bg.edge_count();
    for (const Arrow& a : q.arrows) {
        if (!removed[a.id]) out.arrows.push_back({a.id, a.source, a.target, bg.arrow_degree(a.id)});
    }
    for (auto [a, b] : q.zero_relations) {
        if (!removed[a] && !removed[b]) out.zero_relations.emplace_back(a, b);
    }
    auto diag = check_gentle(out);
    if (!diag.empty()) {
        throw std::logic_error("cut presentation failed the gentle check: " + diag.front());
    }
    return out;
}

}  // namespace bga
