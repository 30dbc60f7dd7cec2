#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bga {

/// Combinatorial ribbon graph on dense half-edge indices 0..2E-1.
///
/// `rho` is the counterclockwise successor inside the half-edge fan of the
/// common vertex, `iota` the fixed-point-free involution pairing the two
/// half-edges of an edge.  Vertices are the cycles of rho, edges the orbits
/// of iota; everything else (faces, genus, ...) is derived.
struct RibbonGraph {
    std::vector<int> rho;
    std::vector<int> iota;

    int half_edge_count() const { return static_cast<int>(rho.size()); }
};

namespace detail {

inline bool is_permutation_of_indices(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

}  // namespace detail

/// Checks the ribbon graph axioms and reports every violation; an empty
/// result means the graph is valid.  Connectivity is not an axiom here:
/// plain ribbon operations tolerate disconnected graphs.
inline std::vector<std::string> validate(const RibbonGraph& g) {
    std::vector<std::string> out;
    const int n = g.half_edge_count();
    if (static_cast<int>(g.iota.size()) != n) {
        out.push_back("iota and rho have different lengths");
        return out;
    }
    if (n == 0) out.push_back("graph has no half-edges");
    if (n % 2 != 0) out.push_back("half-edge count is odd");
    if (!detail::is_permutation_of_indices(g.rho)) out.push_back("rho not a bijection");
    if (!detail::is_permutation_of_indices(g.iota)) {
        out.push_back("iota not a bijection");
        return out;  // involution checks below would index out of range
    }
    for (int h = 0; h < n; ++h) {
        if (g.iota[h] == h) out.push_back("iota has fixed point " + std::to_string(h));
    }
    for (int h = 0; h < n; ++h) {
        if (g.iota[h] >= 0 && g.iota[h] < n && g.iota[g.iota[h]] != h) {
            out.push_back("iota not an involution at " + std::to_string(h));
        }
    }
    return out;
}

inline bool is_valid(const RibbonGraph& g) { return validate(g).empty(); }

inline void require_valid(const RibbonGraph& g) {
    auto diag = validate(g);
    if (diag.empty()) return;
    std::string msg = "invalid ribbon graph: " + diag.front();
    if (diag.size() > 1) msg += " (+" + std::to_string(diag.size() - 1) + " more)";
    throw std::invalid_argument(msg);
}

/// True if the group generated by rho and iota acts transitively on half-edges.
inline bool is_connected(const RibbonGraph& g) {
    const int n = g.half_edge_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int next : {g.rho[h], g.iota[h]}) {
            if (!seen[next]) {
                seen[next] = 1;
                ++reached;
                stack.push_back(next);
            }
        }
    }
    return reached == n;
}

inline void require_connected(const RibbonGraph& g) {
    require_valid(g);
    if (!is_connected(g)) throw std::invalid_argument("ribbon graph is disconnected");
}

/// Canonical vertex/edge numbering of a valid ribbon graph.  Vertices are
/// numbered by ascending minimal half-edge of their rho-cycle, edges by
/// ascending minimal half-edge of their iota-orbit.
class GraphIndex {
  public:
    explicit GraphIndex(const RibbonGraph& g) {
        require_valid(g);
        const int n = g.half_edge_count();
        vertex_of_.assign(n, -1);
        edge_of_.assign(n, -1);
        for (int h = 0; h < n; ++h) {
            if (vertex_of_[h] >= 0) continue;
            const int v = static_cast<int>(vertex_cycles_.size());
            std::vector<int> cycle;
            int cur = h;
            do {
                vertex_of_[cur] = v;
                cycle.push_back(cur);
                cur = g.rho[cur];
            } while (cur != h);
            vertex_cycles_.push_back(std::move(cycle));
        }
        for (int h = 0; h < n; ++h) {
            if (edge_of_[h] >= 0) continue;
            const int e = static_cast<int>(edge_halves_.size());
            edge_of_[h] = e;
            edge_of_[g.iota[h]] = e;
            edge_halves_.emplace_back(h, g.iota[h]);
        }
    }

    int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
    int edge_count() const { return static_cast<int>(edge_halves_.size()); }
    int vertex_of(int h) const { return vertex_of_.at(h); }
    int edge_of(int h) const { return edge_of_.at(h); }
    int valency(int v) const { return static_cast<int>(vertex_cycles_.at(v).size()); }
    /// rho-cycle of vertex v, starting at its minimal half-edge.
    const std::vector<int>& vertex_half_edges(int v) const { return vertex_cycles_.at(v); }
    /// The two half-edges of edge e, minimal one first.
    std::pair<int, int> edge_half_edges(int e) const { return edge_halves_.at(e); }

  private:
    std::vector<int> vertex_of_;
    std::vector<int> edge_of_;
    std::vector<std::vector<int>> vertex_cycles_;
    std::vector<std::pair<int, int>> edge_halves_;
};

/// One orbit of the face permutation rho∘iota, listed from its minimal
/// half-edge.  The perimeter is the orbit length.
struct Face {
    std::vector<int> orbit;
    int perimeter() const { return static_cast<int>(orbit.size()); }
};

struct FaceReport {
    std::vector<Face> faces;
};

/// Faces as orbits of phi = rho∘iota, ordered by minimal contained half-edge.
/// The orbits partition the half-edge set, so perimeters sum to 2E.
inline FaceReport faces(const RibbonGraph& g) {
    require_valid(g);
    const int n = g.half_edge_count();
    FaceReport report;
    std::vector<char> seen(n, 0);
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        Face face;
        int cur = h;
        do {
            seen[cur] = 1;
            face.orbit.push_back(cur);
            cur = g.rho[g.iota[cur]];
        } while (cur != h);
        report.faces.push_back(std::move(face));
    }
    return report;
}

/// Genus of the ribbon surface of a connected graph, from
/// V - E + F = 2 - 2g.
inline int genus(const RibbonGraph& g) {
    require_valid(g);
    if (!is_connected(g)) throw std::invalid_argument("genus requires connected graph");
    GraphIndex idx(g);
    const int V = idx.vertex_count();
    const int E = idx.edge_count();
    const int F = static_cast<int>(faces(g).faces.size());
    const int doubled = 2 - F - V + E;
    if (doubled % 2 != 0) throw std::logic_error("Euler characteristic parity violated");
    return doubled / 2;
}

/// 0 if the underlying graph is bipartite, 1 otherwise.  Loops count as odd
/// cycles.  Disconnected graphs are colored component by component.
inline int sigma_bipartite(const RibbonGraph& g) {
    require_valid(g);
    GraphIndex idx(g);
    const int V = idx.vertex_count();
    std::vector<int> color(V, -1);
    for (int root = 0; root < V; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h : idx.vertex_half_edges(v)) {
                int w = idx.vertex_of(g.iota[h]);
                if (w == v) return 1;  // loop
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return 1;
                }
            }
        }
    }
    return 0;
}

/// Conjugates the graph by a half-edge permutation: h goes to perm[h].
inline RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm) {
    const int n = g.half_edge_count();
    if (static_cast<int>(perm.size()) != n || !detail::is_permutation_of_indices(perm)) {
        throw std::invalid_argument("relabel: perm is not a permutation of half-edges");
    }
    RibbonGraph out;
    out.rho.assign(n, 0);
    out.iota.assign(n, 0);
    for (int h = 0; h < n; ++h) {
        out.rho[perm[h]] = perm[g.rho[h]];
        out.iota[perm[h]] = perm[g.iota[h]];
    }
    return out;
}

}  // namespace bga
