#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bga/ribbon_graph.hpp"

namespace bga {

/// A ribbon graph decorated with per-vertex multiplicities and, optionally,
/// per-edge sign-weights and per-arrow degrees (the data of a modified,
/// graded Brauer graph algebra).  Indices follow the canonical numbering of
/// GraphIndex.  Construction checks shape only; grading admissibility is
/// checked by the operations that rely on it.
class BrauerGraph {
  public:
    BrauerGraph(RibbonGraph graph, std::vector<int> multiplicity,
                std::vector<int> edge_weight = {}, std::vector<int> arrow_degree = {})
        : graph_(std::move(graph)), index_(graph_), multiplicity_(std::move(multiplicity)) {
        if (static_cast<int>(multiplicity_.size()) != index_.vertex_count()) {
            throw std::invalid_argument("multiplicity must be defined on every vertex");
        }
        for (int m : multiplicity_) {
            if (m < 1) throw std::invalid_argument("multiplicities must be >= 1");
        }
        edge_weight_ = std::move(edge_weight);
        if (edge_weight_.empty()) {
            edge_weight_.assign(index_.edge_count(), 0);
        } else if (static_cast<int>(edge_weight_.size()) != index_.edge_count()) {
            throw std::invalid_argument("edge_weight length must equal the edge count");
        }
        arrow_degree_ = std::move(arrow_degree);
        if (arrow_degree_.empty()) {
            arrow_degree_.assign(graph_.half_edge_count(), 0);
        } else if (static_cast<int>(arrow_degree_.size()) != graph_.half_edge_count()) {
            throw std::invalid_argument("arrow_degree length must equal the half-edge count");
        }
    }

    const RibbonGraph& graph() const { return graph_; }
    const GraphIndex& index() const { return index_; }

    int half_edge_count() const { return graph_.half_edge_count(); }
    int vertex_count() const { return index_.vertex_count(); }
    int edge_count() const { return index_.edge_count(); }

    int rho(int h) const { return graph_.rho[h]; }
    int iota(int h) const { return graph_.iota[h]; }
    int vertex_of(int h) const { return index_.vertex_of(h); }
    int edge_of(int h) const { return index_.edge_of(h); }
    int valency(int v) const { return index_.valency(v); }

    int multiplicity(int v) const { return multiplicity_.at(v); }
    int edge_weight(int e) const { return edge_weight_.at(e); }
    int arrow_degree(int h) const { return arrow_degree_.at(h); }

    const std::vector<int>& multiplicities() const { return multiplicity_; }
    const std::vector<int>& edge_weights() const { return edge_weight_; }
    const std::vector<int>& arrow_degrees() const { return arrow_degree_; }

    bool grading_trivial() const {
        for (int w : edge_weight_)
            if (w != 0) return false;
        for (int d : arrow_degree_)
            if (d != 0) return false;
        return true;
    }

    /// Length of the maximal cycle winding the vertex of h: valency * multiplicity.
    int max_cycle_length_at(int h) const {
        const int v = vertex_of(h);
        return valency(v) * multiplicity(v);
    }

    /// rho applied k times (k may exceed the valency; the cycle wraps).
    int rho_power(int h, int k) const {
        const int val = valency(vertex_of(h));
        k %= val;
        for (int i = 0; i < k; ++i) h = graph_.rho[h];
        return h;
    }

  private:
    RibbonGraph graph_;
    GraphIndex index_;
    std::vector<int> multiplicity_;
    std::vector<int> edge_weight_;
    std::vector<int> arrow_degree_;
};

inline void require_connected(const BrauerGraph& bg) {
    if (!is_connected(bg.graph())) throw std::invalid_argument("ribbon graph is disconnected");
}

/// Relabels the underlying half-edges and transports multiplicities, weights
/// and degrees to the new canonical numbering.
inline BrauerGraph relabel(const BrauerGraph& bg, const std::vector<int>& perm) {
    RibbonGraph g = relabel(bg.graph(), perm);
    GraphIndex idx(g);
    std::vector<int> mult(idx.vertex_count());
    std::vector<int> weight(idx.edge_count());
    std::vector<int> degree(g.half_edge_count());
    for (int h = 0; h < g.half_edge_count(); ++h) {
        degree[perm[h]] = bg.arrow_degree(h);
        mult[idx.vertex_of(perm[h])] = bg.multiplicity(bg.vertex_of(h));
        weight[idx.edge_of(perm[h])] = bg.edge_weight(bg.edge_of(h));
    }
    return BrauerGraph(std::move(g), std::move(mult), std::move(weight), std::move(degree));
}

}  // namespace bga
