#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/grading.hpp"

namespace bga {

/// Normal form of an element of the (modified) Brauer graph algebra that is a
/// scalar multiple of a basis path.  Nonzero paths are exactly the subwords
/// of the maximal cycles C^m, which leaves three shapes:
///   - the idempotent of an edge,
///   - a proper path: start half-edge h and length 1 <= l < val(v)*m(v),
///     winding the vertex v of h, with traversed arrows alpha_{rho^j(h)};
///   - the socle of an edge: the common value of the two maximal cycles
///     based there, identified up to the sign (-1)^edge_weight.
/// The canonical socle representative is the cycle winding the endpoint of
/// smaller canonical vertex id (smaller half-edge on a loop); the other
/// representative carries the extra sign.
class PathNF {
  public:
    enum class Kind { Zero, Idempotent, Proper, Socle };

    static PathNF zero() { return PathNF(Kind::Zero, -1, -1, 0, 0); }
    static PathNF idempotent(int edge, long long coeff = 1) {
        return checked_scalar(Kind::Idempotent, edge, coeff);
    }
    static PathNF socle(int edge, long long coeff = 1) {
        return checked_scalar(Kind::Socle, edge, coeff);
    }
    static PathNF proper(int start_half_edge, int length, long long coeff = 1) {
        if (coeff == 0) return zero();
        return PathNF(Kind::Proper, -1, start_half_edge, length, coeff);
    }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    int edge() const { return edge_; }                        // Idempotent / Socle
    int start_half_edge() const { return start_half_edge_; }  // Proper
    int length() const { return length_; }                    // Proper
    long long coeff() const { return coeff_; }

    PathNF scaled(long long s) const {
        if (s == 0 || is_zero()) return zero();
        return PathNF(kind_, edge_, start_half_edge_, length_, coeff_ * s);
    }

    bool operator==(const PathNF&) const = default;

  private:
    PathNF(Kind kind, int edge, int start, int length, long long coeff)
        : kind_(kind), edge_(edge), start_half_edge_(start), length_(length), coeff_(coeff) {}
    static PathNF checked_scalar(Kind kind, int edge, long long coeff) {
        if (coeff == 0) return zero();
        return PathNF(kind, edge, -1, 0, coeff);
    }

    Kind kind_;
    int edge_;
    int start_half_edge_;
    int length_;
    long long coeff_;
};

namespace detail {

inline void check_path(const BrauerGraph& bg, const PathNF& p) {
    switch (p.kind()) {
        case PathNF::Kind::Zero:
            return;
        case PathNF::Kind::Idempotent:
        case PathNF::Kind::Socle:
            if (p.edge() < 0 || p.edge() >= bg.edge_count()) {
                throw std::invalid_argument("normal form does not belong to this graph (edge id)");
            }
            return;
        case PathNF::Kind::Proper: {
            if (p.start_half_edge() < 0 || p.start_half_edge() >= bg.half_edge_count()) {
                throw std::invalid_argument(
                    "normal form does not belong to this graph (half-edge id)");
            }
            const int max_len = bg.max_cycle_length_at(p.start_half_edge());
            if (p.length() < 1 || p.length() >= max_len) {
                throw std::invalid_argument("normal form does not belong to this graph (length)");
            }
            return;
        }
    }
}

// Half-edge whose maximal cycle is the canonical socle representative at e.
inline int canonical_socle_start(const BrauerGraph& bg, int e) {
    auto [h, hbar] = bg.index().edge_half_edges(e);
    const int vh = bg.vertex_of(h);
    const int vb = bg.vertex_of(hbar);
    if (vh != vb) return vh < vb ? h : hbar;
    return h;  // loop: edge_half_edges already puts the smaller half-edge first
}

}  // namespace detail

inline int source_edge(const BrauerGraph& bg, const PathNF& p) {
    detail::check_path(bg, p);
    if (p.kind() == PathNF::Kind::Proper) return bg.edge_of(p.start_half_edge());
    return p.edge();
}

inline int target_edge(const BrauerGraph& bg, const PathNF& p) {
    detail::check_path(bg, p);
    if (p.kind() == PathNF::Kind::Proper) {
        return bg.edge_of(bg.rho_power(p.start_half_edge(), p.length()));
    }
    return p.edge();
}

/// Degree of a homogeneous basis element: the sum of the degrees of its
/// arrows.  Socles are full cycles, which have degree 0 under (A1).
inline int degree(const BrauerGraph& bg, const PathNF& p) {
    detail::check_path(bg, p);
    if (p.kind() != PathNF::Kind::Proper) return 0;
    int deg = 0;
    int h = p.start_half_edge();
    for (int i = 0; i < p.length(); ++i) {
        deg += bg.arrow_degree(h);
        h = bg.rho(h);
    }
    return deg;
}

/// Value of the maximal cycle starting at half-edge h (winding its vertex) as
/// a normal form: the socle of the base edge times the identification sign.
inline PathNF maximal_cycle_value(const BrauerGraph& bg, int start_half_edge) {
    const int e = bg.edge_of(start_half_edge);
    if (detail::canonical_socle_start(bg, e) == start_half_edge) return PathNF::socle(e);
    return PathNF::socle(e, bg.edge_weight(e) % 2 == 0 ? 1 : -1);
}

/// Product p*q, with q applied first (paths compose right to left).  The
/// result is a scalar multiple of a basis element, zero when the composition
/// leaves the winding cycle or overruns it.
inline PathNF multiply(const BrauerGraph& bg, const PathNF& p, const PathNF& q) {
    detail::check_path(bg, p);
    detail::check_path(bg, q);
    using K = PathNF::Kind;
    if (p.is_zero() || q.is_zero()) return PathNF::zero();
    if (target_edge(bg, q) != source_edge(bg, p)) return PathNF::zero();
    const long long c = p.coeff() * q.coeff();

    if (p.kind() == K::Idempotent) return q.scaled(p.coeff());
    if (q.kind() == K::Idempotent) return p.scaled(q.coeff());
    // Socles are annihilated by every non-unit.
    if (p.kind() == K::Socle || q.kind() == K::Socle) return PathNF::zero();

    // proper * proper: p must continue exactly where q stopped, inside the
    // same winding cycle.
    const int vq = bg.vertex_of(q.start_half_edge());
    const int vp = bg.vertex_of(p.start_half_edge());
    if (vq != vp) return PathNF::zero();
    if (bg.rho_power(q.start_half_edge(), q.length()) != p.start_half_edge()) {
        return PathNF::zero();
    }
    const int total = q.length() + p.length();
    const int max_len = bg.max_cycle_length_at(q.start_half_edge());
    if (total > max_len) return PathNF::zero();
    if (total == max_len) return maximal_cycle_value(bg, q.start_half_edge()).scaled(c);
    return PathNF::proper(q.start_half_edge(), total, c);
}

/// Ordered basis of the algebra: idempotents, then proper paths by (start
/// half-edge, length), then socles.  Size is sum over vertices of
/// multiplicity * valency^2.
inline std::vector<PathNF> path_basis(const BrauerGraph& bg) {
    require_connected(bg);
    require_admissible(bg);
    std::vector<PathNF> basis;
    for (int e = 0; e < bg.edge_count(); ++e) basis.push_back(PathNF::idempotent(e));
    for (int h = 0; h < bg.half_edge_count(); ++h) {
        const int max_len = bg.max_cycle_length_at(h);
        for (int len = 1; len < max_len; ++len) basis.push_back(PathNF::proper(h, len));
    }
    for (int e = 0; e < bg.edge_count(); ++e) basis.push_back(PathNF::socle(e));
    return basis;
}

inline long long dimension(const BrauerGraph& bg) {
    return static_cast<long long>(path_basis(bg).size());
}

/// Number of basis elements from edge x to edge y.
inline int hom_dimension(const BrauerGraph& bg, int x, int y) {
    if (x < 0 || x >= bg.edge_count() || y < 0 || y >= bg.edge_count()) {
        throw std::invalid_argument("hom_dimension: edge id out of range");
    }
    int count = 0;
    for (const PathNF& p : path_basis(bg)) {
        if (source_edge(bg, p) == x && target_edge(bg, p) == y) ++count;
    }
    return count;
}

/// Complement p* of a nonzero path: the unique basis path with
/// multiply(p, p*) equal to the maximal cycle at the start edge of p*.
/// For a proper path this is the rest of its winding cycle; the complement
/// of a socle is the idempotent, and of an idempotent the socle (the value
/// shared by both full-cycle representatives).
inline PathNF complement(const BrauerGraph& bg, const PathNF& p) {
    detail::check_path(bg, p);
    switch (p.kind()) {
        case PathNF::Kind::Zero:
            throw std::invalid_argument("complement of zero is undefined");
        case PathNF::Kind::Idempotent:
            return PathNF::socle(p.edge());
        case PathNF::Kind::Socle:
            return PathNF::idempotent(p.edge());
        case PathNF::Kind::Proper: {
            const int rest = bg.max_cycle_length_at(p.start_half_edge()) - p.length();
            return PathNF::proper(bg.rho_power(p.start_half_edge(), p.length()), rest);
        }
    }
    throw std::logic_error("unreachable");
}

/// A maximal cycle as a raw closed walk: start half-edge, length, and the
/// sign relating its value to the canonical socle.
struct CycleRep {
    int start_half_edge;
    int length;
    int sign_to_socle;  // value = sign_to_socle * socle(edge)
};

/// The two full-cycle representatives of the socle at edge e (they coincide
/// as walks only in the sense that both are based at e; the canonical one
/// comes first).
inline std::pair<CycleRep, CycleRep> socle_representatives(const BrauerGraph& bg, int e) {
    auto [h, hbar] = bg.index().edge_half_edges(e);
    int hc = detail::canonical_socle_start(bg, e);
    int other = (hc == h) ? hbar : h;
    const int sign = bg.edge_weight(e) % 2 == 0 ? 1 : -1;
    CycleRep canonical{hc, bg.max_cycle_length_at(hc), 1};
    CycleRep twisted{other, bg.max_cycle_length_at(other), sign};
    return {canonical, twisted};
}

}  // namespace bga
