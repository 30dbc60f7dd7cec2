#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/ribbon_graph.hpp"

namespace bga {

/// The complete derived-invariant bundle of a Brauer graph algebra:
/// vertex/edge/face counts, sorted perimeter and multiplicity multisets, the
/// bipartiteness bit sigma, the genus, and the Grothendieck-group ranks
/// k0_rank = E and k0_sg_rank = E - V + 1 - sigma.
struct DerivedInvariants {
    int num_vertices = 0;
    int num_edges = 0;
    int num_faces = 0;
    std::vector<int> perimeters;      // sorted ascending
    std::vector<int> multiplicities;  // sorted ascending
    int sigma = 0;
    int genus = 0;
    int k0_rank = 0;
    int k0_sg_rank = 0;

    bool operator==(const DerivedInvariants&) const = default;
};

inline DerivedInvariants derived_invariants(const BrauerGraph& bg) {
    require_connected(bg);
    DerivedInvariants inv;
    inv.num_vertices = bg.vertex_count();
    inv.num_edges = bg.edge_count();
    const FaceReport fr = faces(bg.graph());
    inv.num_faces = static_cast<int>(fr.faces.size());
    for (const Face& f : fr.faces) inv.perimeters.push_back(f.perimeter());
    std::sort(inv.perimeters.begin(), inv.perimeters.end());
    inv.multiplicities = bg.multiplicities();
    std::sort(inv.multiplicities.begin(), inv.multiplicities.end());
    inv.sigma = sigma_bipartite(bg.graph());
    inv.genus = (2 - inv.num_faces - inv.num_vertices + inv.num_edges) / 2;
    inv.k0_rank = inv.num_edges;
    inv.k0_sg_rank = inv.num_edges - inv.num_vertices + 1 - inv.sigma;
    return inv;
}

inline void require_non_local(const BrauerGraph& bg) {
    if (bg.edge_count() < 2) {
        throw std::invalid_argument(
            "local algebra: derived equivalence coincides with isomorphism; use are_isomorphic");
    }
}

/// Decides derived equivalence of the two (non-local) Brauer graph algebras
/// by comparing the full invariant bundle.  Edge weights and arrow degrees
/// are ignored: over an algebraically closed field they do not change the
/// isomorphism class.
inline bool derived_equivalent(const BrauerGraph& a, const BrauerGraph& b) {
    require_connected(a);
    require_connected(b);
    require_non_local(a);
    require_non_local(b);
    return derived_invariants(a) == derived_invariants(b);
}

/// Invariants of the line-field orbit on the ribbon surface.  For genus >= 1
/// the gcd of winding numbers of non-separating loops is 2 - sigma; on genus
/// 0 it is undefined.
struct OrbitClass {
    int genus = 0;
    std::vector<int> perimeters;  // sorted ascending
    int sigma = 0;
    std::optional<int> gcd_eta;

    bool operator==(const OrbitClass&) const = default;
};

inline OrbitClass orbit_class(const BrauerGraph& bg) {
    const DerivedInvariants inv = derived_invariants(bg);
    OrbitClass oc;
    oc.genus = inv.genus;
    oc.perimeters = inv.perimeters;
    oc.sigma = inv.sigma;
    if (inv.genus >= 1) oc.gcd_eta = 2 - inv.sigma;
    return oc;
}

/// Orbit equivalence of the induced line fields, for graphs living on the
/// same surface: perimeter multisets must agree, and away from genus 0 the
/// sigma bits as well.  Mismatched (V,E,F) is a caller error.
inline bool orbit_equivalent(const BrauerGraph& a, const BrauerGraph& b) {
    const DerivedInvariants ia = derived_invariants(a);
    const DerivedInvariants ib = derived_invariants(b);
    if (ia.num_vertices != ib.num_vertices || ia.num_edges != ib.num_edges ||
        ia.num_faces != ib.num_faces) {
        throw std::invalid_argument("surfaces not homeomorphic");
    }
    if (ia.perimeters != ib.perimeters) return false;
    return ia.genus == 0 || ia.sigma == ib.sigma;
}

/// Combinatorial Poincare-Hopf identity: the face orbits partition the
/// half-edge set, so perimeters sum to 2E.  Exposed as a test oracle; true
/// on every valid graph.
inline bool poincare_hopf_check(const RibbonGraph& g) {
    require_valid(g);
    long long total = 0;
    for (const Face& f : faces(g).faces) total += f.perimeter();
    return total == g.half_edge_count();
}

}  // namespace bga
