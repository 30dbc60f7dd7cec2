#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/path_algebra.hpp"
#include "bga/ribbon_graph.hpp"

namespace bga {

/// A cut: one chosen half-edge per vertex (indexed by canonical vertex id).
struct Cut {
    std::vector<int> chosen;
};

inline void validate_cut(const BrauerGraph& bg, const Cut& cut) {
    if (static_cast<int>(cut.chosen.size()) != bg.vertex_count()) {
        throw std::invalid_argument("cut must choose exactly one half-edge per vertex");
    }
    for (int v = 0; v < bg.vertex_count(); ++v) {
        int h = cut.chosen[v];
        if (h < 0 || h >= bg.half_edge_count() || bg.vertex_of(h) != v) {
            throw std::invalid_argument("cut half-edge " + std::to_string(h) +
                                        " does not start at vertex " + std::to_string(v));
        }
    }
}

struct DisconnectedCover : std::runtime_error {
    DisconnectedCover() : std::runtime_error("cover disconnected for this cut") {}
};

/// The multiplicity-free cover: half-edges are pairs (h, g) with g in Z_mbar,
/// linearized as h*mbar + g.  iota acts fiberwise; rho shifts the fiber
/// coordinate by the cut-supported weight W(h) = mbar/m(v) on chosen
/// half-edges and 0 elsewhere.  The deck generator adds 1 to the fiber
/// coordinate; the projection forgets it.
struct CoverData {
    BrauerGraph base;
    Cut cut;
    int mbar = 1;
    BrauerGraph cover;                // multiplicity identically 1
    std::vector<int> weight;          // per base half-edge, in [0, mbar)
    std::vector<int> deck_generator;  // cover half-edge permutation
    std::vector<int> projection;      // cover half-edge -> base half-edge

    int cover_half_edge(int base_half_edge, int g) const { return base_half_edge * mbar + g; }
};

inline CoverData build_cover(const BrauerGraph& bg, const Cut& cut) {
    require_connected(bg);
    validate_cut(bg, cut);
    int mbar = 1;
    for (int v = 0; v < bg.vertex_count(); ++v) mbar = std::lcm(mbar, bg.multiplicity(v));

    const int n = bg.half_edge_count();
    std::vector<int> weight(n, 0);
    for (int v = 0; v < bg.vertex_count(); ++v) {
        weight[cut.chosen[v]] = (mbar / bg.multiplicity(v)) % mbar;
    }

    RibbonGraph cover;
    cover.rho.resize(n * mbar);
    cover.iota.resize(n * mbar);
    std::vector<int> deck(n * mbar), projection(n * mbar);
    for (int h = 0; h < n; ++h) {
        for (int g = 0; g < mbar; ++g) {
            const int idx = h * mbar + g;
            cover.rho[idx] = bg.rho(h) * mbar + (g + weight[h]) % mbar;
            cover.iota[idx] = bg.iota(h) * mbar + g;
            deck[idx] = h * mbar + (g + 1) % mbar;
            projection[idx] = h;
        }
    }
    if (!is_connected(cover)) throw DisconnectedCover();

    GraphIndex idx(cover);
    BrauerGraph cover_bg(std::move(cover), std::vector<int>(idx.vertex_count(), 1));
    return CoverData{bg, cut, mbar, std::move(cover_bg), std::move(weight), std::move(deck),
                     std::move(projection)};
}

/// Verification report for a built cover; pass() when all five checks hold.
struct CoverReport {
    bool projection_is_morphism = false;
    bool edge_action_free = false;
    bool vertex_stabilizers_match = false;
    bool fiber_valencies_match = false;
    bool faces_project_periodically = false;
    bool connected = false;
    std::vector<std::string> notes;

    bool pass() const {
        return projection_is_morphism && edge_action_free && vertex_stabilizers_match &&
               fiber_valencies_match && faces_project_periodically && connected;
    }
};

inline CoverReport verify_cover(const CoverData& cd) {
    CoverReport rep;
    const BrauerGraph& base = cd.base;
    const BrauerGraph& cov = cd.cover;
    const RibbonGraph& cg = cov.graph();
    const int N = cg.half_edge_count();

    // (1) the projection commutes with rho, iota and the vertex map
    rep.projection_is_morphism = true;
    for (int x = 0; x < N; ++x) {
        if (cd.projection[cg.rho[x]] != base.rho(cd.projection[x]) ||
            cd.projection[cg.iota[x]] != base.iota(cd.projection[x])) {
            rep.projection_is_morphism = false;
            rep.notes.push_back("projection does not commute at cover half-edge " +
                                std::to_string(x));
            break;
        }
    }
    for (int v = 0; rep.projection_is_morphism && v < cov.vertex_count(); ++v) {
        const auto& fan = cov.index().vertex_half_edges(v);
        for (int x : fan) {
            if (base.vertex_of(cd.projection[x]) != base.vertex_of(cd.projection[fan[0]])) {
                rep.projection_is_morphism = false;
                rep.notes.push_back("cover vertex " + std::to_string(v) +
                                    " projects to several base vertices");
                break;
            }
        }
    }

    // deck powers acting on half-edges
    std::vector<std::vector<int>> deck_pow(cd.mbar, std::vector<int>(N));
    for (int x = 0; x < N; ++x) deck_pow[0][x] = x;
    for (int g = 1; g < cd.mbar; ++g) {
        for (int x = 0; x < N; ++x) deck_pow[g][x] = cd.deck_generator[deck_pow[g - 1][x]];
    }

    // (2) free action on edges + vertex stabilizer orders equal multiplicities
    rep.edge_action_free = true;
    for (int g = 1; g < cd.mbar && rep.edge_action_free; ++g) {
        for (int x = 0; x < N; ++x) {
            int y = deck_pow[g][x];
            if (cov.edge_of(y) == cov.edge_of(x)) {
                rep.edge_action_free = false;
                rep.notes.push_back("deck power " + std::to_string(g) + " fixes edge " +
                                    std::to_string(cov.edge_of(x)));
                break;
            }
        }
    }
    rep.vertex_stabilizers_match = true;
    for (int v = 0; v < cov.vertex_count(); ++v) {
        const int h0 = cov.index().vertex_half_edges(v).front();
        const int base_v = base.vertex_of(cd.projection[h0]);
        int stab = 0;
        for (int g = 0; g < cd.mbar; ++g) {
            if (cov.vertex_of(deck_pow[g][h0]) == v) ++stab;
        }
        if (stab != base.multiplicity(base_v)) {
            rep.vertex_stabilizers_match = false;
            rep.notes.push_back("stabilizer of cover vertex " + std::to_string(v) + " has order " +
                                std::to_string(stab) + ", expected multiplicity " +
                                std::to_string(base.multiplicity(base_v)));
        }
    }

    // (3) valency of a cover vertex over v equals val(v) * m(v)
    rep.fiber_valencies_match = true;
    for (int v = 0; v < cov.vertex_count(); ++v) {
        const int h0 = cov.index().vertex_half_edges(v).front();
        const int base_v = base.vertex_of(cd.projection[h0]);
        if (cov.valency(v) != base.valency(base_v) * base.multiplicity(base_v)) {
            rep.fiber_valencies_match = false;
            rep.notes.push_back("cover vertex " + std::to_string(v) + " has valency " +
                                std::to_string(cov.valency(v)));
        }
    }

    // (4) every cover face is a d-periodic repetition of the base face below it
    rep.faces_project_periodically = true;
    const FaceReport base_faces = faces(base.graph());
    const FaceReport cover_faces = faces(cg);
    for (const Face& f : cover_faces.faces) {
        std::vector<int> projected;
        projected.reserve(f.orbit.size());
        for (int x : f.orbit) projected.push_back(cd.projection[x]);
        const Face* below = nullptr;
        for (const Face& bf : base_faces.faces) {
            for (int h : bf.orbit) {
                if (h == projected.front()) {
                    below = &bf;
                    break;
                }
            }
            if (below) break;
        }
        const int d = below ? below->perimeter() : 0;
        bool ok = below && f.perimeter() % d == 0;
        if (ok) {
            // align the base orbit to start at projected.front()
            std::vector<int> aligned = below->orbit;
            auto it = std::find(aligned.begin(), aligned.end(), projected.front());
            std::rotate(aligned.begin(), it, aligned.end());
            for (int i = 0; i < f.perimeter(); ++i) {
                if (projected[i] != aligned[i % d]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            rep.faces_project_periodically = false;
            rep.notes.push_back("cover face at half-edge " + std::to_string(f.orbit.front()) +
                                " does not project periodically");
        }
    }

    // (5) connectivity
    rep.connected = is_connected(cg);
    if (!rep.connected) rep.notes.push_back("cover is disconnected");
    return rep;
}

/// Hom-dimension identity between the base algebra and the cover algebra:
/// for fixed lifts x~, y~ of every ordered edge pair (x, y),
///   hom(x, y)  =  sum over g in Z_mbar of hom(x~, g.y~)
/// in the cover, and in total dim(cover algebra) = mbar * dim(base algebra).
inline bool orbit_hom_check(const BrauerGraph& bg, const Cut& cut) {
    require_connected(bg);
    if (!bg.grading_trivial()) {
        throw std::invalid_argument("orbit_hom_check requires trivial grading");
    }
    CoverData cd = build_cover(bg, cut);
    const BrauerGraph& cov = cd.cover;

    if (dimension(cov) != static_cast<long long>(cd.mbar) * dimension(bg)) return false;

    // fixed lift of edge x: the cover edge through (min half-edge of x, 0)
    auto lift_edge = [&](int x, int g) {
        auto [h, hbar] = bg.index().edge_half_edges(x);
        (void)hbar;
        return cov.edge_of(cd.cover_half_edge(h, g));
    };

    // count cover basis elements once, bucketed by (source edge, target edge)
    std::vector<std::vector<int>> hom_cov(cov.edge_count(), std::vector<int>(cov.edge_count(), 0));
    for (const PathNF& p : path_basis(cov)) {
        ++hom_cov[source_edge(cov, p)][target_edge(cov, p)];
    }
    std::vector<std::vector<int>> hom_base(bg.edge_count(), std::vector<int>(bg.edge_count(), 0));
    for (const PathNF& p : path_basis(bg)) {
        ++hom_base[source_edge(bg, p)][target_edge(bg, p)];
    }

    for (int x = 0; x < bg.edge_count(); ++x) {
        for (int y = 0; y < bg.edge_count(); ++y) {
            int total = 0;
            for (int g = 0; g < cd.mbar; ++g) total += hom_cov[lift_edge(x, 0)][lift_edge(y, g)];
            if (total != hom_base[x][y]) return false;
        }
    }
    return true;
}

}  // namespace bga
