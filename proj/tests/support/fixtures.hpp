#pragma once

#include <vector>

#include "bga/brauer_graph.hpp"
#include "bga/ribbon_graph.hpp"

namespace bga::fixtures {

// Triangle: three vertices of valency 2, edges {0,1}, {2,3}, {4,5}.
// Faces are {0,2,4} and {1,3,5}, both of perimeter 3 (an annulus).
inline RibbonGraph triangle() { return RibbonGraph{{5, 2, 1, 4, 3, 0}, {1, 0, 3, 2, 5, 4}}; }

inline BrauerGraph triangle123() { return BrauerGraph(triangle(), {1, 2, 3}); }

// Single edge with two valency-1 endpoints.
inline RibbonGraph single_edge() { return RibbonGraph{{0, 1}, {1, 0}}; }

// One vertex with a loop.
inline RibbonGraph one_vertex_loop() { return RibbonGraph{{1, 0}, {1, 0}}; }

// Two loops at one vertex, rotations interleaved; one face of perimeter 4, genus 1.
inline RibbonGraph two_loop_bouquet() { return RibbonGraph{{2, 3, 1, 0}, {1, 0, 3, 2}}; }

// Path with two edges: e0 = {0,1}, e1 = {2,3}; the middle vertex carries {1,2}.
inline RibbonGraph path2() { return RibbonGraph{{0, 2, 1, 3}, {1, 0, 3, 2}}; }

// Path with three edges: vertices {0}, {1,2}, {3,4}, {5}.
inline RibbonGraph path3() { return RibbonGraph{{0, 2, 1, 4, 3, 5}, {1, 0, 3, 2, 5, 4}}; }

// Star with three edges around the central vertex {0,2,4}.
inline RibbonGraph star3() { return RibbonGraph{{2, 1, 4, 3, 0, 5}, {1, 0, 3, 2, 5, 4}}; }

}  // namespace bga::fixtures
