#pragma once

#include <vector>

#include "deg/graph.hpp"

namespace deg {
namespace fixtures {

// Builds a signed, colored graph from bare colored edges by solving for
// the signatures: axiom 1 fixes each consecutive sign pair from edge
// presence, axiom 2 propagates the base sign across edges. The first
// vertex of each component gets sigma_1 = +1 (all checked axioms are
// invariant under the global flip). Every axiom-2 constraint is
// re-verified after solving, which guards the transcription.
ColoredGraph solve_signatures(int n, const std::vector<std::vector<std::pair<int, int>>>& edges_by_color);

// Two-fold cover of the standard graph on (3,2,1): two copies with one
// 5-edge swapped across. Satisfies axioms 1-5 but not 6.
ColoredGraph gregg_cover();

// The appendix graph violating only axiom 4'c (35 vertices, type (6,6)).
ColoredGraph axiom4c_violator();

// The appendix graph violating only axiom 4'b (36 vertices, type (6,6)).
ColoredGraph axiom4b_violator();

}  // namespace fixtures
}  // namespace deg
