#pragma once

#include <string>

#include "deg/graph.hpp"
#include "deg/qsym.hpp"
#include "deg/transform.hpp"

namespace deg {

// {"n":…, "N":…, "vertices":[{"id":…, "sigma":"+-+…", "word":[…],
//  "stat":…}], "edges":{"2":[[a,b],…], …}}; twisted edges carried in an
// optional "twisted" field preserved on round trips.
std::string graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const std::string& text);

// vertices labeled by signature (optionally word), edges labeled by
// color; double edges drawn once with a combined label; twisted colors
// get a combining tilde.
std::string graph_to_dot(const ColoredGraph& g, bool show_words = false);

std::string schur_to_json(const SchurPoly& p);
std::string log_to_json(const TransformLog& log);
TransformLog log_from_json(const std::string& text);

}  // namespace deg
