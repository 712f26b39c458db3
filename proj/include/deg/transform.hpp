#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deg/graph.hpp"

namespace deg {

struct TransformEvent {
  int step = 0;
  std::string map;  // "phi" | "psi" | "theta"
  int color = 0;
  Word anchor;      // witness word; for theta the least word of the pivot
};

using TransformLog = std::vector<TransformEvent>;

class TransformFailed : public std::runtime_error {
 public:
  TransformFailed(const std::string& what, TransformLog log = {})
      : std::runtime_error(what), log_(std::move(log)) {}
  const TransformLog& log() const { return log_; }

 private:
  TransformLog log_;
};

// Vertices of i-type W whose E_{i-1} and E_i partners differ.
std::vector<int> witnesses_W(const ColoredGraph& g, int i);
// Vertices of i-type C without an i-1 neighbor where E_{i-2} and E_i
// fail to commute.
std::vector<int> witnesses_X(const ColoredGraph& g, int i);

// Isomorphism of the i-packages of a and b anchored at a -> b,
// propagated over package edges; preserves the retained signature
// positions. nullopt when no such isomorphism exists.
std::optional<std::map<int, int>> package_isomorphism(const ColoredGraph& g,
                                                      int a, int b, int i);

// Edge-swapping involutions of Section "three involutions". Each returns
// the rewired graph; only E_i changes. Throws TransformFailed when the
// stated hypotheses fail to produce a coherent rewiring.
ColoredGraph apply_phi(const ColoredGraph& g, int i, int w);
ColoredGraph apply_psi(const ColoredGraph& g, int i, int x);
// anchor: any vertex of the component of E_2..E_i to repair.
ColoredGraph apply_theta(const ColoredGraph& g, int i, int anchor);

struct TransformResult {
  ColoredGraph graph;
  TransformLog log;
};

// Stage-by-stage driver: for i = 2..n-1 drain W_i, then X_i, then apply
// theta_i until axiom 6 holds at level i, repairing local Schur
// positivity per the fixed rule table. Every claimed postcondition is
// re-verified; a violation raises TransformFailed instead of returning
// a wrong graph.
TransformResult transform_to_deg(const ColoredGraph& g);

// Re-applies a recorded event log; the result must equal the original
// transform output.
ColoredGraph replay_transform(const ColoredGraph& g, const TransformLog& log);

// Level-i axiom-6 defect count used by the driver and its tests.
int axiom6_defects(const ColoredGraph& g, int level);

}  // namespace deg
