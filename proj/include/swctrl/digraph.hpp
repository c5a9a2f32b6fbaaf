#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swctrl/pattern.hpp"

namespace swctrl {

/// Directed graph over vertices 1..vertex_count with a sorted, duplicate-free
/// edge set.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // (from, to), sorted
};

/// State digraph of a square pattern: matrix entry (j, k) becomes the edge
/// k -> j (column index feeds row index).
Digraph build_state_digraph(const Pattern& pattern);

/// Strongly connected components of a digraph together with the condensation
/// DAG. Component ids are assigned in ascending order of each component's
/// smallest vertex, which fixes the enumeration of non-top-linked components
/// (and hence the surrogate-column order downstream).
struct SccDecomposition {
  std::vector<int> component_of;             // vertex-1 -> component id (1-based)
  std::vector<std::vector<int>> components;  // id-1 -> sorted member vertices
  std::vector<std::pair<int, int>> dag_edges;  // induced, self-pairs excluded
  std::vector<int> non_top_linked;           // component ids without incoming dag edge

  int component_count() const { return static_cast<int>(components.size()); }
  int vertex_count() const { return static_cast<int>(component_of.size()); }
};

SccDecomposition scc_decompose(const Digraph& g);

/// States reachable from the actuated states (the row support of b_union),
/// the actuated states themselves included. Sorted.
std::vector<int> accessible_set(const Digraph& g, const Pattern& b_union);

struct ConditionIResult {
  bool pass = false;
  std::vector<int> uncovered;  // non-top-linked component ids lacking an input
};

/// Condition (i): every non-top-linked component contains an actuated state.
/// By the accessibility lemma this is equivalent to accessible_set covering
/// all vertices (a tested property, not assumed here).
ConditionIResult condition_i_holds(const SccDecomposition& decomp,
                                   const Pattern& b_union);

/// Canonical DOT text: one dashed cluster per SCC (in component-id order,
/// vertices ascending), non-top-linked clusters labeled N{j}^T, input
/// vertices as boxes, then state and input edges in sorted order.
std::string export_dot(const Digraph& g, const SccDecomposition& decomp,
                       const std::optional<Pattern>& b_union = std::nullopt);

}  // namespace swctrl
