#pragma once

#include <utility>
#include <vector>

#include "swctrl/digraph.hpp"
#include "swctrl/pattern.hpp"

namespace swctrl {

/// Label of a left (column) vertex in the placement bipartite graph.
/// A-columns come from the mode dynamics patterns and carry weight 0;
/// S-columns come from the surrogate matrix (one per non-top-linked SCC)
/// and carry weight 1.
struct ColumnLabel {
  enum class Kind { a_column, s_column };
  Kind kind = Kind::a_column;
  int mode = 0;   // a_column: owning mode, 1-based; s_column: 0
  int index = 0;  // a_column: matrix column; s_column: non-top-linked ordinal

  static ColumnLabel a(int mode, int col) { return {Kind::a_column, mode, col}; }
  static ColumnLabel s(int ordinal) { return {Kind::s_column, 0, ordinal}; }
  int weight() const { return kind == Kind::s_column ? 1 : 0; }

  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

/// Bipartite graph between labeled left vertices and row vertices 1..R.
/// Edge weights are fixed by the left label's kind.
class WeightedBipartite {
 public:
  /// Edges are (left, right) pairs, 1-indexed into labels / rows.
  WeightedBipartite(std::vector<ColumnLabel> left_labels, int right_count,
                    std::vector<std::pair<int, int>> edges);

  int left_count() const { return static_cast<int>(labels_.size()); }
  int right_count() const { return right_count_; }
  const std::vector<ColumnLabel>& left_labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int weight_of(int left) const { return labels_[left - 1].weight(); }
  int s_column_count() const { return s_count_; }
  const std::vector<int>& neighbors(int left) const { return adj_[left - 1]; }

 private:
  std::vector<ColumnLabel> labels_;
  int right_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  int s_count_ = 0;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left
  int total_weight = 0;

  int size() const { return static_cast<int>(pairs.size()); }
};

/// Maximum-cardinality matching; weights ignored. Deterministic: left
/// vertices are processed in label order and rows tried in ascending order.
Matching max_matching(const WeightedBipartite& g);

/// Maximum-cardinality matching of minimum total weight. Solved as a
/// min-cost assignment where each left column may instead take a private
/// sentinel slot at cost C_big = right_count + s_columns + 1, so cardinality
/// dominates weight in a single minimization. Deterministic for fixed input.
Matching min_weight_max_matching(const WeightedBipartite& g);

/// Generic rank of a pattern = maximum matching cardinality of its
/// bipartite graph (columns vs rows).
int generic_rank(const Pattern& p);

/// The weighted bipartite graph of the placement algorithm's matching step:
/// all mode columns (weight 0), then one surrogate column per non-top-linked
/// SCC (weight 1) connected to that SCC's states.
WeightedBipartite build_placement_bipartite(const SwitchedSystem& sys,
                                            const SccDecomposition& decomp);

}  // namespace swctrl
