#include "swctrl/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "swctrl/errors.hpp"

namespace swctrl {

WeightedBipartite::WeightedBipartite(std::vector<ColumnLabel> left_labels,
                                     int right_count,
                                     std::vector<std::pair<int, int>> edges)
    : labels_(std::move(left_labels)), right_count_(right_count),
      edges_(std::move(edges)) {
  if (right_count_ < 0) throw std::invalid_argument("negative right count");
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(labels_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [l, r] = edges_[i];
    if (l < 1 || l > left_count() || r < 1 || r > right_count_) {
      throw std::invalid_argument("bipartite edge endpoint out of range");
    }
    if (i > 0 && edges_[i] == edges_[i - 1]) {
      throw std::invalid_argument("duplicate bipartite edge");
    }
    adj_[l - 1].push_back(r);
  }
  for (const ColumnLabel& label : labels_) {
    if (label.kind == ColumnLabel::Kind::s_column) ++s_count_;
  }
}

Matching max_matching(const WeightedBipartite& g) {
  std::vector<int> match_right(g.right_count() + 1, 0);  // row -> left, 0 = free
  std::vector<bool> visited(g.right_count() + 1, false);

  std::function<bool(int)> try_augment = [&](int left) {
    for (int r : g.neighbors(left)) {
      if (visited[r]) continue;
      visited[r] = true;
      if (match_right[r] == 0 || try_augment(match_right[r])) {
        match_right[r] = left;
        return true;
      }
    }
    return false;
  };

  for (int l = 1; l <= g.left_count(); ++l) {
    std::fill(visited.begin(), visited.end(), false);
    try_augment(l);
  }

  Matching m;
  for (int r = 1; r <= g.right_count(); ++r) {
    if (match_right[r] != 0) {
      m.pairs.emplace_back(match_right[r], r);
      m.total_weight += g.weight_of(match_right[r]);
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

// Sequential shortest-augmenting-path assignment with potentials. Columns
// of the cost matrix are the real rows 1..R followed by one sentinel slot
// per left vertex (slot for left l = R + l, usable only by l). A perfect
// assignment of the lefts always exists, and with every sentinel costing
// C_big > any achievable weight sum, minimizing total cost yields the
// maximum-cardinality matching of minimum weight. Lefts are processed in
// canonical label order and ties resolved toward the lowest column index,
// which pins the reported matching for reproducibility.
Matching min_weight_max_matching(const WeightedBipartite& g) {
  const int L = g.left_count();
  const int R = g.right_count();
  const int C = R + L;
  const long long INF = std::numeric_limits<long long>::max() / 4;
  const long long c_big = R + g.s_column_count() + 1;

  // Dense weight rows over the real columns; sentinels handled inline.
  std::vector<std::vector<long long>> cost(L + 1);
  for (int l = 1; l <= L; ++l) {
    cost[l].assign(R + 1, INF);
    for (int r : g.neighbors(l)) cost[l][r] = g.weight_of(l);
  }
  const auto cost_at = [&](int l, int j) -> long long {
    if (j <= R) return cost[l][j];
    return j == R + l ? c_big : INF;
  };

  std::vector<long long> pot_left(L + 1, 0), pot_col(C + 1, 0);
  std::vector<int> owner(C + 1, 0);  // column -> left, 0 = free
  std::vector<long long> min_reduced(C + 1);
  std::vector<int> prev_col(C + 1);
  std::vector<bool> used(C + 1);

  for (int l0 = 1; l0 <= L; ++l0) {
    std::fill(min_reduced.begin(), min_reduced.end(), INF);
    std::fill(prev_col.begin(), prev_col.end(), 0);
    std::fill(used.begin(), used.end(), false);
    int j0 = 0;
    owner[0] = l0;
    do {
      used[j0] = true;
      const int l = owner[j0];
      long long delta = INF;
      int j_next = -1;
      for (int j = 1; j <= C; ++j) {
        if (used[j]) continue;
        const long long base = cost_at(l, j);
        if (base < INF) {
          const long long reduced = base - pot_left[l] - pot_col[j];
          if (reduced < min_reduced[j]) {
            min_reduced[j] = reduced;
            prev_col[j] = j0;
          }
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j_next = j;
        }
      }
      for (int j = 0; j <= C; ++j) {
        if (used[j]) {
          pot_left[owner[j]] += delta;
          pot_col[j] -= delta;
        } else if (min_reduced[j] < INF) {
          min_reduced[j] -= delta;
        }
      }
      j0 = j_next;
    } while (owner[j0] != 0);
    // Flip the augmenting path back to the processed left.
    while (j0 != 0) {
      const int j_prev = prev_col[j0];
      owner[j0] = owner[j_prev];
      j0 = j_prev;
    }
  }

  Matching m;
  for (int j = 1; j <= R; ++j) {
    if (owner[j] != 0) {
      m.pairs.emplace_back(owner[j], j);
      m.total_weight += g.weight_of(owner[j]);
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

int generic_rank(const Pattern& p) {
  std::vector<ColumnLabel> labels;
  labels.reserve(p.cols());
  for (int c = 1; c <= p.cols(); ++c) labels.push_back(ColumnLabel::a(1, c));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(p.nonzeros().size());
  for (const auto& [r, c] : p.nonzeros()) edges.emplace_back(c, r);
  return max_matching(WeightedBipartite(std::move(labels), p.rows(), std::move(edges)))
      .size();
}

WeightedBipartite build_placement_bipartite(const SwitchedSystem& sys,
                                            const SccDecomposition& decomp) {
  const int n = sys.n();
  const int m = sys.mode_count();
  if (decomp.vertex_count() != n) {
    throw dimension_error("decomposition vertex count does not match the system");
  }

  std::vector<ColumnLabel> labels;
  labels.reserve(static_cast<std::size_t>(m) * n + decomp.non_top_linked.size());
  for (int k = 1; k <= m; ++k) {
    for (int c = 1; c <= n; ++c) labels.push_back(ColumnLabel::a(k, c));
  }
  const int beta = static_cast<int>(decomp.non_top_linked.size());
  for (int j = 1; j <= beta; ++j) labels.push_back(ColumnLabel::s(j));

  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k <= m; ++k) {
    const int offset = (k - 1) * n;
    for (const auto& [r, c] : sys.a_mode(k).nonzeros()) {
      edges.emplace_back(offset + c, r);
    }
  }
  for (int j = 1; j <= beta; ++j) {
    const int comp_id = decomp.non_top_linked[j - 1];
    for (int state : decomp.components[comp_id - 1]) {
      edges.emplace_back(m * n + j, state);
    }
  }
  return WeightedBipartite(std::move(labels), n, std::move(edges));
}

}  // namespace swctrl
