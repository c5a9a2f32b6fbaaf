#include "swctrl/placement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "swctrl/digraph.hpp"
#include "swctrl/errors.hpp"

namespace swctrl {

std::vector<int> PlacementSolution::actuated() const {
  std::vector<int> all;
  all.insert(all.end(), j_prime.begin(), j_prime.end());
  all.insert(all.end(), j_dprime.begin(), j_dprime.end());
  all.insert(all.end(), j_tprime.begin(), j_tprime.end());
  std::sort(all.begin(), all.end());
  return all;
}

PlacementSolution dedicated_placement(const SwitchedSystem& sys) {
  const int n = sys.n();
  const SccDecomposition decomp = scc_decompose(build_state_digraph(sys.a_union()));
  const WeightedBipartite graph = build_placement_bipartite(sys, decomp);
  const Matching mwmm = min_weight_max_matching(graph);

  PlacementSolution sol;
  std::vector<bool> matched(n + 1, false);
  std::vector<int> s_match_of_comp(decomp.component_count() + 1, 0);
  for (const auto& [left, right] : mwmm.pairs) {
    matched[right] = true;
    const ColumnLabel& label = graph.left_labels()[left - 1];
    if (label.kind == ColumnLabel::Kind::s_column) {
      sol.j_prime.push_back(right);
      s_match_of_comp[decomp.non_top_linked[label.index - 1]] = right;
    }
  }
  for (int r = 1; r <= n; ++r) {
    if (!matched[r]) sol.j_dprime.push_back(r);
  }
  std::sort(sol.j_prime.begin(), sol.j_prime.end());

  std::vector<bool> in_j12(n + 1, false);
  for (int v : sol.j_prime) in_j12[v] = true;
  for (int v : sol.j_dprime) in_j12[v] = true;

  for (int id : decomp.non_top_linked) {
    if (s_match_of_comp[id] != 0) {
      sol.scc_cover[id] = s_match_of_comp[id];
      continue;
    }
    const auto& members = decomp.components[id - 1];
    const auto it =
        std::find_if(members.begin(), members.end(), [&](int v) { return in_j12[v]; });
    if (it != members.end()) {
      sol.scc_cover[id] = *it;  // an unmatched row inside already actuates it
    } else {
      sol.j_tprime.push_back(members.front());
      sol.scc_cover[id] = members.front();
    }
  }
  std::sort(sol.j_tprime.begin(), sol.j_tprime.end());
  sol.cardinality = static_cast<int>(sol.j_prime.size() + sol.j_dprime.size() +
                                     sol.j_tprime.size());
  return sol;
}

ModeInputAssignment dedicated_b(const PlacementSolution& sol, int n, int mode_count) {
  const std::vector<int> actuated = sol.actuated();
  if (actuated.empty()) {
    throw std::invalid_argument("dedicated_b: empty actuated set");
  }
  if (mode_count < 1) throw std::invalid_argument("dedicated_b: no modes");
  ModeInputAssignment assignment;
  assignment.b_modes.push_back(Pattern::diagonal(n, actuated));
  for (int k = 2; k <= mode_count; ++k) assignment.b_modes.emplace_back(n, n);
  assignment.total_nonzeros = static_cast<int>(actuated.size());
  return assignment;
}

Pattern non_dedicated_b(const PlacementSolution& sol, int n,
                        const std::map<int, int>& column_choice) {
  for (const auto& [state, col] : column_choice) {
    if (!std::binary_search(sol.j_tprime.begin(), sol.j_tprime.end(), state)) {
      throw std::invalid_argument("column choice for state " + std::to_string(state) +
                                  " which is not in j_tprime");
    }
    if (col < 1 || col > n) {
      throw std::invalid_argument("column choice " + std::to_string(col) +
                                  " out of range for state " + std::to_string(state));
    }
  }
  std::vector<Entry> entries;
  for (int v : sol.j_prime) entries.emplace_back(v, v);
  for (int v : sol.j_dprime) entries.emplace_back(v, v);
  for (int v : sol.j_tprime) {
    const auto it = column_choice.find(v);
    if (it == column_choice.end()) {
      throw std::invalid_argument("missing column choice for state " +
                                  std::to_string(v));
    }
    entries.emplace_back(v, it->second);
  }
  return Pattern(n, n, std::move(entries));
}

Pattern minimal_b(const PlacementSolution& sol, int n) {
  std::vector<int> anchors;
  anchors.insert(anchors.end(), sol.j_prime.begin(), sol.j_prime.end());
  anchors.insert(anchors.end(), sol.j_dprime.begin(), sol.j_dprime.end());
  std::sort(anchors.begin(), anchors.end());
  std::map<int, int> choice;
  if (anchors.empty()) {
    // Merging is undefined without an anchor column; dedicated stays valid.
    for (int v : sol.j_tprime) choice[v] = v;
  } else {
    for (int v : sol.j_tprime) choice[v] = anchors.front();
  }
  return non_dedicated_b(sol, n, choice);
}

ModeInputAssignment distribute(const Pattern& base, int mode_count,
                               const std::map<int, int>& column_to_mode) {
  if (mode_count < 1) throw std::invalid_argument("distribute: no modes");
  const std::vector<int> nonzero_cols = base.col_support();
  for (int c : nonzero_cols) {
    if (column_to_mode.find(c) == column_to_mode.end()) {
      throw std::invalid_argument("distribute: column " + std::to_string(c) +
                                  " unassigned");
    }
  }
  for (const auto& [col, mode] : column_to_mode) {
    if (!std::binary_search(nonzero_cols.begin(), nonzero_cols.end(), col)) {
      throw std::invalid_argument("distribute: column " + std::to_string(col) +
                                  " has no nonzero entries");
    }
    if (mode < 1 || mode > mode_count) {
      throw std::invalid_argument("distribute: mode " + std::to_string(mode) +
                                  " out of range for column " + std::to_string(col));
    }
  }

  std::vector<std::vector<Entry>> per_mode(mode_count);
  for (const auto& [r, c] : base.nonzeros()) {
    per_mode[column_to_mode.at(c) - 1].emplace_back(r, c);
  }
  ModeInputAssignment assignment;
  for (int k = 0; k < mode_count; ++k) {
    assignment.b_modes.emplace_back(base.rows(), base.cols(), std::move(per_mode[k]));
  }
  assignment.total_nonzeros = base.nnz();
  return assignment;
}

}  // namespace swctrl
