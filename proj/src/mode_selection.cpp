#include "swctrl/mode_selection.hpp"

#include <algorithm>
#include <stdexcept>

#include "swctrl/digraph.hpp"
#include "swctrl/errors.hpp"
#include "swctrl/matching.hpp"
#include "swctrl/verification.hpp"

namespace swctrl {

namespace {

bool subset_feasible(const SwitchedSystem& sys, const std::vector<int>& modes) {
  return check_structural_controllability(restrict_modes(sys, modes)).overall;
}

int accessible_count(const SwitchedSystem& sys, const std::vector<int>& modes) {
  const SwitchedSystem sub = restrict_modes(sys, modes);
  return static_cast<int>(
      accessible_set(build_state_digraph(sub.a_union()), sub.b_union()).size());
}

int concat_rank(const SwitchedSystem& sys, const std::vector<int>& modes) {
  const SwitchedSystem sub = restrict_modes(sys, modes);
  std::vector<Pattern> blocks = sub.a_modes();
  for (int k = 1; k <= sub.mode_count(); ++k) blocks.push_back(sub.b_mode_or_zero(k));
  return generic_rank(concat(std::span<const Pattern>(blocks)));
}

}  // namespace

std::string to_string(ModeSubsetResult::Method method) {
  return method == ModeSubsetResult::Method::exact ? "exact" : "greedy";
}

SwitchedSystem restrict_modes(const SwitchedSystem& sys,
                              const std::vector<int>& modes) {
  if (modes.empty()) throw std::invalid_argument("restrict_modes: empty subset");
  std::vector<int> sorted = modes;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > sys.mode_count()) {
      throw std::invalid_argument("restrict_modes: mode index " +
                                  std::to_string(sorted[i]) + " out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("restrict_modes: duplicate mode index " +
                                  std::to_string(sorted[i]));
    }
  }
  std::vector<Pattern> a_modes;
  std::vector<Pattern> b_modes;
  for (int k : sorted) {
    a_modes.push_back(sys.a_mode(k));
    if (sys.has_inputs()) b_modes.push_back(sys.b_mode_or_zero(k));
  }
  if (sys.has_inputs()) {
    return SwitchedSystem(sys.n(), std::move(a_modes), std::move(b_modes));
  }
  return SwitchedSystem(sys.n(), std::move(a_modes));
}

ModeSubsetResult min_modes_exact(const SwitchedSystem& sys) {
  const int m = sys.mode_count();
  if (!check_structural_controllability(sys).overall) {
    throw infeasible_error("system is not structurally controllable with all modes");
  }
  for (int k = 1; k <= m; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
      if (subset_feasible(sys, pick)) {
        return {pick, k, ModeSubsetResult::Method::exact, true};
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == m - (k - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("full mode set verified but enumeration found nothing");
}

ModeSubsetResult min_modes_greedy(const SwitchedSystem& sys) {
  const int m = sys.mode_count();
  if (!check_structural_controllability(sys).overall) {
    throw infeasible_error("system is not structurally controllable with all modes");
  }
  std::vector<int> chosen;
  for (int k = 1; k <= m; ++k) {
    if (sys.b_mode_or_zero(k).nnz() > 0) chosen.push_back(k);
  }
  if (chosen.empty()) {
    // Cannot happen after the full-system check; inputs exist somewhere.
    throw std::logic_error("no mode carries an input");
  }

  while (!subset_feasible(sys, chosen)) {
    const int base_accessible = accessible_count(sys, chosen);
    const int base_rank = concat_rank(sys, chosen);
    int best_mode = 0;
    int best_gain = -1;
    for (int k = 1; k <= m; ++k) {
      if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      std::vector<int> candidate = chosen;
      candidate.push_back(k);
      std::sort(candidate.begin(), candidate.end());
      const int gain = (accessible_count(sys, candidate) - base_accessible) +
                       (concat_rank(sys, candidate) - base_rank);
      if (gain > best_gain) {
        best_gain = gain;
        best_mode = k;
      }
    }
    chosen.push_back(best_mode);
    std::sort(chosen.begin(), chosen.end());
  }
  return {chosen, static_cast<int>(chosen.size()), ModeSubsetResult::Method::greedy,
          true};
}

SwitchedSystem make_setcover_instance(int universe_size,
                                      const std::vector<std::vector<int>>& subsets) {
  if (universe_size < 1) {
    throw std::invalid_argument("set-cover universe must be non-empty");
  }
  if (subsets.empty()) {
    throw std::invalid_argument("set-cover instance needs at least one subset");
  }
  std::vector<bool> covered(universe_size + 1, false);
  for (const auto& subset : subsets) {
    for (int e : subset) {
      if (e < 1 || e > universe_size) {
        throw std::invalid_argument("set-cover element " + std::to_string(e) +
                                    " outside the universe");
      }
      covered[e] = true;
    }
  }
  for (int e = 1; e <= universe_size; ++e) {
    if (!covered[e]) {
      throw std::invalid_argument("subsets do not cover element " + std::to_string(e));
    }
  }

  const int n = universe_size + 1;
  std::vector<Pattern> a_modes;
  std::vector<Pattern> b_modes;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    std::vector<Entry> entries;
    for (int v = 1; v <= n; ++v) entries.emplace_back(v, v);
    // Path edge e_j runs x_j -> x_{j+1}, i.e. matrix entry (j+1, j).
    std::vector<int> subset = subsets[k];
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int j : subset) entries.emplace_back(j + 1, j);
    a_modes.emplace_back(n, n, std::move(entries));
    b_modes.emplace_back(n, n,
                         k == 0 ? std::vector<Entry>{{1, 1}} : std::vector<Entry>{});
  }
  return SwitchedSystem(n, std::move(a_modes), std::move(b_modes));
}

}  // namespace swctrl
