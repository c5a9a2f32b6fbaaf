#pragma once

#include <string>
#include <vector>

#include "swctrl/pattern.hpp"

namespace swctrl {

struct ModeSubsetResult {
  enum class Method { exact, greedy };
  std::vector<int> modes;  // sorted original mode indices
  int size = 0;
  Method method = Method::exact;
  bool feasible = false;
};

std::string to_string(ModeSubsetResult::Method method);

/// Sub-system with only the selected modes (A and B), 1-indexed, ascending.
SwitchedSystem restrict_modes(const SwitchedSystem& sys,
                              const std::vector<int>& modes);

/// Minimum mode subset preserving structural controllability, found by
/// enumerating subsets in ascending cardinality (lexicographic within).
/// Exponential in the mode count by nature of the problem; throws
/// infeasible_error when even the full system fails the verifier.
ModeSubsetResult min_modes_exact(const SwitchedSystem& sys);

/// Greedy heuristic: start from the modes carrying inputs, then repeatedly
/// add the mode with the largest accessibility + matching gain (ties to the
/// lowest index) until the verifier passes. Always feasible; never smaller
/// than the exact optimum, with no approximation guarantee.
ModeSubsetResult min_modes_greedy(const SwitchedSystem& sys);

/// Set-cover reduction instance: a path of universe_size+1 states with
/// self-loops everywhere, mode k carrying the path edges of subset k, and a
/// single dedicated input at state 1 in mode 1. Selecting modes then is
/// covering path edges. Subsets must jointly cover {1..universe_size}.
SwitchedSystem make_setcover_instance(int universe_size,
                                      const std::vector<std::vector<int>>& subsets);

}  // namespace swctrl
