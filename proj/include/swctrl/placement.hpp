#pragma once

#include <map>
#include <vector>

#include "swctrl/matching.hpp"
#include "swctrl/pattern.hpp"

namespace swctrl {

/// Output of the dedicated-placement algorithm.
///   j_prime:  rows matched through surrogate columns in the MWMM;
///   j_dprime: rows the MWMM leaves unmatched (rank repair);
///   j_tprime: one representative per non-top-linked SCC that contains no
///             state of j_prime + j_dprime (accessibility repair).
/// The three sets are disjoint; their union J is the actuated state set.
struct PlacementSolution {
  std::vector<int> j_prime;
  std::vector<int> j_dprime;
  std::vector<int> j_tprime;
  std::map<int, int> scc_cover;  // non-top-linked component id -> covering state
  int cardinality = 0;

  /// J = j_prime + j_dprime + j_tprime, sorted.
  std::vector<int> actuated() const;
};

/// Per-mode input patterns making up one solution.
struct ModeInputAssignment {
  std::vector<Pattern> b_modes;
  int total_nonzeros = 0;
};

/// Runs the dedicated-placement algorithm: non-top-linked SCCs of the mode
/// union, MWMM of the surrogate bipartite graph, then the three index sets.
PlacementSolution dedicated_placement(const SwitchedSystem& sys);

/// Dedicated solution: diagonal on J in mode 1, zero elsewhere.
ModeInputAssignment dedicated_b(const PlacementSolution& sol, int n, int mode_count);

/// Non-dedicated single-mode solution: diagonal on j_prime + j_dprime, plus
/// one entry per j_tprime row at the chosen column. column_choice must
/// assign every j_tprime state exactly one column in 1..n.
Pattern non_dedicated_b(const PlacementSolution& sol, int n,
                        const std::map<int, int>& column_choice);

/// Minimal solution: every j_tprime row is wired to the smallest column of
/// j_prime + j_dprime, so the distinct actuator count drops to
/// |j_prime + j_dprime|. Falls back to the dedicated diagonal when that set
/// is empty.
Pattern minimal_b(const PlacementSolution& sol, int n);

/// Splits the nonzero columns of a single-mode solution across modes; each
/// nonzero column must be assigned to exactly one mode and keeps its column
/// position. Total nonzeros are conserved.
ModeInputAssignment distribute(const Pattern& base, int mode_count,
                               const std::map<int, int>& column_to_mode);

}  // namespace swctrl
