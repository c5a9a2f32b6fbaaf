#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "swctrl/pattern.hpp"

namespace swctrl {

/// Outcome of the two-condition structural controllability test.
struct VerificationReport {
  bool condition_i = false;
  std::vector<std::vector<int>> uncovered_sccs;  // states of each uncovered SCC
  bool condition_ii = false;
  int matching_size = 0;  // maximum matching of the full concatenation
  int target = 0;         // n
  bool overall = false;
};

/// Checks (i) every non-top-linked SCC of the union digraph holds an
/// actuated state and (ii) the concatenation of all mode and input patterns
/// has generic rank n. Absent inputs count as all-zero patterns.
VerificationReport check_structural_controllability(const SwitchedSystem& sys);

/// Numeric realization of a structural system: every pattern nonzero gets
/// an i.i.d. draw from `range`, all structural zeros stay zero.
struct RealizationRange {
  double lo = 0.5;
  double hi = 1.5;
};

struct NumericSystem {
  int n = 0;
  int m = 0;
  std::vector<Eigen::MatrixXd> a_modes;
  std::vector<Eigen::MatrixXd> b_modes;
  std::uint64_t seed = 0;
};

/// Reproducible per seed. The range must be bounded and exclude zero.
NumericSystem realize(const SwitchedSystem& sys, std::uint64_t seed,
                      RealizationRange range = {});

/// Hard caps on the controllability-matrix construction; the column count
/// grows like m^(n-1).
struct CtrbCaps {
  int max_n = 8;
  int max_m = 4;
};

/// Switched controllability matrix: one block A_w B_j per mode-word w of
/// length 0..n-1 and per input mode j, words enumerated by length then
/// lexicographically, input modes innermost. Throws resource_error naming
/// the would-be column count when a cap is exceeded.
Eigen::MatrixXd switched_ctrb_matrix(const NumericSystem& num, CtrbCaps caps = {});

/// True iff the controllability matrix has n singular values above
/// tol * (largest singular value).
bool numeric_controllable(const NumericSystem& num, double tol = 1e-8,
                          CtrbCaps caps = {});

struct MinDedicatedResult {
  int cardinality = 0;
  std::vector<int> witness;
};

/// Exhaustive minimality oracle: smallest dedicated state set (placed in
/// mode 1) passing the structural verifier, searched by ascending size and
/// lexicographic order. Exponential in n.
MinDedicatedResult brute_force_min_dedicated(const SwitchedSystem& sys);

}  // namespace swctrl
