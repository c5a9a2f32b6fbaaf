#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace swctrl {

/// Nonzero position of a structural pattern, 1-indexed (row, col).
using Entry = std::pair<int, int>;

/// Sparse 0/1 matrix: only the positions of the free parameters are stored.
///
/// Entries are kept sorted by (row, col) with no duplicates, so every
/// consumer sees one canonical order and whole-pipeline runs are
/// reproducible. Instances are immutable after construction.
class Pattern {
 public:
  /// All-zero pattern of the given shape.
  Pattern(int rows, int cols);

  /// Pattern with the given nonzero entries; sorts and validates them.
  /// Throws std::invalid_argument on a non-positive shape, an out-of-range
  /// entry, or a duplicate entry.
  Pattern(int rows, int cols, std::vector<Entry> entries);

  /// n x n pattern with ones exactly at (i, i) for i in `indices`.
  static Pattern diagonal(int n, const std::vector<int>& indices);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& nonzeros() const { return nonzeros_; }
  int nnz() const { return static_cast<int>(nonzeros_.size()); }
  bool is_square() const { return rows_ == cols_; }
  bool contains(int row, int col) const;

  /// Sorted rows that carry at least one nonzero.
  std::vector<int> row_support() const;

  /// Sorted columns that carry at least one nonzero.
  std::vector<int> col_support() const;

  /// Same entries embedded in a wider matrix (new_cols >= cols).
  Pattern widened(int new_cols) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Entry> nonzeros_;
};

/// Entrywise-or of equally shaped patterns. Throws dimension_error on a
/// shape mismatch and std::invalid_argument on an empty list.
Pattern union_of(std::span<const Pattern> patterns);
Pattern union_of(const Pattern& a, const Pattern& b);

/// Horizontal concatenation; inputs must share the row count.
Pattern concat(std::span<const Pattern> patterns);

/// Switched linear system in structural form: m modes of n x n dynamics
/// patterns, optionally with per-mode n x p_i input patterns. When the
/// input patterns are absent every consumer treats each B_i as the n x n
/// zero pattern (the full P1 search space).
class SwitchedSystem {
 public:
  SwitchedSystem(int n, std::vector<Pattern> a_modes,
                 std::optional<std::vector<Pattern>> b_modes = std::nullopt);

  int n() const { return n_; }
  int mode_count() const { return static_cast<int>(a_modes_.size()); }
  const std::vector<Pattern>& a_modes() const { return a_modes_; }
  const Pattern& a_mode(int k) const;  // 1-indexed
  bool has_inputs() const { return b_modes_.has_value(); }
  const std::optional<std::vector<Pattern>>& b_modes() const { return b_modes_; }
  Pattern b_mode_or_zero(int k) const;  // 1-indexed; n x n zero when absent

  Pattern a_union() const;
  /// Union of the input patterns, each widened to n columns; n x n zero
  /// when no inputs are attached.
  Pattern b_union() const;

  /// Copy of this system with the given input patterns attached.
  SwitchedSystem with_b(std::vector<Pattern> b_modes) const;

  friend bool operator==(const SwitchedSystem&, const SwitchedSystem&) = default;

 private:
  int n_;
  std::vector<Pattern> a_modes_;
  std::optional<std::vector<Pattern>> b_modes_;
};

}  // namespace swctrl
