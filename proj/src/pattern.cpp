#include "swctrl/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "swctrl/errors.hpp"

namespace swctrl {

namespace {

std::string shape_string(int rows, int cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

}  // namespace

Pattern::Pattern(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("pattern shape must be positive, got " +
                                shape_string(rows, cols));
  }
}

Pattern::Pattern(int rows, int cols, std::vector<Entry> entries)
    : Pattern(rows, cols) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [r, c] = entries[i];
    if (r < 1 || r > rows_ || c < 1 || c > cols_) {
      std::ostringstream os;
      os << "entry (" << r << "," << c << ") outside " << shape_string(rows_, cols_);
      throw std::invalid_argument(os.str());
    }
    if (i > 0 && entries[i] == entries[i - 1]) {
      std::ostringstream os;
      os << "duplicate entry (" << r << "," << c << ")";
      throw std::invalid_argument(os.str());
    }
  }
  nonzeros_ = std::move(entries);
}

Pattern Pattern::diagonal(int n, const std::vector<int>& indices) {
  std::vector<Entry> entries;
  entries.reserve(indices.size());
  for (int i : indices) entries.emplace_back(i, i);
  return Pattern(n, n, std::move(entries));
}

bool Pattern::contains(int row, int col) const {
  return std::binary_search(nonzeros_.begin(), nonzeros_.end(),
                            Entry{row, col});
}

std::vector<int> Pattern::row_support() const {
  std::vector<int> rows;
  for (const auto& [r, c] : nonzeros_) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

std::vector<int> Pattern::col_support() const {
  std::vector<int> cols;
  for (const auto& [r, c] : nonzeros_) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

Pattern Pattern::widened(int new_cols) const {
  if (new_cols < cols_) {
    throw dimension_error("widened: new column count " +
                          std::to_string(new_cols) + " below current " +
                          std::to_string(cols_));
  }
  return Pattern(rows_, new_cols, nonzeros_);
}

Pattern union_of(std::span<const Pattern> patterns) {
  if (patterns.empty()) {
    throw std::invalid_argument("union_of: empty pattern list");
  }
  const int rows = patterns.front().rows();
  const int cols = patterns.front().cols();
  std::vector<Entry> merged;
  for (const Pattern& p : patterns) {
    if (p.rows() != rows || p.cols() != cols) {
      throw dimension_error("union_of: shape mismatch " + shape_string(rows, cols) +
                            " vs " + shape_string(p.rows(), p.cols()));
    }
    merged.insert(merged.end(), p.nonzeros().begin(), p.nonzeros().end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Pattern(rows, cols, std::move(merged));
}

Pattern union_of(const Pattern& a, const Pattern& b) {
  const Pattern both[] = {a, b};
  return union_of(std::span<const Pattern>(both, 2));
}

Pattern concat(std::span<const Pattern> patterns) {
  if (patterns.empty()) {
    throw std::invalid_argument("concat: empty pattern list");
  }
  const int rows = patterns.front().rows();
  int total_cols = 0;
  for (const Pattern& p : patterns) {
    if (p.rows() != rows) {
      throw dimension_error("concat: row count mismatch " + std::to_string(rows) +
                            " vs " + std::to_string(p.rows()));
    }
    total_cols += p.cols();
  }
  std::vector<Entry> shifted;
  int offset = 0;
  for (const Pattern& p : patterns) {
    for (const auto& [r, c] : p.nonzeros()) shifted.emplace_back(r, c + offset);
    offset += p.cols();
  }
  return Pattern(rows, total_cols, std::move(shifted));
}

SwitchedSystem::SwitchedSystem(int n, std::vector<Pattern> a_modes,
                               std::optional<std::vector<Pattern>> b_modes)
    : n_(n), a_modes_(std::move(a_modes)), b_modes_(std::move(b_modes)) {
  if (n_ <= 0) throw std::invalid_argument("state dimension must be positive");
  if (a_modes_.empty()) throw std::invalid_argument("at least one mode required");
  for (const Pattern& a : a_modes_) {
    if (a.rows() != n_ || a.cols() != n_) {
      throw dimension_error("mode dynamics pattern must be " +
                            shape_string(n_, n_) + ", got " +
                            shape_string(a.rows(), a.cols()));
    }
  }
  if (b_modes_) {
    if (static_cast<int>(b_modes_->size()) != mode_count()) {
      throw dimension_error("input pattern list must have one entry per mode");
    }
    for (const Pattern& b : *b_modes_) {
      if (b.rows() != n_) {
        throw dimension_error("input pattern must have " + std::to_string(n_) +
                              " rows, got " + std::to_string(b.rows()));
      }
      if (b.cols() > n_) {
        throw dimension_error("input pattern has more than n columns");
      }
    }
  }
}

const Pattern& SwitchedSystem::a_mode(int k) const {
  if (k < 1 || k > mode_count()) throw std::invalid_argument("mode index out of range");
  return a_modes_[k - 1];
}

Pattern SwitchedSystem::b_mode_or_zero(int k) const {
  if (k < 1 || k > mode_count()) throw std::invalid_argument("mode index out of range");
  if (b_modes_) return (*b_modes_)[k - 1];
  return Pattern(n_, n_);
}

Pattern SwitchedSystem::a_union() const {
  return union_of(std::span<const Pattern>(a_modes_));
}

Pattern SwitchedSystem::b_union() const {
  if (!b_modes_) return Pattern(n_, n_);
  std::vector<Pattern> widened;
  widened.reserve(b_modes_->size());
  for (const Pattern& b : *b_modes_) widened.push_back(b.widened(n_));
  return union_of(std::span<const Pattern>(widened));
}

SwitchedSystem SwitchedSystem::with_b(std::vector<Pattern> b_modes) const {
  return SwitchedSystem(n_, a_modes_, std::move(b_modes));
}

}  // namespace swctrl
