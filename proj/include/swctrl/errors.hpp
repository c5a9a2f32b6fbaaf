#pragma once

#include <stdexcept>

namespace swctrl {

/// Incompatible matrix/graph dimensions.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed wire input; the message names the offending field.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hard size cap would be exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The problem instance has no solution (e.g. P2 on an uncontrollable system).
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swctrl
