#pragma once

#include <string>

#include <json.hpp>

#include "swctrl/pattern.hpp"

namespace swctrl {

/// Parses the wire format
///   {"n": int, "modes": [{"A": [[r,c],...], "B": [[r,c],...]}, ...]}
/// with 1-indexed entries. "B" is optional per mode; when any mode carries
/// one, missing ones become all-zero n x n patterns. Throws parse_error
/// naming the offending field.
SwitchedSystem parse_system(const std::string& text);

/// JSON form of a system; nonzeros sorted by (row, col).
nlohmann::json system_to_json(const SwitchedSystem& sys);

/// parse_system(serialize_system(s)) == s for every valid system.
std::string serialize_system(const SwitchedSystem& sys);

/// Entries of a pattern as a JSON array of [row, col] pairs.
nlohmann::json entries_to_json(const Pattern& p);

}  // namespace swctrl
