#include "swctrl/system_io.hpp"

#include <sstream>
#include <vector>

#include "swctrl/errors.hpp"

namespace swctrl {

namespace {

using nlohmann::json;

int parse_positive_int(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw parse_error(field + ": must be a positive integer");
  }
  return j.get<int>();
}

/// Reads one [[r,c],...] array into a pattern, reporting errors against
/// `field` (e.g. "modes[2].A").
Pattern parse_entries(const json& j, int rows, int cols, const std::string& field) {
  if (!j.is_array()) throw parse_error(field + ": must be an array of [row,col] pairs");
  std::vector<Entry> entries;
  entries.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& pair = j[i];
    std::ostringstream at;
    at << field << "[" << i << "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw parse_error(at.str() + ": must be a [row,col] integer pair");
    }
    const int r = pair[0].get<int>();
    const int c = pair[1].get<int>();
    if (r < 1 || r > rows) {
      std::ostringstream os;
      os << at.str() << ": row index " << r << " out of range (1.." << rows << ")";
      throw parse_error(os.str());
    }
    if (c < 1 || c > cols) {
      std::ostringstream os;
      os << at.str() << ": column index " << c << " out of range (1.." << cols << ")";
      throw parse_error(os.str());
    }
    entries.emplace_back(r, c);
  }
  try {
    return Pattern(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw parse_error(field + ": " + e.what());
  }
}

}  // namespace

SwitchedSystem parse_system(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("document: must be a JSON object");
  if (!doc.contains("n")) throw parse_error("n: missing");
  const int n = parse_positive_int(doc["n"], "n");
  if (!doc.contains("modes") || !doc["modes"].is_array() || doc["modes"].empty()) {
    throw parse_error("modes: must be a non-empty array");
  }

  std::vector<Pattern> a_modes;
  std::vector<Pattern> b_modes;
  bool any_b = false;
  for (std::size_t k = 0; k < doc["modes"].size(); ++k) {
    const json& mode = doc["modes"][k];
    std::ostringstream at;
    at << "modes[" << k << "]";
    if (!mode.is_object()) throw parse_error(at.str() + ": must be an object");
    if (!mode.contains("A")) throw parse_error(at.str() + ".A: missing");
    a_modes.push_back(parse_entries(mode["A"], n, n, at.str() + ".A"));
    if (mode.contains("B")) {
      any_b = true;
      b_modes.push_back(parse_entries(mode["B"], n, n, at.str() + ".B"));
    } else {
      b_modes.emplace_back(n, n);
    }
  }

  try {
    if (any_b) return SwitchedSystem(n, std::move(a_modes), std::move(b_modes));
    return SwitchedSystem(n, std::move(a_modes));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("modes: ") + e.what());
  }
}

nlohmann::json entries_to_json(const Pattern& p) {
  json arr = json::array();
  for (const auto& [r, c] : p.nonzeros()) arr.push_back(json::array({r, c}));
  return arr;
}

nlohmann::json system_to_json(const SwitchedSystem& sys) {
  json doc;
  doc["n"] = sys.n();
  json modes = json::array();
  for (int k = 1; k <= sys.mode_count(); ++k) {
    json mode;
    mode["A"] = entries_to_json(sys.a_mode(k));
    if (sys.has_inputs()) mode["B"] = entries_to_json(sys.b_mode_or_zero(k));
    modes.push_back(std::move(mode));
  }
  doc["modes"] = std::move(modes);
  return doc;
}

std::string serialize_system(const SwitchedSystem& sys) {
  return system_to_json(sys).dump(2) + "\n";
}

}  // namespace swctrl
