#include "swctrl/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "swctrl/digraph.hpp"
#include "swctrl/errors.hpp"
#include "swctrl/mode_selection.hpp"
#include "swctrl/placement.hpp"
#include "swctrl/system_io.hpp"
#include "swctrl/verification.hpp"

namespace swctrl {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// "k=v,k=v" with positive integers on both sides.
std::map<int, int> parse_pair_list(const std::string& text, const std::string& flag) {
  std::map<int, int> pairs;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    int key = 0, value = 0;
    try {
      if (eq == std::string::npos) throw std::invalid_argument("no '='");
      key = std::stoi(item.substr(0, eq));
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw parse_error(flag + ": malformed pair '" + item + "'");
    }
    if (pairs.count(key)) {
      throw parse_error(flag + ": duplicate assignment for " + std::to_string(key));
    }
    pairs[key] = value;
  }
  if (pairs.empty()) throw parse_error(flag + ": empty assignment list");
  return pairs;
}

json indices_json(const std::vector<int>& v) {
  json arr = json::array();
  for (int i : v) arr.push_back(i);
  return arr;
}

json solution_json(const PlacementSolution& sol, const ModeInputAssignment& modes) {
  json doc;
  doc["j_prime"] = indices_json(sol.j_prime);
  doc["j_dprime"] = indices_json(sol.j_dprime);
  doc["j_tprime"] = indices_json(sol.j_tprime);
  doc["cardinality"] = sol.cardinality;
  json mode_arr = json::array();
  for (const Pattern& b : modes.b_modes) {
    json mode;
    mode["B"] = entries_to_json(b);
    mode_arr.push_back(std::move(mode));
  }
  doc["modes"] = std::move(mode_arr);
  return doc;
}

json report_json(const VerificationReport& report) {
  json cond_i;
  cond_i["pass"] = report.condition_i;
  json uncovered = json::array();
  for (const auto& states : report.uncovered_sccs) uncovered.push_back(indices_json(states));
  cond_i["uncovered_sccs"] = std::move(uncovered);
  json cond_ii;
  cond_ii["pass"] = report.condition_ii;
  cond_ii["matching_size"] = report.matching_size;
  cond_ii["target"] = report.target;
  json doc;
  doc["condition_i"] = std::move(cond_i);
  doc["condition_ii"] = std::move(cond_ii);
  doc["overall"] = report.overall;
  return doc;
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw parse_error("cannot open output file: " + out_path);
  file << text;
}

ModeInputAssignment single_mode_assignment(Pattern b1, int mode_count) {
  ModeInputAssignment assignment;
  assignment.total_nonzeros = b1.nnz();
  const int n = b1.rows();
  assignment.b_modes.push_back(std::move(b1));
  for (int k = 2; k <= mode_count; ++k) assignment.b_modes.emplace_back(n, n);
  return assignment;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Actuator placement for structural controllability of "
               "switched linear continuous-time systems"};
  app.require_subcommand(1);

  std::string input_path;
  std::string out_path;
  std::string solution_kind = "dedicated";
  std::string choose_text;
  std::string assign_text;
  std::string method = "exact";
  std::string which = "union";
  int trials = 20;
  std::uint64_t seed = 42;
  double tol = 1e-8;

  auto* place = app.add_subcommand("place", "Compute a sparsest input placement");
  place->add_option("input", input_path, "system JSON file")->required();
  place->add_option("--solution", solution_kind, "solution family")
      ->check(CLI::IsMember({"dedicated", "minimal", "non-dedicated"}));
  place->add_option("--choose", choose_text,
                    "column per accessibility state, \"state=col,...\" "
                    "(non-dedicated only)");
  place->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* distribute_cmd =
      app.add_subcommand("distribute", "Spread the dedicated columns over modes");
  distribute_cmd->add_option("input", input_path, "system JSON file")->required();
  distribute_cmd->add_option("--assign", assign_text, "\"col=mode,...\"")->required();
  distribute_cmd->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Structural controllability check");
  verify->add_option("input", input_path, "system JSON file with inputs")->required();

  auto* check_numeric =
      app.add_subcommand("check-numeric", "Randomized numeric controllability oracle");
  check_numeric->add_option("input", input_path, "system JSON file with inputs")
      ->required();
  check_numeric->add_option("--trials", trials, "number of realizations")
      ->check(CLI::PositiveNumber);
  check_numeric->add_option("--seed", seed, "base seed; trial t uses seed+t");
  check_numeric->add_option("--tol", tol, "relative singular value threshold")
      ->check(CLI::PositiveNumber);

  auto* min_modes = app.add_subcommand("min-modes", "Fewest modes preserving "
                                                    "structural controllability");
  min_modes->add_option("input", input_path, "system JSON file with inputs")
      ->required();
  min_modes->add_option("--method", method, "solver")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* oracle_min =
      app.add_subcommand("oracle-min", "Exhaustive dedicated-placement minimum");
  oracle_min->add_option("input", input_path, "system JSON file")->required();

  auto* export_dot_cmd = app.add_subcommand("export-dot", "State digraph as DOT");
  export_dot_cmd->add_option("input", input_path, "system JSON file")->required();
  export_dot_cmd->add_option("--which", which, "union (default) or mode=K");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("swctrl");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const SwitchedSystem sys = parse_system(read_file(input_path));
    const int n = sys.n();
    const int m = sys.mode_count();

    if (place->parsed()) {
      const PlacementSolution sol = dedicated_placement(sys);
      ModeInputAssignment assignment;
      if (solution_kind == "dedicated") {
        assignment = dedicated_b(sol, n, m);
      } else if (solution_kind == "minimal") {
        assignment = single_mode_assignment(minimal_b(sol, n), m);
      } else {
        Pattern b1(n, n);
        if (!choose_text.empty()) {
          b1 = non_dedicated_b(sol, n, parse_pair_list(choose_text, "--choose"));
        } else {
          b1 = minimal_b(sol, n);
        }
        assignment = single_mode_assignment(std::move(b1), m);
      }
      emit(solution_json(sol, assignment), out_path, out);
      return 0;
    }

    if (distribute_cmd->parsed()) {
      const PlacementSolution sol = dedicated_placement(sys);
      const Pattern base = Pattern::diagonal(n, sol.actuated());
      const ModeInputAssignment assignment =
          distribute(base, m, parse_pair_list(assign_text, "--assign"));
      emit(solution_json(sol, assignment), out_path, out);
      return 0;
    }

    if (verify->parsed()) {
      const VerificationReport report = check_structural_controllability(sys);
      emit(report_json(report), "", out);
      return report.overall ? 0 : 1;
    }

    if (check_numeric->parsed()) {
      int passes = 0;
      for (int t = 0; t < trials; ++t) {
        if (numeric_controllable(realize(sys, seed + static_cast<std::uint64_t>(t)),
                                 tol)) {
          ++passes;
        }
      }
      const double ratio = static_cast<double>(passes) / trials;
      json doc;
      doc["trials"] = trials;
      doc["passes"] = passes;
      doc["ratio"] = ratio;
      doc["seed"] = seed;
      doc["tol"] = tol;
      emit(doc, "", out);
      return ratio >= 0.98 ? 0 : 1;
    }

    if (min_modes->parsed()) {
      const ModeSubsetResult result = method == "exact" ? min_modes_exact(sys)
                                                        : min_modes_greedy(sys);
      json doc;
      doc["modes"] = indices_json(result.modes);
      doc["size"] = result.size;
      doc["method"] = to_string(result.method);
      doc["feasible"] = result.feasible;
      emit(doc, "", out);
      return 0;
    }

    if (oracle_min->parsed()) {
      const MinDedicatedResult result = brute_force_min_dedicated(sys);
      json doc;
      doc["cardinality"] = result.cardinality;
      doc["witness"] = indices_json(result.witness);
      emit(doc, "", out);
      return 0;
    }

    if (export_dot_cmd->parsed()) {
      Pattern a(n, n);
      Pattern b(n, n);
      if (which == "union") {
        a = sys.a_union();
        b = sys.b_union();
      } else if (which.rfind("mode=", 0) == 0) {
        int k = 0;
        try {
          k = std::stoi(which.substr(5));
        } catch (const std::exception&) {
          throw parse_error("--which: malformed mode selector '" + which + "'");
        }
        if (k < 1 || k > m) {
          throw parse_error("--which: mode " + std::to_string(k) + " out of range");
        }
        a = sys.a_mode(k);
        b = sys.b_mode_or_zero(k).widened(n);
      } else {
        throw parse_error("--which: expected 'union' or 'mode=K', got '" + which + "'");
      }
      const Digraph g = build_state_digraph(a);
      const SccDecomposition decomp = scc_decompose(g);
      if (sys.has_inputs()) {
        out << export_dot(g, decomp, b);
      } else {
        out << export_dot(g, decomp);
      }
      return 0;
    }
  } catch (const infeasible_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace swctrl
