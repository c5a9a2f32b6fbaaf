#include "swctrl/digraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "swctrl/errors.hpp"

namespace swctrl {

namespace {

std::vector<std::vector<int>> adjacency(const Digraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count + 1);
  for (const auto& [from, to] : g.edges) adj[from].push_back(to);
  return adj;
}

}  // namespace

Digraph build_state_digraph(const Pattern& pattern) {
  if (!pattern.is_square()) {
    throw dimension_error("state digraph requires a square pattern");
  }
  Digraph g;
  g.vertex_count = pattern.rows();
  g.edges.reserve(pattern.nonzeros().size());
  for (const auto& [row, col] : pattern.nonzeros()) g.edges.emplace_back(col, row);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SccDecomposition scc_decompose(const Digraph& g) {
  const int n = g.vertex_count;
  const auto adj = adjacency(g);

  // Iterative Tarjan; recursion would overflow on long chains.
  std::vector<int> index(n + 1, 0), lowlink(n + 1, 0);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> raw_components;
  int next_index = 1;

  struct Frame {
    int vertex;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (int start = 1; start <= n; ++start) {
    if (index[start] != 0) continue;
    call.push_back({start, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (child < adj[v].size()) {
        const int w = adj[v][child++];
        if (index[w] == 0) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::vector<int> component;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
          } while (w != v);
          std::sort(component.begin(), component.end());
          raw_components.push_back(std::move(component));
        }
        const int finished = v;
        call.pop_back();
        if (!call.empty()) {
          auto& parent = call.back();
          lowlink[parent.vertex] =
              std::min(lowlink[parent.vertex], lowlink[finished]);
        }
      }
    }
  }

  // Component ids ascend with the smallest member vertex.
  std::sort(raw_components.begin(), raw_components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccDecomposition d;
  d.components = std::move(raw_components);
  d.component_of.assign(n, 0);
  for (std::size_t id = 0; id < d.components.size(); ++id) {
    for (int v : d.components[id]) d.component_of[v - 1] = static_cast<int>(id) + 1;
  }
  for (const auto& [from, to] : g.edges) {
    const int cf = d.component_of[from - 1];
    const int ct = d.component_of[to - 1];
    if (cf != ct) d.dag_edges.emplace_back(cf, ct);
  }
  std::sort(d.dag_edges.begin(), d.dag_edges.end());
  d.dag_edges.erase(std::unique(d.dag_edges.begin(), d.dag_edges.end()),
                    d.dag_edges.end());

  std::vector<bool> has_incoming(d.component_count() + 1, false);
  for (const auto& [from, to] : d.dag_edges) has_incoming[to] = true;
  for (int id = 1; id <= d.component_count(); ++id) {
    if (!has_incoming[id]) d.non_top_linked.push_back(id);
  }
  return d;
}

std::vector<int> accessible_set(const Digraph& g, const Pattern& b_union) {
  if (b_union.rows() != g.vertex_count) {
    throw dimension_error("input pattern row count must match the vertex count");
  }
  const auto adj = adjacency(g);
  std::vector<bool> reached(g.vertex_count + 1, false);
  std::queue<int> frontier;
  for (int v : b_union.row_support()) {
    if (!reached[v]) {
      reached[v] = true;
      frontier.push(v);
    }
  }
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adj[v]) {
      if (!reached[w]) {
        reached[w] = true;
        frontier.push(w);
      }
    }
  }
  std::vector<int> result;
  for (int v = 1; v <= g.vertex_count; ++v) {
    if (reached[v]) result.push_back(v);
  }
  return result;
}

ConditionIResult condition_i_holds(const SccDecomposition& decomp,
                                   const Pattern& b_union) {
  if (b_union.rows() != decomp.vertex_count()) {
    throw dimension_error("input pattern row count must match the vertex count");
  }
  std::vector<bool> actuated(decomp.vertex_count() + 1, false);
  for (int v : b_union.row_support()) actuated[v] = true;

  ConditionIResult result;
  for (int id : decomp.non_top_linked) {
    const auto& members = decomp.components[id - 1];
    const bool covered =
        std::any_of(members.begin(), members.end(), [&](int v) { return actuated[v]; });
    if (!covered) result.uncovered.push_back(id);
  }
  result.pass = result.uncovered.empty();
  return result;
}

std::string export_dot(const Digraph& g, const SccDecomposition& decomp,
                       const std::optional<Pattern>& b_union) {
  if (decomp.vertex_count() != g.vertex_count) {
    throw dimension_error("decomposition does not match the digraph");
  }
  std::ostringstream os;
  os << "digraph states {\n";
  os << "  rankdir=LR;\n";

  // Ordinal of each non-top-linked component (1..beta) for the N{j}^T label.
  std::vector<int> ntl_ordinal(decomp.component_count() + 1, 0);
  for (std::size_t j = 0; j < decomp.non_top_linked.size(); ++j) {
    ntl_ordinal[decomp.non_top_linked[j]] = static_cast<int>(j) + 1;
  }

  for (int id = 1; id <= decomp.component_count(); ++id) {
    os << "  subgraph cluster_" << id << " {\n";
    os << "    style=dashed;\n";
    if (ntl_ordinal[id] > 0) {
      os << "    label=\"N" << ntl_ordinal[id] << "^T\";\n";
    }
    for (int v : decomp.components[id - 1]) os << "    x" << v << ";\n";
    os << "  }\n";
  }

  if (b_union) {
    if (b_union->rows() != g.vertex_count) {
      throw dimension_error("input pattern row count must match the vertex count");
    }
    for (int col : b_union->col_support()) {
      os << "  u" << col << " [shape=box];\n";
    }
  }
  for (const auto& [from, to] : g.edges) {
    os << "  x" << from << " -> x" << to << ";\n";
  }
  if (b_union) {
    std::vector<std::pair<int, int>> input_edges;  // (input col, state row)
    for (const auto& [row, col] : b_union->nonzeros()) input_edges.emplace_back(col, row);
    std::sort(input_edges.begin(), input_edges.end());
    for (const auto& [col, row] : input_edges) {
      os << "  u" << col << " -> x" << row << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace swctrl
