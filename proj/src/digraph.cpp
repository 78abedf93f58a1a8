#include "conirr/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "conirr/errors.hpp"

namespace conirr {

namespace {

BipartiteDigraph build_from_signs(const RationalMatrix& a, const Eigen::MatrixXi& b) {
  if (b.rows() != a.cols() || b.cols() != a.rows())
    throw DimensionMismatch("build_GAB: A is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " so B must be " +
                            std::to_string(a.cols()) + "x" + std::to_string(a.rows()));
  BipartiteDigraph g;
  g.row_vertices = a.rows();
  g.col_vertices = a.cols();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) g.row_to_col.emplace(i, j);
  for (Index j = 0; j < b.rows(); ++j)
    for (Index i = 0; i < b.cols(); ++i)
      if (b(j, i) != 0) g.col_to_row.emplace(j, i);
  return g;
}

}  // namespace

Digraph BipartiteDigraph::flatten() const {
  Digraph g;
  g.vertices = row_vertices + col_vertices;
  for (const auto& [i, j] : row_to_col) g.arcs.emplace(i, row_vertices + j);
  for (const auto& [j, i] : col_to_row) g.arcs.emplace(row_vertices + j, i);
  return g;
}

Digraph build_GM(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("build_GM: matrix must be square");
  Digraph g;
  g.vertices = m.rows();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) g.arcs.emplace(i, j);
  return g;
}

BipartiteDigraph build_GAB(const RationalMatrix& a, const RationalMatrix& b) {
  return build_from_signs(a, sign_matrix(b));
}

BipartiteDigraph build_GAB(const RationalMatrix& a, const SignPattern& b) {
  return build_from_signs(a, b.signs());
}

std::vector<std::vector<Index>> strongly_connected_components(const Digraph& g) {
  const Index n = g.vertices;
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
  for (const auto& [from, to] : g.arcs) adj[static_cast<std::size_t>(from)].push_back(to);

  constexpr Index kUnvisited = -1;
  std::vector<Index> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<Index> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> components;
  Index counter = 0;

  // Explicit call stack of (vertex, next neighbour position).
  std::vector<std::pair<Index, std::size_t>> calls;
  for (Index root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != kUnvisited) continue;
    calls.emplace_back(root, 0);
    while (!calls.empty()) {
      auto& [v, next] = calls.back();
      const auto vs = static_cast<std::size_t>(v);
      if (next == 0 && index[vs] == kUnvisited) {
        index[vs] = low[vs] = counter++;
        stack.push_back(v);
        on_stack[vs] = true;
      }
      if (next < adj[vs].size()) {
        const Index w = adj[vs][next++];
        const auto ws = static_cast<std::size_t>(w);
        if (index[ws] == kUnvisited) {
          calls.emplace_back(w, 0);
        } else if (on_stack[ws]) {
          low[vs] = std::min(low[vs], index[ws]);
        }
        continue;
      }
      if (low[vs] == index[vs]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (w != v);
        std::reverse(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const Index done = v;
      calls.pop_back();
      if (!calls.empty()) {
        const auto parent = static_cast<std::size_t>(calls.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return components;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.vertices < 1) throw std::invalid_argument("is_strongly_connected: graph has no vertices");
  return strongly_connected_components(g).size() == 1;
}

bool is_strongly_connected(const BipartiteDigraph& g) { return is_strongly_connected(g.flatten()); }

std::string to_dot(const Digraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (Index i = 0; i < g.vertices; ++i) os << "  u" << i + 1 << ";\n";
  for (const auto& [i, j] : g.arcs) os << "  u" << i + 1 << " -> u" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const BipartiteDigraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (Index i = 0; i < g.row_vertices; ++i) os << "  u" << i + 1 << ";\n";
  for (Index j = 0; j < g.col_vertices; ++j) os << "  v" << j + 1 << ";\n";
  for (const auto& [i, j] : g.row_to_col) os << "  u" << i + 1 << " -> v" << j + 1 << ";\n";
  for (const auto& [j, i] : g.col_to_row) os << "  v" << j + 1 << " -> u" << i + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace conirr
