#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conirr/rational.hpp"
#include "conirr/sign_pattern.hpp"

namespace conirr {

using Arc = std::pair<Index, Index>;

/// Directed graph on vertices u_1..u_n; arc (i, j) is u_i -> u_j.
struct Digraph {
  Index vertices = 0;
  std::set<Arc> arcs;
};

/// Bipartite digraph on row vertices u_1..u_n and column vertices v_1..v_m.
struct BipartiteDigraph {
  Index row_vertices = 0;
  Index col_vertices = 0;
  std::set<Arc> row_to_col;  ///< (i, j): u_i -> v_j
  std::set<Arc> col_to_row;  ///< (j, i): v_j -> u_i

  std::size_t arc_count() const { return row_to_col.size() + col_to_row.size(); }
  /// Plain digraph with u_i numbered i and v_j numbered n + j.
  Digraph flatten() const;
};

/// Arc u_i -> u_j iff M_ij != 0.
Digraph build_GM(const RationalMatrix& m);

/// Arc u_i -> v_j iff A_ij != 0, arc v_j -> u_i iff B_ji != 0.
BipartiteDigraph build_GAB(const RationalMatrix& a, const RationalMatrix& b);
BipartiteDigraph build_GAB(const RationalMatrix& a, const SignPattern& b);

/// Components of the graph (iterative Tarjan), each listed in discovery order.
std::vector<std::vector<Index>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);
bool is_strongly_connected(const BipartiteDigraph& g);

/// DOT text with vertices u1.. (and v1..) declared first, then arcs in
/// row-major order. Byte-stable for identical graphs.
std::string to_dot(const Digraph& g);
std::string to_dot(const BipartiteDigraph& g);

}  // namespace conirr
