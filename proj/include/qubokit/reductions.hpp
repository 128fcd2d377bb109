#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qubokit/bigint.hpp"
#include "qubokit/instance.hpp"
#include "qubokit/solvers.hpp"

namespace qubokit {

// Maximise c.x subject to A x <= b over binary x (all data integer).
struct IlpInstance {
  int m = 0;  // constraint rows
  int n = 0;  // variables
  std::vector<std::vector<Int>> a;  // m rows of n coefficients
  std::vector<Int> b;               // m right-hand sides
  std::vector<Int> c;               // n objective coefficients

  void validate() const;  // dimension consistency; throws DimensionError

  bool operator==(const IlpInstance& o) const {
    return m == o.m && n == o.n && a == o.a && b == o.b && c == o.c;
  }
};

// Penalty-form embedding of an ILP into a QUBO.  Variables 1..ilp_vars carry
// the ILP solution; slack_layout[i] lists the binary slack variables of row
// i+1 with weights 1, 2, 4, ...  The squared-penalty constant h * sum b_i^2
// is folded out of the stored matrix and kept here.
struct IlpQuboMapping {
  QuboInstance qubo;
  int ilp_vars = 0;
  std::vector<std::vector<int>> slack_layout;
  Int h;                 // penalty weight n * max(0, max c_i) + 1
  int k = 0;             // slack bits per row
  Int folded_constant;   // add to the stored minimum to get the true objective
  bool negate_output = true;
};

// Requires every b_i >= 0 (throws UnsupportedError otherwise).
IlpQuboMapping reduce_ilp_to_qubo(const IlpInstance& ilp);

// ILP optimum recovered from a solve of mapping.qubo.
Int interpret_ilp_result(const IlpQuboMapping& mapping, const SolveReport& report);

// Simple undirected graph, 1-based vertices, normalised edge set (u < v).
struct Graph {
  int n_vertices = 0;
  std::set<std::pair<int, int>> edges;

  bool has_edge(int u, int v) const;
  void validate() const;  // range, no self-loops; throws ParameterError

  bool operator==(const Graph& o) const {
    return n_vertices == o.n_vertices && edges == o.edges;
  }
};

// Max-clique embedding: -1 on the diagonal, +1 on every complement pair.
// The negated minimum is the maximum clique size.
QuboInstance reduce_clique_to_squbo(const Graph& graph);

// Turn any minimising assignment of a clique embedding into an actual clique
// of the same objective value: one left-to-right pass that zeroes a vertex
// whenever its penalty row is already active.  Throws InconsistencyError when
// the value-preservation or clique postcondition fails (non-optimal input).
Assignment repair_to_clique(const QuboInstance& squbo, const Assignment& optimal);

// 0/1 knapsack: items with positive integer sizes, capacity bound "< capacity"
// is encoded exactly for integers as "<= capacity - 1".
struct KnapsackInstance {
  std::vector<Int> items;
  Int capacity;

  void validate() const;  // positive items, capacity >= 1; ParameterError

  bool operator==(const KnapsackInstance& o) const {
    return items == o.items && capacity == o.capacity;
  }
};

IlpInstance reduce_knapsack_to_ilp(const KnapsackInstance& kp);

// QUBO with rational coefficients num/den (den >= 1, not necessarily reduced).
struct RationalQubo {
  int n = 0;
  std::map<std::pair<int, int>, std::pair<Int, Int>> entries;

  void validate() const;  // triangle/range/denominator checks

  bool operator==(const RationalQubo& o) const {
    return n == o.n && entries == o.entries;
  }
};

// Clear denominators with their least common multiple.  Returns the integer
// instance and the scale; minima correspond exactly (integer min = scale *
// rational min) and the minimiser sets coincide.
std::pair<QuboInstance, Int> normalize_rational(const RationalQubo& rq);

}  // namespace qubokit
