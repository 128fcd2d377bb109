#include "qubokit/reductions.hpp"

#include <algorithm>

#include "qubokit/errors.hpp"

namespace qubokit {

void IlpInstance::validate() const {
  if (m < 1 || n < 1) throw DimensionError("ILP needs m >= 1 and n >= 1");
  if (static_cast<int>(a.size()) != m) {
    throw DimensionError("A has " + std::to_string(a.size()) + " rows, expected " +
                         std::to_string(m));
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionError("A row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(n));
    }
  }
  if (static_cast<int>(b.size()) != m) {
    throw DimensionError("b has " + std::to_string(b.size()) + " entries, expected " +
                         std::to_string(m));
  }
  if (static_cast<int>(c.size()) != n) {
    throw DimensionError("c has " + std::to_string(c.size()) + " entries, expected " +
                         std::to_string(n));
  }
}

IlpQuboMapping reduce_ilp_to_qubo(const IlpInstance& ilp) {
  ilp.validate();
  for (const Int& bi : ilp.b) {
    if (bi < 0) {
      throw UnsupportedError("negative right-hand side " + to_decimal(bi) +
                             "; rows need b_i >= 0");
    }
  }

  Int cmax = ilp.c[0];
  for (const Int& ci : ilp.c) cmax = std::max(cmax, ci);
  const Int h = Int(ilp.n) * std::max(Int(0), cmax) + 1;

  Int amin = ilp.a[0][0];
  Int bmax = ilp.b[0];
  for (const auto& row : ilp.a) {
    for (const Int& aij : row) amin = std::min(amin, aij);
  }
  for (const Int& bi : ilp.b) bmax = std::max(bmax, bi);

  // Slack bits must cover b_i - min_x (A x)_i for every row; the shared width
  // uses the coarse bound b_max - n * min(0, a_min).
  Int slack_range = bmax - Int(ilp.n) * std::min(Int(0), amin);
  if (slack_range < 1) slack_range = 1;
  const int k = bit_length(slack_range);

  const int total_vars = ilp.n + ilp.m * k;
  QuboBuilder builder(total_vars);

  for (int j = 1; j <= ilp.n; ++j) {
    const Int& cj = ilp.c[static_cast<std::size_t>(j - 1)];
    if (cj != 0) builder.add(j, j, -cj);
  }

  IlpQuboMapping mapping{QuboInstance(1, {}), ilp.n, {}, h, k, Int(0), true};
  mapping.slack_layout.resize(static_cast<std::size_t>(ilp.m));

  for (int i = 1; i <= ilp.m; ++i) {
    // Linear form of row i: sum_j a_ij x_j + sum_l 2^(l-1) y_il - b_i,
    // squared and weighted by h.  x^2 = x folds squares onto the diagonal.
    std::vector<std::pair<int, Int>> terms;
    for (int j = 1; j <= ilp.n; ++j) {
      const Int& aij = ilp.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (aij != 0) terms.emplace_back(j, aij);
    }
    auto& slots = mapping.slack_layout[static_cast<std::size_t>(i - 1)];
    for (int l = 1; l <= k; ++l) {
      const int var = ilp.n + (i - 1) * k + l;
      slots.push_back(var);
      terms.emplace_back(var, Int(1) << (l - 1));
    }

    const Int& bi = ilp.b[static_cast<std::size_t>(i - 1)];
    for (std::size_t s = 0; s < terms.size(); ++s) {
      const auto& [vs, ws] = terms[s];
      builder.add(vs, vs, h * (ws * ws - 2 * bi * ws));
      for (std::size_t t = s + 1; t < terms.size(); ++t) {
        const auto& [vt, wt] = terms[t];
        builder.add(vs, vt, h * 2 * ws * wt);
      }
    }
    mapping.folded_constant += h * bi * bi;
  }

  mapping.qubo = builder.build();
  return mapping;
}

Int interpret_ilp_result(const IlpQuboMapping& mapping, const SolveReport& report) {
  return -(report.min_value + mapping.folded_constant);
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) != 0;
}

void Graph::validate() const {
  if (n_vertices < 1) throw ParameterError("graph needs at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n_vertices || v > n_vertices) {
      throw ParameterError("edge endpoint outside [1, " +
                           std::to_string(n_vertices) + "]");
    }
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (u > v) throw ParameterError("edge keys must be normalised (u < v)");
  }
}

QuboInstance reduce_clique_to_squbo(const Graph& graph) {
  graph.validate();
  QuboBuilder builder(graph.n_vertices);
  for (int v = 1; v <= graph.n_vertices; ++v) builder.add(v, v, Int(-1));
  for (int i = 1; i <= graph.n_vertices; ++i) {
    for (int j = i + 1; j <= graph.n_vertices; ++j) {
      if (!graph.has_edge(i, j)) builder.add(i, j, Int(1));
    }
  }
  return builder.build();
}

namespace {

// Shape check: -1 on the whole diagonal, {0, 1} everywhere else.
void check_clique_shape(const QuboInstance& squbo) {
  for (int v = 1; v <= squbo.n(); ++v) {
    if (squbo.coefficient(v, v) != -1) {
      throw ParameterError("matrix is not a clique embedding (diagonal != -1)");
    }
  }
  for (const auto& [key, v] : squbo.entries()) {
    if (key.first != key.second && v != 1) {
      throw ParameterError("matrix is not a clique embedding (off-diagonal != 1)");
    }
  }
}

}  // namespace

Assignment repair_to_clique(const QuboInstance& squbo, const Assignment& optimal) {
  check_clique_shape(squbo);
  const int n = squbo.n();
  if (optimal.size() != n) {
    throw DimensionError("assignment length " + std::to_string(optimal.size()) +
                         " does not match n = " + std::to_string(n));
  }

  // Zero out any vertex whose penalty row is active against the kept prefix
  // or the original suffix; value is preserved when the input is optimal.
  std::vector<std::uint8_t> z(static_cast<std::size_t>(n), 0);
  for (int a = 1; a <= n; ++a) {
    Int s = 0;
    for (int i = 1; i < a; ++i) {
      if (z[static_cast<std::size_t>(i - 1)]) s += squbo.coefficient(i, a);
    }
    for (int j = a + 1; j <= n; ++j) {
      if (optimal.bit(j)) s += squbo.coefficient(a, j);
    }
    z[static_cast<std::size_t>(a - 1)] =
        (s >= 1) ? 0 : static_cast<std::uint8_t>(optimal.bit(a));
  }

  Assignment repaired(std::move(z));
  if (squbo.evaluate(repaired) != squbo.evaluate(optimal)) {
    throw InconsistencyError("repair changed the objective value; input was not optimal");
  }
  for (const auto& [key, v] : squbo.entries()) {
    if (key.first != key.second && repaired.bit(key.first) && repaired.bit(key.second)) {
      throw InconsistencyError("repaired assignment still hits a penalty entry");
    }
  }
  return repaired;
}

void KnapsackInstance::validate() const {
  if (items.empty()) throw ParameterError("knapsack needs at least one item");
  for (const Int& it : items) {
    if (it < 1) throw ParameterError("item sizes must be positive");
  }
  if (capacity < 1) throw ParameterError("capacity must be >= 1");
}

IlpInstance reduce_knapsack_to_ilp(const KnapsackInstance& kp) {
  kp.validate();
  IlpInstance ilp;
  ilp.m = 1;
  ilp.n = static_cast<int>(kp.items.size());
  ilp.a = {kp.items};
  // Integer sizes make the strict bound "< capacity" exactly "<= capacity - 1".
  ilp.b = {kp.capacity - 1};
  ilp.c = kp.items;
  return ilp;
}

void RationalQubo::validate() const {
  if (n < 1) throw ParameterError("instance needs n >= 1");
  for (const auto& [key, value] : entries) {
    const auto& [i, j] = key;
    if (i < 1 || j < 1 || i > n || j > n || i > j) {
      throw ParameterError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") is not an upper-triangle key in [1, " +
                           std::to_string(n) + "]");
    }
    if (value.second < 1) {
      throw MalformedError("denominator of entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") must be positive");
    }
  }
}

std::pair<QuboInstance, Int> normalize_rational(const RationalQubo& rq) {
  rq.validate();
  Int scale = 1;
  for (const auto& [key, value] : rq.entries) {
    scale = boost::multiprecision::lcm(scale, value.second);
  }
  QuboBuilder builder(rq.n);
  for (const auto& [key, value] : rq.entries) {
    const auto& [num, den] = value;
    if (num != 0) builder.add(key.first, key.second, num * (scale / den));
  }
  return {builder.build(), scale};
}

}  // namespace qubokit
