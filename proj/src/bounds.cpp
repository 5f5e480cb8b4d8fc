#include "edgedepth/bounds.hpp"

#include <algorithm>

namespace edgedepth {

int ceil_div3(int v) {
  if (v >= 0) return (v + 2) / 3;
  return -((-v) / 3);
}

PowerBound bound_power(int d, int p, int t) {
  if (d < 0 || p < 1 || t < 1) {
    throw Error(ErrorKind::Precondition, "bound_power requires d >= 0, p >= 1, t >= 1");
  }
  return PowerBound{ceil_div3(d - 4 * t + 5) + p - 1, t >= 4};
}

int bound_components_sum(const std::vector<int>& component_diameters) {
  int total = 0;
  for (int di : component_diameters) {
    if (di < 1) {
      throw Error(ErrorKind::Precondition, "component diameters must be >= 1");
    }
    total += ceil_div3(di + 1);
  }
  return total;
}

int bound_p_minus_t(int p, int t) {
  if (p < 1 || t < 1) throw Error(ErrorKind::Precondition, "requires p >= 1, t >= 1");
  return p - t;
}

int bound_positivity(int p, int t, bool bipartite) {
  if (p < 1 || t < 1) throw Error(ErrorKind::Precondition, "requires p >= 1, t >= 1");
  return (t <= p || bipartite) ? 1 : 0;
}

int bound_loops(int ell) { return ceil_div3(ell - 1); }

int bound_colon(ColonKind kind, int ell) {
  if (ell < 0) throw Error(ErrorKind::Precondition, "bound_colon requires ell >= 0");
  switch (kind) {
    case ColonKind::Colon1Vertex:
      return ceil_div3(ell + 2);
    case ColonKind::Colon2Vertex:
      return ceil_div3(ell - 2);
    case ColonKind::Colon2Disconnected:
      return ceil_div3(ell);
    case ColonKind::Colon3EdgeProduct2t:
      return ceil_div3(ell - 2);
    case ColonKind::Colon3Triple:
      return ceil_div3(ell - 5);
    case ColonKind::Colon3Edge:
      return ceil_div3(ell - 6);
    case ColonKind::Colon3Vertex:
      return ceil_div3(ell - 6);
    case ColonKind::Triangle:
      return ceil_div3(ell - 3);
    case ColonKind::PairPath:
      return ceil_div3(ell - 3);
  }
  throw Error(ErrorKind::UnknownKind, "unknown colon bound kind");
}

const char* to_string(ColonKind kind) {
  switch (kind) {
    case ColonKind::Colon1Vertex:
      return "colon1-vertex";
    case ColonKind::Colon2Vertex:
      return "colon2-vertex";
    case ColonKind::Colon2Disconnected:
      return "colon2-disconnected";
    case ColonKind::Colon3EdgeProduct2t:
      return "colon3-edge-product-2t";
    case ColonKind::Colon3Triple:
      return "colon3-triple";
    case ColonKind::Colon3Edge:
      return "colon3-edge";
    case ColonKind::Colon3Vertex:
      return "colon3-vertex";
    case ColonKind::Triangle:
      return "triangle";
    case ColonKind::PairPath:
      return "pair-path";
  }
  return "?";
}

MonomialIdeal construct_e(const Graph& g, const Monomial& factors, int t) {
  if (t < 1) throw Error(ErrorKind::Precondition, "construct_e requires t >= 1");
  const int n = g.vertex_count();
  if (factors.vars() != n) {
    throw Error(ErrorKind::DimensionMismatch, "factor monomial lives in a different ring");
  }
  if (factors.degree() != 2 * t) {
    throw Error(ErrorKind::Precondition, "factor monomial must be a product of 2t vertices");
  }
  MonomialIdeal ideal = edge_ideal(g);
  if (!ideal.power(t).contains(factors)) {
    throw Error(ErrorKind::Precondition, "factor monomial does not lie in I^t");
  }
  MonomialIdeal next_power = ideal.power(t + 1);

  // Union of the neighborhoods of the factor vertices; a loop puts the
  // vertex in its own neighborhood.
  std::vector<char> in_union(static_cast<std::size_t>(n), 0);
  for (int v : factors.support()) {
    for (int w : g.neighbors(v)) in_union[static_cast<std::size_t>(w)] = 1;
    if (g.has_loop(v)) in_union[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    if (in_union[static_cast<std::size_t>(v)]) candidates.push_back(v);
  }

  std::vector<Monomial> e_gens;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a; b < candidates.size(); ++b) {
      Monomial pair = Monomial::variable(n, candidates[a])
                          .times(Monomial::variable(n, candidates[b]));
      if (next_power.contains(pair.times(factors))) e_gens.push_back(std::move(pair));
    }
  }
  return ideal.sum(MonomialIdeal::make(n, std::move(e_gens)));
}

bool leaf_colon_check(const Graph& g, int leaf, int neighbor, int t) {
  if (t < 2) throw Error(ErrorKind::Precondition, "leaf colon identity needs t >= 2");
  std::vector<int> nb = g.neighbors(leaf);
  if (nb.size() != 1 || g.has_loop(leaf)) {
    throw Error(ErrorKind::Precondition, "vertex is not a leaf");
  }
  if (nb[0] != neighbor) {
    throw Error(ErrorKind::Precondition, "named neighbor is not the leaf's neighbor");
  }
  MonomialIdeal ideal = edge_ideal(g);
  const int n = g.vertex_count();
  Monomial xy = Monomial::variable(n, leaf).times(Monomial::variable(n, neighbor));
  return ideal.power(t).colon(xy) == ideal.power(t - 1);
}

ReductionTrace exhaust_trace(const Graph& g, const Monomial& m, int t,
                             const std::vector<int>& ys, const DepthOptions& options) {
  const int n = g.vertex_count();
  if (m.vars() != n) {
    throw Error(ErrorKind::DimensionMismatch, "colon monomial lives in a different ring");
  }
  for (int y : ys) {
    if (m.exp(y) != 0) {
      throw Error(ErrorKind::Precondition, "a deleted vertex divides the colon monomial");
    }
  }
  {
    std::vector<int> sorted = ys;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::Precondition, "duplicate vertex in the deletion order");
    }
  }

  ReductionTrace trace;
  trace.base = m;
  trace.rewriting_verified = true;

  Graph current = g;
  MonomialIdeal ideal = edge_ideal(current);
  int deleted = 0;
  int floor_bound = 0;
  bool have_floor = false;

  for (std::size_t i = 0; i < ys.size(); ++i) {
    options.check_deadline();
    int y = ys[i];
    Monomial ym = Monomial::variable(n, y);
    MonomialIdeal power = ideal.power(t);

    ReductionStep step;
    step.index = static_cast<int>(i) + 1;
    step.deleted_vertex = y;
    step.ideal = power.colon(m.times(ym));
    step.depth = depth(step.ideal, options).depth - deleted;
    if (!have_floor || step.depth < floor_bound) floor_bound = step.depth;
    have_floor = true;

    // The rewriting behind the trace: adding y to (I^t : M) must agree with
    // first passing to the deletion minor, ((I:M),y) = ((K:M),y).
    Graph next = deletion_minor(current, {y});
    MonomialIdeal next_ideal = edge_ideal(next);
    MonomialIdeal y_only = MonomialIdeal::make(n, {ym});
    if (power.colon(m).sum(y_only) != next_ideal.power(t).colon(m).sum(y_only)) {
      trace.rewriting_verified = false;
    }

    trace.steps.push_back(std::move(step));
    current = std::move(next);
    ideal = std::move(next_ideal);
    ++deleted;
  }

  trace.terminal = ideal.power(t).colon(m);
  trace.terminal_depth = depth(trace.terminal, options).depth - deleted;
  if (!have_floor || trace.terminal_depth < floor_bound) floor_bound = trace.terminal_depth;
  trace.floor_bound = floor_bound;

  trace.actual_depth = depth(edge_ideal(g).power(t).colon(m), options).depth;
  trace.holds = trace.actual_depth >= trace.floor_bound;
  return trace;
}

BoundReport bound_report(const Graph& g, int t, bool with_oracle, const DepthOptions& options) {
  if (t < 1) throw Error(ErrorKind::Precondition, "bound_report requires t >= 1");
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::Precondition, "bound_report requires at least one edge");
  }

  ComponentSummary summary = component_summary(g);
  BoundReport report;
  report.n = g.vertex_count();
  report.edge_count = g.edge_count();
  report.d = summary.d;
  report.p = summary.p;
  report.isolated = summary.isolated;
  report.component_diameters = summary.diameters;
  report.bipartite = summary.bipartite;
  report.loop_count = static_cast<int>(g.loops().size());
  report.t = t;

  int best = 0;
  if (report.loop_count > 0) {
    // Loop rule only; the simple-graph rules do not apply. Defined for
    // connected graphs: ell is the best worst-case distance to a loop.
    bool connected = summary.p == 1 && summary.isolated == 0 && summary.loop_only == 0;
    if (connected && t == 1) {
      int best_ell = 0;
      for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> dist = bfs_distances(g, u);
        int ell = g.vertex_count();
        for (int v : g.loops()) ell = std::min(ell, dist[static_cast<std::size_t>(v)]);
        best_ell = std::max(best_ell, ell);
      }
      report.loops_rule = bound_loops(best_ell);
      best = std::max(best, *report.loops_rule);
    }
  } else {
    PowerBound unified = bound_power(report.d, report.p, t);
    report.unified = unified.value;
    report.p_minus_t = bound_p_minus_t(report.p, t);
    report.positivity = (t <= report.p) ? 1 : 0;
    report.bipartite_positivity = report.bipartite ? 1 : 0;
    if (t == 1) report.components_sum = bound_components_sum(summary.diameters);
    if (t <= 3) report.stanley = unified.value;

    int proven = 0;
    proven = std::max(proven, *report.p_minus_t);
    proven = std::max(proven, *report.positivity);
    proven = std::max(proven, *report.bipartite_positivity);
    if (report.components_sum) proven = std::max(proven, *report.components_sum);
    if (!unified.conjectural) proven = std::max(proven, unified.value);

    best = std::max(proven, unified.value);
    report.conjectural = unified.conjectural && unified.value > proven;
  }

  report.combined = best + report.isolated;

  if (with_oracle) {
    DepthResult oracle = depth(edge_ideal(g).power(t), options);
    report.oracle_depth = oracle.depth;
    report.sharp = (oracle.depth == report.combined);
  }
  return report;
}

}  // namespace edgedepth
