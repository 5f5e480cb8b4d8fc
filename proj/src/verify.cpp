#include "edgedepth/verify.hpp"

#include <algorithm>
#include <sstream>

namespace edgedepth {

MonomialIdeal random_monomial_ideal(Rng& rng, int max_n, int max_exp, int max_gens) {
  while (true) {
    int n = rng.in_range(2, max_n);
    int count = rng.in_range(2, max_gens);
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<std::int32_t> exps(static_cast<std::size_t>(n));
      int degree = 0;
      for (int k = 0; k < n; ++k) {
        exps[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(rng.below(max_exp + 1));
        degree += exps[static_cast<std::size_t>(k)];
      }
      if (degree == 0) {
        --i;  // skip the unit monomial
        continue;
      }
      gens.emplace_back(std::move(exps));
    }
    MonomialIdeal ideal = MonomialIdeal::make(n, std::move(gens));
    if (!ideal.is_zero() && ideal.is_proper()) return ideal;
  }
}

VerifyReport verify_leaf(int max_n, const std::vector<int>& ts) {
  VerifyReport report;
  report.name = "leaf";
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::string key = canonical_key(g);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb = g.neighbors(v);
        if (nb.size() != 1) continue;
        for (int t : ts) {
          ++report.cases;
          if (!leaf_colon_check(g, v, nb[0], t)) {
            std::ostringstream msg;
            msg << key << " leaf=" << v + 1 << " t=" << t;
            report.failures.push_back(msg.str());
          }
        }
      }
    }
  }
  return report;
}

namespace {

bool edge_identity_holds(const Graph& g, const Monomial& factors, int t) {
  MonomialIdeal direct = edge_ideal(g).power(t + 1).colon(factors);
  return construct_e(g, factors, t) == direct;
}

}  // namespace

VerifyReport verify_edge(int max_n, int seeded_cases, std::uint64_t seed) {
  VerifyReport report;
  report.name = "edge";

  // Every edge of every class, t = 1.
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::string key = canonical_key(g);
      for (const auto& [u, v] : g.edges()) {
        ++report.cases;
        Monomial factors = Monomial::variable(n, u).times(Monomial::variable(n, v));
        if (!edge_identity_holds(g, factors, 1)) {
          std::ostringstream msg;
          msg << key << " edge=(" << u + 1 << "," << v + 1 << ") t=1";
          report.failures.push_back(msg.str());
        }
      }
    }
  }

  // Seeded products of two edges, t = 2.
  Rng rng(seed);
  for (int i = 0; i < seeded_cases; ++i) {
    int n = rng.in_range(3, std::min(max_n, 6));
    const std::vector<Graph>& classes = connected_graphs(n);
    const Graph& g = classes[static_cast<std::size_t>(rng.below(static_cast<int>(classes.size())))];
    const auto& edges = g.edges();
    auto pick = [&]() {
      const auto& e = edges[static_cast<std::size_t>(rng.below(static_cast<int>(edges.size())))];
      return Monomial::variable(n, e.first).times(Monomial::variable(n, e.second));
    };
    Monomial factors = pick().times(pick());
    ++report.cases;
    if (!edge_identity_holds(g, factors, 2)) {
      std::ostringstream msg;
      msg << canonical_key(g) << " factors=" << factors.to_string() << " t=2";
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

VerifyReport verify_hamorey(int cases, std::uint64_t seed) {
  VerifyReport report;
  report.name = "hamorey";
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    MonomialIdeal ideal = random_monomial_ideal(rng, 4, 3);
    const int n = ideal.vars();

    std::vector<std::int32_t> exps(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) exps[static_cast<std::size_t>(k)] = rng.below(4);
    int y = rng.below(n);
    exps[static_cast<std::size_t>(y)] = 0;  // y must not divide M
    Monomial m(exps);

    // K = extension of the image of I in R/y: the generators y does not
    // divide.
    std::vector<Monomial> k_gens;
    Monomial yvar = Monomial::variable(n, y);
    for (const Monomial& g : ideal.generators()) {
      if (g.exp(y) == 0) k_gens.push_back(g);
    }
    MonomialIdeal k_ideal = MonomialIdeal::make(n, std::move(k_gens));
    MonomialIdeal y_only = MonomialIdeal::make(n, {yvar});

    ++report.cases;
    if (ideal.colon(m).sum(y_only) != k_ideal.colon(m).sum(y_only)) {
      std::ostringstream msg;
      msg << "I=" << ideal.to_string() << " M=" << m.to_string() << " y=x" << y + 1;
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

VerifyReport verify_order(int max_n) {
  VerifyReport report;
  report.name = "order";
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::string key = canonical_key(g);
      for (int u = 0; u < n; ++u) {
        for (int target = 0; target < n; ++target) {
          std::vector<int> ys = g.neighbors(target);
          if (ys.empty()) continue;
          ++report.cases;
          std::vector<int> order = order_neighbors(g, u, {target}, ys);

          bool ok = order.size() == ys.size();
          std::vector<int> deleted;
          for (std::size_t i = 0; ok && i + 1 < order.size(); ++i) {
            deleted.push_back(order[i]);
            Graph minor = deletion_minor(g, deleted);
            std::vector<int> dist = bfs_distances(minor, u);
            if (dist[static_cast<std::size_t>(target)] < 0) ok = false;
          }
          if (!ok) {
            std::ostringstream msg;
            msg << key << " u=" << u + 1 << " target=" << target + 1;
            report.failures.push_back(msg.str());
          }
        }
      }
    }
  }
  return report;
}

VerifyReport verify_exhaust(const Graph& g, int t, const DepthOptions& options) {
  VerifyReport report;
  report.name = "exhaust";
  const int n = g.vertex_count();

  // Root at one end of a diameter-realizing pair.
  int root = 0, far = 0, best = -1;
  for (int u = 0; u < n; ++u) {
    std::vector<int> dist = bfs_distances(g, u);
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] > best) {
        best = dist[static_cast<std::size_t>(v)];
        root = u;
        far = v;
      }
    }
  }
  (void)far;

  std::vector<int> dist = bfs_distances(g, root);
  for (int w = 0; w < n; ++w) {
    if (dist[static_cast<std::size_t>(w)] < 0) continue;
    std::vector<int> ys = g.neighbors(w);
    if (ys.empty()) continue;
    ++report.cases;
    std::vector<int> order = order_neighbors(g, root, {w}, ys);
    ReductionTrace trace = exhaust_trace(g, Monomial::variable(n, w), t, order, options);
    if (!trace.holds || !trace.rewriting_verified) {
      std::ostringstream msg;
      msg << "w=" << w + 1 << " t=" << t << " floor=" << trace.floor_bound
          << " actual=" << trace.actual_depth
          << (trace.rewriting_verified ? "" : " rewriting-mismatch");
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

}  // namespace edgedepth
