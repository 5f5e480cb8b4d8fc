#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "edgedepth/graph.hpp"
#include "edgedepth/rng.hpp"

using namespace edgedepth;

namespace {

// Labeled brute force over all edge subsets, the oracle for the
// augmentation-based enumeration: count isomorphism classes of connected
// graphs by collecting canonical keys.
std::set<std::string> brute_force_connected_keys(int n) {
  std::set<std::string> keys;
  const int bits = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    Graph g(n);
    int pos = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++pos) {
        if (mask & (1u << pos)) g.add_edge(i, j);
      }
    }
    std::vector<int> dist = bfs_distances(g, 0);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) continue;
    keys.insert(canonical_key(g));
  }
  return keys;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace

TEST_CASE("edge ideal") {
  CHECK(edge_ideal(path_graph(3)).to_string() == "(x1*x2, x2*x3)");

  Graph square_sharp = builtin_example("square-sharp");
  CHECK(edge_ideal(square_sharp).generators().size() == 5);

  Graph looped = path_graph(4);
  looped.add_loop(3);
  CHECK(edge_ideal(looped).to_string() == "(x1*x2, x2*x3, x3*x4, x4^2)");
}

TEST_CASE("component summary") {
  ComponentSummary square = component_summary(builtin_example("square-sharp"));
  CHECK(square.d == 3);
  CHECK(square.p == 1);
  CHECK_FALSE(square.bipartite);

  ComponentSummary cube = component_summary(builtin_example("cube-sharp"));
  CHECK(cube.d == 7);
  CHECK(cube.p == 1);

  Graph g(5);  // two disjoint edges plus one isolated vertex
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  ComponentSummary s = component_summary(g);
  CHECK(s.p == 2);
  CHECK(s.isolated == 1);
  CHECK(s.d == 1);
  CHECK(s.diameters == std::vector<int>{1, 1});
  CHECK(s.bipartite);

  Graph loopy(2);
  loopy.add_loop(0);
  ComponentSummary ls = component_summary(loopy);
  CHECK(ls.loop_only == 1);
  CHECK(ls.isolated == 1);
  CHECK(ls.p == 0);
  CHECK_FALSE(ls.bipartite);
}

TEST_CASE("distance partition") {
  DistancePartition dp = distance_partition(builtin_example("square-sharp"), 0);
  REQUIRE(dp.layers.size() == 4);
  CHECK(dp.layers[0] == std::vector<int>{0});
  CHECK(dp.layers[1] == std::vector<int>{1});
  CHECK(dp.layers[2] == std::vector<int>{2, 3});
  CHECK(dp.layers[3] == std::vector<int>{4});
  CHECK(dp.unreachable.empty());

  // Layer membership agrees with pairwise BFS distances on every class.
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (int u = 0; u < n; ++u) {
        std::vector<int> dist = bfs_distances(g, u);
        DistancePartition part = distance_partition(g, u);
        for (std::size_t i = 0; i < part.layers.size(); ++i) {
          for (int v : part.layers[i]) {
            CHECK(dist[static_cast<std::size_t>(v)] == static_cast<int>(i));
          }
        }
        // Every vertex of a deeper layer has a neighbor one layer up.
        for (std::size_t i = 1; i < part.layers.size(); ++i) {
          for (int v : part.layers[i]) {
            bool has_up = false;
            for (int w : g.neighbors(v)) {
              if (dist[static_cast<std::size_t>(w)] == static_cast<int>(i) - 1) has_up = true;
            }
            CHECK(has_up);
          }
        }
      }
    }
  }
}

TEST_CASE("loops never change distances") {
  Rng rng(23);
  for (int n = 3; n <= 6; ++n) {
    const auto& classes = connected_graphs(n);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph& g =
          classes[static_cast<std::size_t>(rng.below(static_cast<int>(classes.size())))];
      Graph with_loop = g;
      with_loop.add_loop(rng.below(n));
      for (int u = 0; u < n; ++u) {
        CHECK(bfs_distances(g, u) == bfs_distances(with_loop, u));
      }
    }
  }
}

TEST_CASE("deletion and contraction minors") {
  Graph path3 = path_graph(3);
  Graph del = deletion_minor(path3, {1});
  CHECK(del.vertex_count() == 3);  // slots retained
  CHECK(del.edge_count() == 0);

  CHECK(contraction_ideal(edge_ideal(path3), 1).to_string() == "(x1, x3)");

  Graph square_sharp = builtin_example("square-sharp");
  CHECK(contraction_ideal(edge_ideal(square_sharp), 3).to_string() == "(x2, x3, x5)");
}

TEST_CASE("order_neighbors") {
  Graph square_sharp = builtin_example("square-sharp");
  // Root x1, target x4: x2 sits on the shortest path and must come last.
  std::vector<int> order = order_neighbors(square_sharp, 0, {3}, {1, 2, 4});
  CHECK(order == std::vector<int>{2, 4, 1});

  CHECK(order_neighbors(path_graph(3), 0, {2}, {1}) == std::vector<int>{1});

  // The root itself may appear in Y.
  Graph k2 = path_graph(2);
  CHECK(order_neighbors(k2, 0, {1}, {0}) == std::vector<int>{0});

  // Several targets spanning an edge; x1 sits on the path into the lowest
  // layer and goes last, and every proper prefix deletion keeps the root
  // joined to both targets.
  std::vector<int> multi = order_neighbors(square_sharp, 0, {1, 3}, {0, 2, 4});
  CHECK(multi == std::vector<int>{2, 4, 0});
  for (std::size_t len = 1; len + 1 < multi.size(); ++len) {
    Graph minor = deletion_minor(square_sharp,
                                 std::vector<int>(multi.begin(), multi.begin() + len));
    std::vector<int> dist = bfs_distances(minor, 0);
    CHECK(dist[1] >= 0);
    CHECK(dist[3] >= 0);
  }

  CHECK_THROWS_AS(order_neighbors(square_sharp, 0, {3}, {3}), Error);   // Y meets targets
  CHECK_THROWS_AS(order_neighbors(square_sharp, 0, {0, 4}, {1}), Error);  // targets not induced-connected
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_THROWS_AS(order_neighbors(two_edges, 0, {2}, {3}), Error);  // target unreachable
}

TEST_CASE("canonical key") {
  Graph p3 = path_graph(3);
  CHECK(canonical_key(p3) == "3:011");  // path: the minimal labeling avoids edge (0,1)
  CHECK(canonical_key(complete_graph(3)) == "3:111");
  CHECK(graph_from_canonical_key(canonical_key(builtin_example("square-sharp"))).edge_count() ==
        5);

  // Permutation invariance.
  Rng rng(31);
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::string key = canonical_key(g);
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), std::mt19937_64(rng.next()));
        CHECK(canonical_key(permuted(g, perm)) == key);
      }
    }
  }

  Graph loopy(2);
  loopy.add_edge(0, 1);
  loopy.add_loop(0);
  CHECK_THROWS_AS(canonical_key(loopy), Error);
}

TEST_CASE("connected graph enumeration vs labeled brute force") {
  CHECK(connected_graphs(3).size() == 2);
  CHECK(connected_graphs(4).size() == 6);
  CHECK(connected_graphs(5).size() == 21);

  for (int n = 2; n <= 5; ++n) {
    std::set<std::string> expected = brute_force_connected_keys(n);
    const auto& classes = connected_graphs(n);
    CHECK(classes.size() == expected.size());
    std::string previous;
    for (const Graph& g : classes) {
      std::string key = canonical_key(g);
      CHECK(expected.count(key) == 1);
      CHECK(previous < key);  // sorted, so also duplicate-free
      previous = key;
    }
  }

  CHECK_THROWS_AS(connected_graphs(9), Error);
}

TEST_CASE("builders") {
  CHECK(builtin_example("square-sharp") == block_chain(1));
  Graph cube = builtin_example("cube-sharp");
  CHECK(cube.vertex_count() == 10);
  CHECK(cube.edge_count() == 11);
  CHECK(cube == block_chain(2));

  for (int k = 1; k <= 3; ++k) {
    ComponentSummary s = component_summary(block_chain(k));
    CHECK(s.d == 4 * k - 1);
    CHECK(block_chain(k).vertex_count() == 5 * k);
  }

  ComponentSummary u = component_summary(disjoint_union(path_graph(2), path_graph(2)));
  CHECK(u.p == 2);
  CHECK(u.d == 1);

  CHECK(cycle_graph(4).edge_count() == 4);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK_THROWS_AS(builtin_example("no-such-example"), Error);
}

TEST_CASE("edge list files") {
  Graph g = parse_edge_list("# comment\na b\nb c\n\na c # triangle\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.names()[0] == "a");

  Graph reparsed = parse_edge_list(format_edge_list(g));
  CHECK(reparsed.edge_count() == g.edge_count());
  CHECK(canonical_key(reparsed) == canonical_key(g));

  Graph loopy = parse_edge_list("a b\nb b\n", /*allow_loops=*/true);
  CHECK(loopy.loops() == std::vector<int>{1});

  CHECK_THROWS_AS(parse_edge_list("a b\nb b\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), ParseError);
  try {
    parse_edge_list("a b\na b c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
}
