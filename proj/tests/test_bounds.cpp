#include "doctest.h"
#include "edgedepth/bounds.hpp"
#include "edgedepth/verify.hpp"

using namespace edgedepth;

namespace {

Monomial m(int n, const std::string& text) {
  return parse_monomial(text, default_variable_names(n));
}

MonomialIdeal ideal(int n, const std::vector<std::string>& gens) {
  std::vector<Monomial> parsed;
  for (const std::string& g : gens) parsed.push_back(m(n, g));
  return MonomialIdeal::make(n, std::move(parsed));
}

}  // namespace

TEST_CASE("ceil_div3") {
  CHECK(ceil_div3(8) == 3);
  CHECK(ceil_div3(0) == 0);
  CHECK(ceil_div3(-2) == 0);
  CHECK(ceil_div3(-4) == -1);
  CHECK(ceil_div3(-3) == -1);
  CHECK(ceil_div3(3) == 1);
  CHECK(ceil_div3(1) == 1);
  CHECK(ceil_div3(-1) == 0);
}

TEST_CASE("power bound") {
  CHECK(bound_power(3, 1, 2).value == 0);
  CHECK(bound_power(7, 1, 3).value == 0);
  CHECK(bound_power(7, 1, 1).value == 3);
  CHECK_FALSE(bound_power(7, 1, 3).conjectural);
  CHECK(bound_power(7, 1, 4).conjectural);
  CHECK(bound_power(3, 2, 1).value == 3);  // ceil(4/3) + 1
  CHECK_THROWS_AS(bound_power(3, 0, 1), Error);
}

TEST_CASE("component sum and component count bounds") {
  CHECK(bound_components_sum({3}) == 2);
  CHECK(bound_components_sum({1, 1}) == 2);
  CHECK(bound_components_sum({7}) == 3);
  CHECK_THROWS_AS(bound_components_sum({0}), Error);

  CHECK(bound_p_minus_t(4, 2) == 2);
  CHECK(bound_positivity(3, 3, false) == 1);
  CHECK(bound_positivity(1, 5, true) == 1);
  CHECK(bound_positivity(1, 5, false) == 0);

  CHECK(bound_loops(4) == 1);
  CHECK(bound_loops(1) == 0);
}

TEST_CASE("colon bound table") {
  CHECK(bound_colon(ColonKind::Colon1Vertex, 4) == 2);
  CHECK(bound_colon(ColonKind::Colon2Vertex, 5) == 1);
  CHECK(bound_colon(ColonKind::Colon2Disconnected, 4) == 2);
  CHECK(bound_colon(ColonKind::Colon3EdgeProduct2t, 5) == 1);
  CHECK(bound_colon(ColonKind::Colon3Triple, 8) == 1);
  CHECK(bound_colon(ColonKind::Colon3Edge, 7) == 1);
  CHECK(bound_colon(ColonKind::Colon3Vertex, 7) == 1);
  CHECK(bound_colon(ColonKind::Triangle, 3) == 0);
  CHECK(bound_colon(ColonKind::PairPath, 6) == 1);
}

TEST_CASE("construct_e") {
  Graph triangle = complete_graph(3);
  MonomialIdeal e = construct_e(triangle, m(3, "x1*x2"), 1);
  CHECK(e == ideal(3, {"x1*x2", "x2*x3", "x1*x3", "x3^2"}));
  CHECK(e == edge_ideal(triangle).power(2).colon(m(3, "x1*x2")));

  Graph path3 = path_graph(3);
  CHECK(construct_e(path3, m(3, "x1*x2"), 1) == edge_ideal(path3));

  Graph square_sharp = builtin_example("square-sharp");
  CHECK(construct_e(square_sharp, m(5, "x4*x5"), 1) ==
        edge_ideal(square_sharp).power(2).colon(m(5, "x4*x5")));

  CHECK_THROWS_AS(construct_e(path3, m(3, "x1*x3"), 1), Error);  // not in I
  CHECK_THROWS_AS(construct_e(path3, m(3, "x1"), 1), Error);     // wrong degree
}

TEST_CASE("leaf colon identity") {
  CHECK(leaf_colon_check(path_graph(3), 0, 1, 2));
  CHECK(leaf_colon_check(path_graph(5), 0, 1, 3));

  Graph star(4);  // one center, three leaves
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(leaf_colon_check(star, 1, 0, 2));

  CHECK_THROWS_AS(leaf_colon_check(path_graph(3), 1, 0, 2), Error);  // not a leaf
  CHECK_THROWS_AS(leaf_colon_check(path_graph(3), 0, 1, 1), Error);  // t too small
}

TEST_CASE("reduction traces") {
  // Middle vertex of a 3-path, exhausting both neighbors.
  Graph path3 = path_graph(3);
  ReductionTrace trace = exhaust_trace(path3, m(3, "x2"), 2, {0, 2});
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].ideal == edge_ideal(path3));  // (I^2 : x2 x1) = I
  CHECK(trace.steps[0].depth == 1);
  CHECK(trace.steps[1].ideal == ideal(3, {"x2*x3"}));
  CHECK(trace.steps[1].depth == 1);
  CHECK(trace.terminal.is_zero());
  CHECK(trace.terminal_depth == 1);  // only x2 remains in the terminal ring
  CHECK(trace.floor_bound == 1);
  CHECK(trace.holds);
  CHECK(trace.rewriting_verified);

  // Square-sharp example: exhaust the neighbors of x4 from root x1.
  Graph square_sharp = builtin_example("square-sharp");
  std::vector<int> order = order_neighbors(square_sharp, 0, {3}, square_sharp.neighbors(3));
  ReductionTrace sq = exhaust_trace(square_sharp, m(5, "x4"), 2, order);
  CHECK(sq.steps.size() == 3);
  CHECK(sq.holds);
  CHECK(sq.rewriting_verified);

  // Empty deletion list: the trace is just the terminal, an exact floor.
  ReductionTrace trivial = exhaust_trace(path3, m(3, "x2"), 2, {});
  CHECK(trivial.steps.empty());
  CHECK(trivial.floor_bound == trivial.actual_depth);
  CHECK(trivial.holds);

  CHECK_THROWS_AS(exhaust_trace(path3, m(3, "x2"), 2, {1}), Error);  // y divides M
}

TEST_CASE("structural identity suites on small scopes") {
  CHECK(verify_leaf(4, {2}).passed());
  CHECK(verify_edge(4, 25, 5).passed());
  CHECK(verify_hamorey(50, 5).passed());
  CHECK(verify_order(4).passed());
  CHECK(verify_exhaust(builtin_example("square-sharp"), 2).passed());
}

TEST_CASE("bound report") {
  BoundReport square = bound_report(builtin_example("square-sharp"), 2, /*with_oracle=*/true);
  CHECK(square.d == 3);
  CHECK(square.combined == 0);
  CHECK(square.oracle_depth == 0);
  CHECK(square.sharp == true);
  CHECK_FALSE(square.conjectural);
  CHECK(square.stanley == 0);

  // Three disjoint edges at t = 2: the component-count rules give 1 and the
  // diameter rule gives 2, which dominates the combined value.
  Graph edges3 = disjoint_union(disjoint_union(path_graph(2), path_graph(2)), path_graph(2));
  BoundReport disjoint = bound_report(edges3, 2, /*with_oracle=*/true);
  CHECK(disjoint.p_minus_t == 1);
  CHECK(disjoint.positivity == 1);
  CHECK(disjoint.unified == 2);
  CHECK(disjoint.combined == 2);
  CHECK(*disjoint.oracle_depth >= disjoint.combined);

  // t = 1 brings in the per-component sum.
  BoundReport first = bound_report(edges3, 1, /*with_oracle=*/false);
  CHECK(first.components_sum == 3);
  CHECK(first.combined == 3);

  // Isolated vertices are free variables and shift the combined value.
  Graph padded = disjoint_union(path_graph(2), Graph(2));
  BoundReport pad = bound_report(padded, 1, /*with_oracle=*/true);
  CHECK(pad.isolated == 2);
  CHECK(pad.combined == 3);
  CHECK(pad.oracle_depth == 3);

  // Conjectural only when the t >= 4 rule actually decides the maximum.
  BoundReport far = bound_report(path_graph(8), 4, /*with_oracle=*/false);
  CHECK(far.unified == ceil_div3(7 - 16 + 5));
  CHECK_FALSE(far.conjectural);  // positivity (bipartite) already matches it
  BoundReport wide = bound_report(block_chain(4), 4, /*with_oracle=*/false);
  CHECK(wide.d == 15);
  CHECK(wide.unified == 2);
  CHECK(wide.conjectural);

  // Loop rule: a path with a far loop.
  Graph looped = path_graph(5);
  looped.add_loop(4);
  BoundReport loops = bound_report(looped, 1, /*with_oracle=*/true);
  REQUIRE(loops.loops_rule.has_value());
  CHECK(*loops.loops_rule == bound_loops(4));
  CHECK_FALSE(loops.unified.has_value());
  CHECK(*loops.oracle_depth >= loops.combined);

  CHECK_THROWS_AS(bound_report(Graph(3), 1, false), Error);
}
