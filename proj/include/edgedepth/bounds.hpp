#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgedepth/depth.hpp"
#include "edgedepth/graph.hpp"

namespace edgedepth {

// Exact ceiling of v/3 for any sign: ceil_div3(-2) = 0, ceil_div3(-4) = -1.
int ceil_div3(int v);

// The diameter bound for depth R/I^t: ceil((d - 4t + 5)/3) + p - 1. Proven
// for t <= 3; for t >= 4 it is only conjectured, which the flag records.
struct PowerBound {
  int value = 0;
  bool conjectural = false;
};
PowerBound bound_power(int d, int p, int t);

// Per-component refinement for the first power: sum of ceil((d_i + 1)/3).
int bound_components_sum(const std::vector<int>& component_diameters);

// Component-count bound valid for every power.
int bound_p_minus_t(int p, int t);

// 1 when t <= p or the graph is bipartite (the maximal ideal is not an
// associated prime in either case), else 0.
int bound_positivity(int p, int t, bool bipartite);

// Graphs with loops: with a vertex u at distance >= ell from every loop,
// depth R/I >= ceil((ell - 1)/3).
int bound_loops(int ell);

// Depth lower bounds for colon ideals of powers, keyed by the shape of the
// colon argument. `ell` is the relevant distance (layer of the vertex, or a
// component diameter for the disconnected/triangle kinds).
enum class ColonKind {
  Colon1Vertex,         // (I   : w), w in layer ell        -> ceil((ell+2)/3)
  Colon2Vertex,         // (I^2 : w), w in layer ell        -> ceil((ell-2)/3)
  Colon2Disconnected,   // (I^2 : w), w outside u's comp    -> ceil(ell/3)
  Colon3EdgeProduct2t,  // (I^{t+1} : x_1..x_{2t}), layers >= ell -> ceil((ell-2)/3)
  Colon3Triple,         // (I^3 : x1 x2 x3), path, layers >= ell  -> ceil((ell-5)/3)
  Colon3Edge,           // (I^3 : xy), edge with x in layer ell   -> ceil((ell-6)/3)
  Colon3Vertex,         // (I^3 : w), w in layer ell        -> ceil((ell-6)/3)
  Triangle,             // (I^{t+1} : odd cycle product), ell = d(J) -> ceil((ell-3)/3)
  PairPath,             // I^2, u,v ends of a path of length ell -> ceil((ell-3)/3) (+ p-1)
};
int bound_colon(ColonKind kind, int ell);
const char* to_string(ColonKind kind);

// The colon of I^{t+1} by a product of 2t vertices, built constructively:
// (I, E) with E all degree-two monomials y1*y2 on the union of the factor
// vertices' neighborhoods such that y1*y2*factors lies in I^{t+1}. The
// verification suites compare it against the direct colon.
MonomialIdeal construct_e(const Graph& g, const Monomial& factors, int t);

// True iff (I^t : xy) equals I^{t-1} for the leaf x with unique neighbor y.
bool leaf_colon_check(const Graph& g, int leaf, int neighbor, int t);

// One deletion step of a reduction trace: the colon ideal in the ring with
// the previously deleted variables removed, and its oracle depth there.
struct ReductionStep {
  int index = 0;            // 1-based
  int deleted_vertex = -1;  // y_i
  MonomialIdeal ideal;      // (I_{i-1}^t : M * y_i)
  int depth = 0;            // in R_{i-1}
};

// Exhausting a neighbor list y_1..y_s: each step colon ideal is checked
// against the ((I:M),y) = ((K:M),y) rewriting, the oracle supplies the step
// depths a_i and the terminal depth b, and the claimed floor is min(a, b).
struct ReductionTrace {
  Monomial base;  // M
  std::vector<ReductionStep> steps;
  MonomialIdeal terminal;  // (I_s^t : M)
  int terminal_depth = 0;  // in R_s
  int floor_bound = 0;     // min over steps and terminal
  int actual_depth = 0;    // depth R/(I^t : M)
  bool holds = false;      // actual >= floor
  bool rewriting_verified = false;
};

ReductionTrace exhaust_trace(const Graph& g, const Monomial& m, int t,
                             const std::vector<int>& ys, const DepthOptions& options = {});

// All applicable rules for (G, t) plus their combined maximum. Isolated
// vertices are free variables, so the combined value adds one per isolated
// vertex on top of the rules for the edge-bearing part. For a graph with
// loops only the loop rule applies. The Stanley depth bound coincides with
// the unified value for t <= 3 and is reported separately.
struct BoundReport {
  // graph invariants
  int n = 0;
  int edge_count = 0;
  int d = 0;
  int p = 0;
  int isolated = 0;
  std::vector<int> component_diameters;
  bool bipartite = false;
  int loop_count = 0;

  int t = 1;

  std::optional<int> components_sum;  // t = 1 only
  std::optional<int> unified;
  std::optional<int> p_minus_t;
  std::optional<int> positivity;
  std::optional<int> bipartite_positivity;
  std::optional<int> loops_rule;  // connected graphs with loops
  std::optional<int> stanley;     // t <= 3
  bool conjectural = false;       // combined depends on the t >= 4 rule
  int combined = 0;

  std::optional<int> oracle_depth;
  std::optional<bool> sharp;  // oracle == combined
};

BoundReport bound_report(const Graph& g, int t, bool with_oracle,
                         const DepthOptions& options = {});

}  // namespace edgedepth
