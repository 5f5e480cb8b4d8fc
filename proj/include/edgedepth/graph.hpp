#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgedepth/monomial.hpp"

namespace edgedepth {

// A finite graph on vertices 0..n-1 with simple edges plus an optional loop
// set. Loops are kept out of the edge list; they matter algebraically (a
// loop at v contributes v^2 to the edge ideal) but never change distances.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, default_variable_names(n)) {}
  Graph(int n, std::vector<std::string> names);

  int vertex_count() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }

  void add_edge(int u, int v);
  void add_loop(int v);
  bool has_edge(int u, int v) const;
  bool has_loop(int v) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& loops() const { return loops_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Simple adjacency; v itself is never listed, even with a loop at v.
  std::vector<int> neighbors(int v) const;
  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && loops_ == other.loops_;
  }

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;  // (min,max), sorted, unique
  std::vector<int> loops_;                  // sorted, unique
};

// BFS layers from a root: layers[i] holds the vertices at distance exactly i,
// layers[0] = {root}; vertices outside the root's component land in
// `unreachable`.
struct DistancePartition {
  int root = 0;
  std::vector<std::vector<int>> layers;
  std::vector<int> unreachable;
};

// Distances from u; -1 marks unreachable vertices. Loops are ignored.
std::vector<int> bfs_distances(const Graph& g, int u);
DistancePartition distance_partition(const Graph& g, int u);

// Components are maximal edge-connected vertex sets of size >= 2. Vertices
// with no incidences at all are counted as `isolated` (each is a free
// variable of the edge ideal); vertices whose only incidence is a loop are
// neither and get their own count.
struct ComponentSummary {
  std::vector<std::vector<int>> components;
  std::vector<int> diameters;  // one per component
  int p = 0;                   // components.size()
  int d = 0;                   // max over diameters, 0 when there are none
  int isolated = 0;
  int loop_only = 0;
  bool bipartite = true;  // 2-colorable and loop-free
};

ComponentSummary component_summary(const Graph& g);

// Edge ideal: x_i*x_j per edge plus x_v^2 per loop, minimalized.
MonomialIdeal edge_ideal(const Graph& g);

// Removes every edge and loop incident to S but keeps the vertex slots, so
// variable indices stay stable across chains of deletions.
Graph deletion_minor(const Graph& g, const std::vector<int>& s);

// The colon (I : x_var); for an edge ideal this yields the neighbor
// variables plus the edges avoiding the vertex.
MonomialIdeal contraction_ideal(const MonomialIdeal& ideal, int var);

// Orders `ys` (a subset of the targets' neighbors, disjoint from the
// targets) so that deleting any proper prefix keeps u and every target in
// one component. The member of ys that sits on a fixed shortest path from u
// into the targets goes last; remaining ties break by ascending index.
std::vector<int> order_neighbors(const Graph& g, int u, const std::vector<int>& targets,
                                 const std::vector<int>& ys);

// ---- builders ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

// Chain of k 5-vertex blocks (triangle with two pendant edges) joined by
// bridge edges; block_chain(1) and block_chain(2) are the built-in examples
// "square-sharp" and "cube-sharp". Diameter is 4k-1.
Graph block_chain(int k);

// Built-in example ids: "square-sharp", "cube-sharp", "block-chain:K".
Graph builtin_example(const std::string& id);

// ---- edge-list file format ----
//
// UTF-8 text, `#` starts a comment, each non-empty line is `u v` with
// whitespace-separated alphanumeric identifiers; `u u` declares a loop and
// is rejected unless allow_loops is set. Vertex order = first appearance.
Graph parse_edge_list(const std::string& text, bool allow_loops = false);
std::string format_edge_list(const Graph& g);

// ---- isomorphism-deduplicated enumeration ----

// "n:" followed by the lexicographically minimal upper-triangular adjacency
// bitstring over all vertex permutations (bits column by column, the graph6
// ordering). Simple graphs only; n <= 8.
std::string canonical_key(const Graph& g);

// Builds the graph a canonical key describes.
Graph graph_from_canonical_key(const std::string& key);

// One representative per isomorphism class of connected simple graphs on n
// vertices, sorted by canonical key. Cached; n <= 8.
const std::vector<Graph>& connected_graphs(int n);

inline constexpr int kEnumerationCap = 8;

}  // namespace edgedepth
