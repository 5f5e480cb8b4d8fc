#include "edgedepth/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>

namespace edgedepth {

Graph::Graph(int n, std::vector<std::string> names) : n_(n), names_(std::move(names)) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative vertex count");
  if (static_cast<int>(names_.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "name list does not match vertex count");
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::Precondition, "vertex index " + std::to_string(v) + " out of range");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::Precondition, "use add_loop for loops");
  auto e = std::minmax(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
  if (it == edges_.end() || *it != std::make_pair(e.first, e.second)) {
    edges_.insert(it, {e.first, e.second});
  }
}

void Graph::add_loop(int v) {
  check_vertex(v);
  auto it = std::lower_bound(loops_.begin(), loops_.end(), v);
  if (it == loops_.end() || *it != v) loops_.insert(it, v);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  auto e = std::minmax(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
}

bool Graph::has_loop(int v) const { return std::binary_search(loops_.begin(), loops_.end(), v); }

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& [a, b] : edges_) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> bfs_distances(const Graph& g, int u) {
  if (u < 0 || u >= g.vertex_count()) {
    throw Error(ErrorKind::Precondition, "root vertex out of range");
  }
  auto adj = g.adjacency();
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(u)] = 0;
  q.push(u);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistancePartition distance_partition(const Graph& g, int u) {
  DistancePartition out;
  out.root = u;
  std::vector<int> dist = bfs_distances(g, u);
  int maxd = 0;
  for (int d : dist) maxd = std::max(maxd, d);
  out.layers.assign(static_cast<std::size_t>(maxd) + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[static_cast<std::size_t>(v)] < 0) {
      out.unreachable.push_back(v);
    } else {
      out.layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);
    }
  }
  return out;
}

ComponentSummary component_summary(const Graph& g) {
  ComponentSummary out;
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[static_cast<std::size_t>(v)] >= 0) continue;
    if (adj[static_cast<std::size_t>(v)].empty()) {
      if (g.has_loop(v)) {
        ++out.loop_only;
      } else {
        ++out.isolated;
      }
      comp[static_cast<std::size_t>(v)] = -2;  // not part of any listed component
      continue;
    }
    std::vector<int> members;
    std::queue<int> q;
    comp[static_cast<std::size_t>(v)] = ncomp;
    q.push(v);
    while (!q.empty()) {
      int w = q.front();
      q.pop();
      members.push_back(w);
      for (int x : adj[static_cast<std::size_t>(w)]) {
        if (comp[static_cast<std::size_t>(x)] < 0) {
          comp[static_cast<std::size_t>(x)] = ncomp;
          q.push(x);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
    ++ncomp;
  }

  out.p = static_cast<int>(out.components.size());
  for (const auto& members : out.components) {
    // Eccentricity sweep inside the component.
    int diam = 0;
    for (int v : members) {
      std::vector<int> dist = bfs_distances(g, v);
      for (int w : members) diam = std::max(diam, dist[static_cast<std::size_t>(w)]);
    }
    out.diameters.push_back(diam);
    out.d = std::max(out.d, diam);
  }

  // 2-coloring; any loop breaks bipartiteness.
  out.bipartite = g.loops().empty();
  if (out.bipartite) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n && out.bipartite; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0 || adj[static_cast<std::size_t>(v)].empty())
        continue;
      color[static_cast<std::size_t>(v)] = 0;
      std::queue<int> q;
      q.push(v);
      while (!q.empty() && out.bipartite) {
        int w = q.front();
        q.pop();
        for (int x : adj[static_cast<std::size_t>(w)]) {
          if (color[static_cast<std::size_t>(x)] < 0) {
            color[static_cast<std::size_t>(x)] = 1 - color[static_cast<std::size_t>(w)];
            q.push(x);
          } else if (color[static_cast<std::size_t>(x)] == color[static_cast<std::size_t>(w)]) {
            out.bipartite = false;
            break;
          }
        }
      }
    }
  }
  return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) {
    gens.push_back(Monomial::variable(n, u).times(Monomial::variable(n, v)));
  }
  for (int v : g.loops()) {
    gens.push_back(Monomial::variable(n, v).pow(2));
  }
  return MonomialIdeal::make(n, std::move(gens));
}

Graph deletion_minor(const Graph& g, const std::vector<int>& s) {
  std::vector<char> del(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorKind::Precondition, "deleted vertex out of range");
    }
    del[static_cast<std::size_t>(v)] = 1;
  }
  Graph out(g.vertex_count(), g.names());
  for (const auto& [u, v] : g.edges()) {
    if (!del[static_cast<std::size_t>(u)] && !del[static_cast<std::size_t>(v)]) out.add_edge(u, v);
  }
  for (int v : g.loops()) {
    if (!del[static_cast<std::size_t>(v)]) out.add_loop(v);
  }
  return out;
}

MonomialIdeal contraction_ideal(const MonomialIdeal& ideal, int var) {
  return ideal.colon(Monomial::variable(ideal.vars(), var));
}

std::vector<int> order_neighbors(const Graph& g, int u, const std::vector<int>& targets,
                                 const std::vector<int>& ys) {
  if (targets.empty()) throw Error(ErrorKind::Precondition, "order_neighbors: empty target set");
  std::vector<int> tsorted = targets;
  std::sort(tsorted.begin(), tsorted.end());
  if (std::adjacent_find(tsorted.begin(), tsorted.end()) != tsorted.end()) {
    throw Error(ErrorKind::Precondition, "order_neighbors: duplicate target");
  }
  std::vector<int> ysorted = ys;
  std::sort(ysorted.begin(), ysorted.end());
  if (std::adjacent_find(ysorted.begin(), ysorted.end()) != ysorted.end()) {
    throw Error(ErrorKind::Precondition, "order_neighbors: duplicate in Y");
  }
  auto in_targets = [&](int v) {
    return std::binary_search(tsorted.begin(), tsorted.end(), v);
  };
  for (int y : ysorted) {
    if (in_targets(y)) {
      throw Error(ErrorKind::Precondition, "order_neighbors: Y overlaps the target set");
    }
    bool adjacent = false;
    for (int t : tsorted) {
      if (g.has_edge(y, t)) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) {
      throw Error(ErrorKind::Precondition,
                  "order_neighbors: Y member is not a neighbor of any target");
    }
  }

  // Induced graph on the targets must be connected.
  if (tsorted.size() > 1) {
    std::vector<int> seen{tsorted[0]};
    std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
    mark[static_cast<std::size_t>(tsorted[0])] = 1;
    for (std::size_t head = 0; head < seen.size(); ++head) {
      for (int t : tsorted) {
        if (!mark[static_cast<std::size_t>(t)] && g.has_edge(seen[head], t)) {
          mark[static_cast<std::size_t>(t)] = 1;
          seen.push_back(t);
        }
      }
    }
    if (seen.size() != tsorted.size()) {
      throw Error(ErrorKind::Precondition,
                  "order_neighbors: induced graph on the targets is not connected");
    }
  }

  std::vector<int> dist = bfs_distances(g, u);
  for (int t : tsorted) {
    if (dist[static_cast<std::size_t>(t)] < 0) {
      throw Error(ErrorKind::Precondition,
                  "order_neighbors: target is outside the root's component");
    }
  }

  // Lowest-layer target, then a fixed shortest path from u to it; the path
  // is built by walking back through the smallest-index predecessor.
  int k = dist[static_cast<std::size_t>(tsorted[0])];
  int xq = tsorted[0];
  for (int t : tsorted) {
    if (dist[static_cast<std::size_t>(t)] < k) {
      k = dist[static_cast<std::size_t>(t)];
      xq = t;
    }
  }
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  {
    int cur = xq;
    on_path[static_cast<std::size_t>(cur)] = 1;
    while (cur != u) {
      int best = -1;
      for (int w : g.neighbors(cur)) {
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
          best = w;
          break;  // neighbors are sorted ascending
        }
      }
      cur = best;
      on_path[static_cast<std::size_t>(cur)] = 1;
    }
  }

  std::vector<int> order, last;
  for (int y : ysorted) {
    if (on_path[static_cast<std::size_t>(y)]) {
      last.push_back(y);
    } else {
      order.push_back(y);
    }
  }
  if (last.size() > 1) {
    throw std::logic_error("order_neighbors: more than one Y member on the chosen path");
  }
  order.insert(order.end(), last.begin(), last.end());
  return order;
}

// ---- builders ----

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "path_graph requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::Precondition, "cycle_graph requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "complete_graph requires n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (int v : a.loops()) g.add_loop(v);
  const int off = a.vertex_count();
  for (const auto& [u, v] : b.edges()) g.add_edge(u + off, v + off);
  for (int v : b.loops()) g.add_loop(v + off);
  return g;
}

Graph block_chain(int k) {
  if (k < 1) throw Error(ErrorKind::Precondition, "block_chain requires k >= 1");
  Graph g(5 * k);
  for (int b = 0; b < k; ++b) {
    int a = 5 * b;
    g.add_edge(a, a + 1);
    g.add_edge(a + 1, a + 2);
    g.add_edge(a + 1, a + 3);
    g.add_edge(a + 2, a + 3);
    g.add_edge(a + 3, a + 4);
    if (b + 1 < k) g.add_edge(a + 4, a + 5);
  }
  return g;
}

Graph builtin_example(const std::string& id) {
  if (id == "square-sharp") return block_chain(1);
  if (id == "cube-sharp") return block_chain(2);
  const std::string prefix = "block-chain:";
  if (id.rfind(prefix, 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(id.substr(prefix.size()));
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownKind, "bad block-chain size in example id '" + id + "'");
    }
    return block_chain(k);
  }
  throw Error(ErrorKind::UnknownKind, "unknown example id '" + id + "'");
}

// ---- edge-list files ----

Graph parse_edge_list(const std::string& text, bool allow_loops) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;

  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(name);
    index.emplace(name, id);
    return id;
  };

  int lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);

    // Tokenize, remembering 1-based columns.
    std::vector<std::pair<std::string, int>> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      tokens.emplace_back(line.substr(start, pos - start), static_cast<int>(start) + 1);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(lineno, tokens.size() > 2 ? tokens[2].second : tokens[0].second,
                       "expected exactly two vertex identifiers per line");
    }
    for (const auto& [tok, col] : tokens) {
      for (char c : tok) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          throw ParseError(lineno, col, "identifier '" + tok + "' has a non-alphanumeric character");
        }
      }
    }
    int u = intern(tokens[0].first);
    int v = intern(tokens[1].first);
    if (u == v) {
      if (!allow_loops) {
        throw ParseError(lineno, tokens[0].second,
                         "loop '" + tokens[0].first + " " + tokens[1].first +
                             "' requires the loops flag");
      }
      loops.push_back(u);
    } else {
      edges.emplace_back(u, v);
    }
  }

  Graph g(static_cast<int>(names.size()), names);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  for (int v : loops) g.add_loop(v);
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
  if (!g.loops().empty()) out << ", " << g.loops().size() << " loops";
  out << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << g.names()[static_cast<std::size_t>(u)] << ' ' << g.names()[static_cast<std::size_t>(v)]
        << '\n';
  }
  for (int v : g.loops()) {
    out << g.names()[static_cast<std::size_t>(v)] << ' ' << g.names()[static_cast<std::size_t>(v)]
        << '\n';
  }
  return out.str();
}

// ---- canonical form ----

namespace {

// Branch-and-bound minimization of the column-major upper-triangular
// bitstring over all vertex permutations. `best` always holds either a
// completed candidate or a strictly improving prefix padded with 0xff, so a
// child may be pruned the moment its column exceeds the best segment.
struct CanonicalSearch {
  int n;
  bool adj[kEnumerationCap + 1][kEnumerationCap + 1];
  std::vector<std::uint8_t> best;
  int perm[kEnumerationCap + 1];
  bool used[kEnumerationCap + 1];

  void run() {
    best.assign(static_cast<std::size_t>(n * (n - 1) / 2), 0xff);
    std::fill(used, used + n, false);
    descend(0, 0);
  }

  // Invariant on entry: the placed prefix equals best[0..pos). A column that
  // compares greater is pruned; one that compares smaller rewrites the best
  // prefix and pads the tail with 0xff, restoring the invariant.
  void descend(int depth, int pos) {
    if (depth == n) return;
    struct Cand {
      std::uint32_t bits;
      int v;
    };
    Cand cands[kEnumerationCap + 1];
    int ncand = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint32_t bits = 0;
      for (int i = 0; i < depth; ++i) bits = (bits << 1) | (adj[perm[i]][v] ? 1u : 0u);
      cands[ncand++] = {bits, v};
    }
    std::sort(cands, cands + ncand, [](const Cand& a, const Cand& b) {
      return a.bits != b.bits ? a.bits < b.bits : a.v < b.v;
    });

    for (int c = 0; c < ncand; ++c) {
      int cmp = 0;  // column vs best segment at the first difference
      for (int i = 0; i < depth; ++i) {
        std::uint8_t bit = (cands[c].bits >> (depth - 1 - i)) & 1u;
        if (bit != best[static_cast<std::size_t>(pos + i)]) {
          cmp = bit < best[static_cast<std::size_t>(pos + i)] ? -1 : 1;
          break;
        }
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        for (int i = 0; i < depth; ++i) {
          best[static_cast<std::size_t>(pos + i)] = (cands[c].bits >> (depth - 1 - i)) & 1u;
        }
        std::fill(best.begin() + pos + depth, best.end(), 0xff);
      }
      perm[depth] = cands[c].v;
      used[cands[c].v] = true;
      descend(depth + 1, pos + depth);
      used[cands[c].v] = false;
    }
  }
};

}  // namespace

std::string canonical_key(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kEnumerationCap) {
    throw Error(ErrorKind::Precondition,
                "canonical form is capped at n <= " + std::to_string(kEnumerationCap));
  }
  if (!g.loops().empty()) {
    throw Error(ErrorKind::Unsupported, "canonical keys are defined for simple graphs only");
  }
  if (n == 0) return "0:";
  CanonicalSearch search;
  search.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) search.adj[i][j] = false;
  for (const auto& [u, v] : g.edges()) search.adj[u][v] = search.adj[v][u] = true;
  search.run();

  std::string key = std::to_string(n) + ":";
  for (std::uint8_t b : search.best) key += b ? '1' : '0';
  return key;
}

Graph graph_from_canonical_key(const std::string& key) {
  std::size_t colon = key.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::Precondition, "malformed canonical key");
  }
  int n = std::stoi(key.substr(0, colon));
  std::string bits = key.substr(colon + 1);
  if (static_cast<int>(bits.size()) != n * (n - 1) / 2) {
    throw Error(ErrorKind::Precondition, "canonical key has the wrong bit count");
  }
  Graph g(n);
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if (bits[pos] == '1') g.add_edge(i, j);
    }
  }
  return g;
}

// Every connected graph on n >= 2 vertices has a non-cut vertex, so the
// classes on n vertices are exactly the canonical forms of (H + new vertex
// attached to a nonempty subset) over the classes H on n-1 vertices.
const std::vector<Graph>& connected_graphs(int n) {
  if (n < 1 || n > kEnumerationCap) {
    throw Error(ErrorKind::Precondition,
                "enumeration supports 1 <= n <= " + std::to_string(kEnumerationCap));
  }
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int k = 1; k <= n; ++k) {
    if (cache.count(k)) continue;
    std::vector<Graph> result;
    if (k == 1) {
      result.emplace_back(1);
    } else {
      std::set<std::string> keys;
      for (const Graph& h : cache.at(k - 1)) {
        for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
          Graph g(k);
          for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
          for (int i = 0; i < k - 1; ++i) {
            if (mask & (1u << i)) g.add_edge(i, k - 1);
          }
          keys.insert(canonical_key(g));
        }
      }
      result.reserve(keys.size());
      for (const std::string& key : keys) result.push_back(graph_from_canonical_key(key));
    }
    cache.emplace(k, std::move(result));
  }
  return cache.at(n);
}

}  // namespace edgedepth
