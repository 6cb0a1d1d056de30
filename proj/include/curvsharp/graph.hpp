#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvsharp {

/** \brief Undirected simple graph on vertices 0..n-1; adjacency stored as a packed bit matrix. */
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  int vertex_count() const { return n_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row(v)[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  /** \brief Edges as (u, v) pairs with u < v, sorted. */
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int common_neighbor_count(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row(u)[w] & row(v)[w]);
    return c;
  }

  /** \brief Appends an isolated vertex and returns its index. */
  int add_vertex() {
    Graph grown(n_ + 1);
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < words_; ++w) grown.row(v)[w] = row(v)[w];
    *this = std::move(grown);
    return n_ - 1;
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  }

  std::uint64_t* row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/** \brief In/spherical/out degrees of a vertex relative to a root; they sum to its degree. */
struct RootedDegrees {
  int in = 0;
  int sph = 0;
  int out = 0;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
  return g;
}

/** \brief BFS distances from x; -1 marks unreachable vertices. */
inline std::vector<int> bfs_distances(const Graph& g, int x) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (x < 0 || x >= g.vertex_count()) throw std::invalid_argument("vertex index out of range");
  dist[x] = 0;
  std::vector<int> frontier{x};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int u : g.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          next.push_back(u);
        }
    frontier = std::move(next);
  }
  return dist;
}

inline int distance(const Graph& g, int x, int y) { return bfs_distances(g, x)[y]; }

/** \brief Vertices at distance exactly r from x, ascending. */
inline std::vector<int> sphere(const Graph& g, int x, int r) {
  std::vector<int> out;
  auto dist = bfs_distances(g, x);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == r) out.push_back(v);
  return out;
}

/** \brief Vertices at distance at most r from x, ascending. */
inline std::vector<int> ball(const Graph& g, int x, int r) {
  std::vector<int> out;
  auto dist = bfs_distances(g, x);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0 && dist[v] <= r) out.push_back(v);
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

inline int diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw std::domain_error("diameter of an empty graph");
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d < 0) throw std::domain_error("diameter of a disconnected graph");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

inline RootedDegrees rooted_degrees(const Graph& g, int x, int y) {
  auto dist = bfs_distances(g, x);
  if (dist[y] < 0) throw std::domain_error("vertex unreachable from the root");
  RootedDegrees r;
  for (int u : g.neighbors(y)) {
    if (dist[u] > dist[y])
      ++r.out;
    else if (dist[u] == dist[y])
      ++r.sph;
    else
      ++r.in;
  }
  return r;
}

inline int triangles_at_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw std::invalid_argument("triangle count requires an edge");
  return g.common_neighbor_count(u, v);
}

inline int triangles_at_vertex(const Graph& g, int x) {
  int twice = 0;
  for (int y : g.neighbors(x)) twice += g.common_neighbor_count(x, y);
  return twice / 2;  // every triangle at x is counted on both of its x-edges
}

/** \brief True iff all neighbors of x have the same out-degree relative to x. */
inline bool is_s1_out_regular(const Graph& g, int x) {
  auto dist = bfs_distances(g, x);
  int expected = -1;
  for (int y : g.neighbors(x)) {
    int out = 0;
    for (int u : g.neighbors(y))
      if (dist[u] == 2) ++out;
    if (expected < 0)
      expected = out;
    else if (out != expected)
      return false;
  }
  return true;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph hypercube_graph(int d) {
  if (d < 0 || d > 24) throw std::invalid_argument("hypercube dimension out of range");
  Graph g(1 << d);
  for (int u = 0; u < (1 << d); ++u)
    for (int b = 0; b < d; ++b)
      if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
  return g;
}

/** \brief Generator of a dihedral group of order 2n: the rotation r^power, or the reflection s*r^power. */
struct DihedralGenerator {
  bool reflection = false;
  int power = 0;
};

/**
 * \brief Cayley graph of the dihedral group of the given even order.
 *
 * Elements are encoded as 0..n-1 for r^i and n..2n-1 for s*r^i, with s*r*s = r^-1.
 * The generator set must be inverse-closed and free of the identity.
 */
inline Graph cayley_dihedral(int order, const std::vector<DihedralGenerator>& generators) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral group order must be even and positive");
  const int n = order / 2;
  std::vector<DihedralGenerator> gens;
  for (auto g : generators) {
    g.power = ((g.power % n) + n) % n;
    if (!g.reflection && g.power == 0) throw std::invalid_argument("identity is not a valid generator");
    bool seen = false;
    for (const auto& h : gens) seen = seen || (h.reflection == g.reflection && h.power == g.power);
    if (!seen) gens.push_back(g);
  }
  for (const auto& g : gens) {
    if (g.reflection) continue;  // reflections are involutions
    const int inv = (n - g.power) % n;
    bool closed = false;
    for (const auto& h : gens) closed = closed || (!h.reflection && h.power == inv);
    if (!closed) throw std::invalid_argument("generator set must be closed under inverses");
  }
  Graph graph(order);
  for (int i = 0; i < n; ++i) {
    for (const auto& g : gens) {
      // right multiplication: r^i * r^p = r^(i+p), r^i * s r^p = s r^(p-i),
      //                       s r^i * r^p = s r^(i+p), s r^i * s r^p = r^(p-i)
      int rot_to = g.reflection ? n + ((g.power - i) % n + n) % n : (i + g.power) % n;
      graph.add_edge(i, rot_to);
      int ref_to = g.reflection ? ((g.power - i) % n + n) % n : n + (i + g.power) % n;
      graph.add_edge(n + i, ref_to);
    }
  }
  return graph;
}

/** \brief One of the eight reference graphs: K5, O, K3xK3, K44, C10, D12, D14, Q4. */
inline Graph named_graph(const std::string& name) {
  if (name == "K5") return complete_graph(5);
  if (name == "O") {
    Graph g(6);  // octahedron = K_{2,2,2} with antipodal pairs {i, i+3}
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (v - u != 3) g.add_edge(u, v);
    return g;
  }
  if (name == "K3xK3") {
    Graph g(9);  // Cartesian square of K3; vertex (i, j) has index 3i + j
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
          g.add_edge(3 * i + j, 3 * i + k);
          g.add_edge(3 * j + i, 3 * k + i);
        }
    return g;
  }
  if (name == "K44") {
    Graph g(8);
    for (int u = 0; u < 4; ++u)
      for (int v = 4; v < 8; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "C10") {
    Graph g(10);  // crown: complete bipartite on {0..4}, {5..9} minus the matching i ~ 5+i
    for (int u = 0; u < 5; ++u)
      for (int v = 5; v < 10; ++v)
        if (v - u != 5) g.add_edge(u, v);
    return g;
  }
  if (name == "D12") return cayley_dihedral(12, {{false, 3}, {true, 0}, {true, 2}, {true, 4}});
  if (name == "D14") return cayley_dihedral(14, {{true, 0}, {true, 1}, {true, 4}, {true, 6}});
  if (name == "Q4") return hypercube_graph(4);
  throw std::invalid_argument("unknown graph name: " + name);
}

/**
 * \brief Reads the plain text edge-list format: a "n m" header line followed by m "u v" lines.
 *
 * '#' starts a comment that runs to the end of the line.
 */
inline Graph read_edge_list(std::istream& in) {
  std::vector<long long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long value = 0;
    while (fields >> value) numbers.push_back(value);
    if (!fields.eof()) throw std::invalid_argument("edge list contains a non-numeric token");
  }
  if (numbers.size() < 2) throw std::invalid_argument("edge list is missing its header line");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 0 || n > 1000000 || m < 0) throw std::invalid_argument("edge list header out of range");
  if (static_cast<long long>(numbers.size()) != 2 + 2 * m)
    throw std::invalid_argument("edge list length disagrees with its header");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    const long long u = numbers[2 + 2 * e];
    const long long v = numbers[3 + 2 * e];
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace curvsharp
