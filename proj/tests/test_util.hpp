#pragma once

#include <curvsharp/graph.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace testutil {

using curvsharp::Graph;

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/** Pairing model with rejection; empty when no simple connected d-regular graph shows up. */
inline std::optional<Graph> random_regular_graph(int n, int d, std::mt19937& rng) {
  if (d < 0 || d >= n || (n * d) % 2 != 0) return std::nullopt;
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
      const int u = stubs[i];
      const int v = stubs[i + 1];
      if (u == v || g.adjacent(u, v))
        simple = false;
      else
        g.add_edge(u, v);
    }
    if (simple && curvsharp::is_connected(g)) return g;
  }
  return std::nullopt;
}

/** Exhaustive isomorphism test; intended for n <= 8. */
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; match && u < n; ++u)
      for (int v = u + 1; match && v < n; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph relabelled(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace testutil
