#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <curvsharp/canonical.hpp>
#include <curvsharp/catalog.hpp>
#include <curvsharp/curvature.hpp>
#include <curvsharp/graph.hpp>
#include <curvsharp/two_ball.hpp>

namespace curvsharp {

struct SearchOptions {
  int max_vertices = 40;
  bool rigidity_prune = true;
  int jobs = 1;  // worker threads; values below 1 mean one per available core
};

struct SearchOutcome {
  std::vector<Graph> completed_graphs;  // canonically labeled, deduplicated, sorted
  long long nodes_explored = 0;
  std::map<std::string, long long> pruned_by;
  bool truncated = false;
};

/**
 * \brief A graph under construction: no degree may exceed 4.
 *
 * A vertex is saturated once it reaches degree 4; when its whole closed
 * neighborhood is saturated its 2-ball can no longer change.
 */
struct PartialGraph {
  Graph g;

  bool saturated(int v) const { return g.degree(v) == 4; }

  bool ball_final(int v) const {
    if (!saturated(v)) return false;
    for (int y : g.neighbors(v))
      if (!saturated(y)) return false;
    return true;
  }

  /** Lowest-indexed vertex whose ball is still mutable, or -1 when none is. */
  int lowest_unfinished() const {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!ball_final(v)) return v;
    return -1;
  }
};

/** \brief Host graph realizing a ball: center 0, first sphere 1..d, second sphere after. */
inline Graph seed_graph(const TwoBall& b) {
  if (!is_valid_ball(b)) throw std::invalid_argument("malformed ball");
  const int d = b.s1_count;
  Graph g(1 + d + static_cast<int>(b.patterns.size()));
  for (int i = 0; i < d; ++i) g.add_edge(0, 1 + i);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if ((b.s1_adj[i] >> j) & 1u) g.add_edge(1 + i, 1 + j);
  for (std::size_t z = 0; z < b.patterns.size(); ++z)
    for (int i = 0; i < d; ++i)
      if ((b.patterns[z] >> i) & 1u) g.add_edge(1 + i, 1 + d + static_cast<int>(z));
  return g;
}

/**
 * \brief Budget prune for triangle-free completions rooted at an all-pairs ball.
 *
 * With the root ball final and of the all-pairs type, any completion gives each
 * root neighbor a final ball whose second sphere holds three distinct pairs with
 * a common element; the only such catalog balls force every third-sphere vertex
 * to at least three in-edges. The six second-sphere vertices carry two in-edges
 * each, so they can supply at most 2 - (spherical degree) out-edges apiece. Cut
 * states whose in-edge demand exceeds that supply.
 */
inline bool s3_budget_check(const PartialGraph& pg, int root) {
  const Graph& g = pg.g;
  if (!pg.ball_final(root)) return true;
  const TwoBall ball = extract(g, root);
  if (!is_quartic_ball(ball)) return true;
  if (classify_sharp(ball) != BallTypeId{4, 5}) return true;

  const auto dist = bfs_distances(g, root);
  int supply = 0;
  int demand = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == 2) {
      int spherical = 0;
      for (int u : g.neighbors(v))
        if (dist[u] == 2) ++spherical;
      supply += 2 - spherical;
    } else if (dist[v] == 3) {
      int in = 0;
      for (int u : g.neighbors(v))
        if (dist[u] == 2) ++in;
      demand += std::max(3, in);
    }
  }
  return demand <= supply;
}

/**
 * \brief Exact test: can the partial graph be completed to the 4-cube?
 *
 * Looks for an injection into the 4-cube mapping edges to edges; a saturated
 * vertex must map its full cube neighborhood onto its current neighbors, while
 * open vertices may sit next to other images.
 */
inline bool embeds_in_hypercube(const PartialGraph& pg) {
  const Graph& g = pg.g;
  const int n = g.vertex_count();
  if (n == 0) return true;
  if (n > 16) return false;
  const auto dist = bfs_distances(g, 0);
  for (int v = 0; v < n; ++v)
    if (dist[v] < 0 || dist[v] > 4) return false;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });

  std::vector<int> image(n, -1);
  std::array<bool, 16> used{};
  auto compatible = [&](int v, int c) {
    for (int w = 0; w < n; ++w) {
      if (image[w] < 0 || w == v) continue;
      const bool partial_edge = g.adjacent(v, w);
      const bool cube_edge = std::popcount(static_cast<unsigned>(image[w] ^ c)) == 1;
      if (partial_edge && !cube_edge) return false;
      if (!partial_edge && cube_edge && (pg.saturated(v) || pg.saturated(w))) return false;
    }
    return true;
  };
  auto place = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    const int v = order[k];
    int anchor = -1;
    for (int w : g.neighbors(v))
      if (image[w] >= 0) {
        anchor = image[w];
        break;
      }
    std::array<int, 16> candidates;
    int count = 0;
    if (anchor >= 0)
      for (int bit : {1, 2, 4, 8}) candidates[count++] = anchor ^ bit;
    else
      for (int c = 0; c < 16; ++c) candidates[count++] = c;
    for (int i = 0; i < count; ++i) {
      const int c = candidates[i];
      if (used[c] || !compatible(v, c)) continue;
      image[v] = c;
      used[c] = true;
      if (self(self, k + 1)) return true;
      image[v] = -1;
      used[c] = false;
    }
    return false;
  };
  // the cube is vertex transitive, so the first placement is free
  image[order[0]] = 0;
  used[0] = true;
  return place(place, 1);
}

namespace detail {

inline const std::array<const char*, 6>& prune_rule_names() {
  static const std::array<const char*, 6> names = {"ball",     "budget",   "distance",
                                                   "isomorph", "rigidity", "triangle"};
  return names;
}

class Searcher {
 public:
  Searcher(int c1, const SearchOptions& opts)
      : c1_(c1), dmax_(16 / (4 + c1)), opts_(opts) {}

  void run(Graph seed) {
    PartialGraph root{std::move(seed)};
    if (!root_admissible(root)) return;
    if (opts_.jobs <= 1) {
      dfs(root);
      return;
    }
    // grow a frontier wide enough to feed the workers, then split
    std::deque<PartialGraph> frontier;
    frontier.push_back(std::move(root));
    const std::size_t want = static_cast<std::size_t>(opts_.jobs) * 8;
    while (!frontier.empty() && frontier.size() < want) {
      PartialGraph node = std::move(frontier.front());
      frontier.pop_front();
      for (auto& child : expand(node)) frontier.push_back(std::move(child));
    }
    std::vector<PartialGraph> work(std::make_move_iterator(frontier.begin()),
                                   std::make_move_iterator(frontier.end()));
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < work.size();) dfs(work[i]);
    };
    std::vector<std::thread> pool;
    const int threads = static_cast<int>(std::min<std::size_t>(opts_.jobs, work.size()));
    for (int i = 0; i < threads; ++i) pool.emplace_back(drain);
    for (auto& worker : pool) worker.join();
  }

  SearchOutcome outcome() const {
    SearchOutcome out;
    out.nodes_explored = nodes_.load();
    out.truncated = truncated_.load();
    for (std::size_t k = 0; k < prune_rule_names().size(); ++k)
      out.pruned_by[prune_rule_names()[k]] = pruned_[k].load();
    for (const auto& [key, g] : solutions_) out.completed_graphs.push_back(g);
    std::sort(out.completed_graphs.begin(), out.completed_graphs.end(),
              [](const Graph& a, const Graph& b) {
                if (a.vertex_count() != b.vertex_count())
                  return a.vertex_count() < b.vertex_count();
                return a.edges() < b.edges();
              });
    return out;
  }

 private:
  enum Rule { kBall = 0, kBudget, kDistance, kIsomorph, kRigidity, kTriangle };

  void bump(Rule rule) { pruned_[rule].fetch_add(1, std::memory_order_relaxed); }

  void dfs(const PartialGraph& node) {
    for (const PartialGraph& child : expand(node)) dfs(child);
  }

  std::vector<PartialGraph> expand(const PartialGraph& node) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    const int owner = node.lowest_unfinished();
    if (owner < 0) {
      emit(node.g);
      return {};
    }
    int t = owner;
    if (node.saturated(owner))
      for (int y : node.g.neighbors(owner))
        if (!node.saturated(y)) {
          t = y;
          break;
        }

    std::vector<PartialGraph> kids;
    std::set<std::string> seen;
    auto consider = [&](PartialGraph child, int a, int b) {
      if (!edge_checks(child, a, b)) {
        bump(kTriangle);
        return;
      }
      if (!ball_checks(child, a, b)) {
        bump(kBall);
        return;
      }
      const DistanceInfo info = distance_info(child);
      if (info.violation) {
        bump(kDistance);
        return;
      }
      if (info.forced_far && opts_.rigidity_prune) {
        bump(kRigidity);
        if (embeds_in_hypercube(child)) emit(hypercube_graph(4));
        return;
      }
      if (c1_ == 0 && !s3_budget_check(child, 0)) {
        bump(kBudget);
        return;
      }
      if (!seen.insert(graph_key(child.g)).second) {
        bump(kIsomorph);
        return;
      }
      kids.push_back(std::move(child));
    };

    const int n = node.g.vertex_count();
    for (int u = 0; u < n; ++u) {
      if (u == t || node.saturated(u) || node.g.adjacent(t, u)) continue;
      PartialGraph child = node;
      child.g.add_edge(t, u);
      consider(std::move(child), t, u);
    }
    if (n < opts_.max_vertices) {
      PartialGraph child = node;
      const int fresh = child.g.add_vertex();
      child.g.add_edge(t, fresh);
      consider(std::move(child), t, fresh);
    } else {
      truncated_.store(true, std::memory_order_relaxed);
    }
    return kids;
  }

  bool root_admissible(const PartialGraph& root) {
    for (const auto& [u, v] : root.g.edges())
      if (!edge_ok(root, u, v)) {
        bump(kTriangle);
        return false;
      }
    for (int v = 0; v < root.g.vertex_count(); ++v)
      if (root.ball_final(v) && !final_ball_ok(root.g, v)) {
        bump(kBall);
        return false;
      }
    if (distance_info(root).violation) {
      bump(kDistance);
      return false;
    }
    if (c1_ == 0 && !s3_budget_check(root, 0)) {
      bump(kBudget);
      return false;
    }
    return true;
  }

  /** Triangle counts around a changed edge: never above the class constant, exact
      on final edges, and still reachable elsewhere. */
  bool edge_checks(const PartialGraph& pg, int a, int b) const {
    for (int x : {a, b})
      for (int y : pg.g.neighbors(x))
        if (!edge_ok(pg, x, y)) return false;
    return true;
  }

  bool edge_ok(const PartialGraph& pg, int x, int y) const {
    const Graph& g = pg.g;
    const int cn = g.common_neighbor_count(x, y);
    if (cn > c1_) return false;
    const int deficit = c1_ - cn;
    if (deficit == 0) return true;
    const int free_x = 4 - g.degree(x);
    const int free_y = 4 - g.degree(y);
    if (deficit > free_x + free_y) return false;
    if (free_x == 0 || free_y == 0) {
      const int fixed = free_x == 0 ? x : y;
      const int loose = free_x == 0 ? y : x;
      // every missing triangle needs a fresh edge from the open endpoint to an
      // open neighbor of the saturated one
      if (deficit > 4 - g.degree(loose)) return false;
      int candidates = 0;
      for (int w : g.neighbors(fixed))
        if (w != loose && !g.adjacent(w, loose) && g.degree(w) < 4) ++candidates;
      if (deficit > candidates) return false;
    }
    return true;
  }

  bool ball_checks(const PartialGraph& pg, int a, int b) const {
    std::set<int> affected{a, b};
    for (int y : pg.g.neighbors(a)) affected.insert(y);
    for (int y : pg.g.neighbors(b)) affected.insert(y);
    for (int v : affected)
      if (pg.ball_final(v) && !final_ball_ok(pg.g, v)) return false;
    return true;
  }

  bool final_ball_ok(const Graph& g, int v) const {
    const TwoBall ball = extract(g, v);
    if (!is_quartic_ball(ball)) return false;
    const auto& index = sharp_ball_index();
    const auto hit = index.find(pack_canonical(canonical_form(ball)));
    return hit != index.end() && hit->second.edge_triangles() == c1_;
  }

  struct DistanceInfo {
    bool violation = false;
    bool forced_far = false;
  };

  /** Distance-from-seed-center lower bounds: paths may only shorten through open
      vertices, so min(current distance, nearest open + 1) survives completion. */
  DistanceInfo distance_info(const PartialGraph& pg) const {
    const auto dist = bfs_distances(pg.g, 0);
    int nearest_open = INT_MAX - 1;
    for (int v = 0; v < pg.g.vertex_count(); ++v)
      if (!pg.saturated(v)) nearest_open = std::min(nearest_open, dist[v]);
    DistanceInfo info;
    for (int v = 0; v < pg.g.vertex_count(); ++v) {
      const int bound = std::min(dist[v], nearest_open + 1);
      if (bound > dmax_) info.violation = true;
      if (bound >= 4 && dmax_ == 4) info.forced_far = true;
    }
    return info;
  }

  void emit(const Graph& g) {
    if (!solution_ok(g)) throw std::logic_error("search produced an inadmissible graph");
    Graph canon = canonical_graph(g);
    std::string key = std::to_string(canon.vertex_count());
    for (const auto& [u, v] : canon.edges())
      key += "," + std::to_string(u) + "-" + std::to_string(v);
    const std::lock_guard<std::mutex> lock(emit_mutex_);
    solutions_.try_emplace(std::move(key), std::move(canon));
  }

  /** Emitted graphs are re-verified from scratch, independent of the search path. */
  bool solution_ok(const Graph& g) const {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) != 4) return false;
    for (const auto& [u, v] : g.edges())
      if (g.common_neighbor_count(u, v) != c1_) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const TwoBall ball = extract(g, v);
      if (!k_infinity(ball).sharp) return false;
      if (!classify_sharp(ball)) return false;
    }
    return true;
  }

  int c1_;
  int dmax_;
  SearchOptions opts_;
  std::atomic<long long> nodes_{0};
  std::atomic<bool> truncated_{false};
  std::array<std::atomic<long long>, 6> pruned_{};
  std::mutex emit_mutex_;
  std::map<std::string, Graph> solutions_;
};

}  // namespace detail

/**
 * \brief Exhaustively complete a sharp seed ball into every connected quartic
 *        graph that is curvature sharp at all vertices.
 */
inline SearchOutcome search_from_seed(BallTypeId seed, SearchOptions opts = {}) {
  if (opts.max_vertices < 17)
    throw std::invalid_argument("max_vertices below 17 could exclude valid completions");
  const SharpBallRecord& rec = sharp_ball(seed);
  SearchOptions normalized = opts;
  if (normalized.jobs < 1)
    normalized.jobs = std::max(1u, std::thread::hardware_concurrency());
  detail::Searcher searcher(rec.type.edge_triangles(), normalized);
  searcher.run(seed_graph(rec.ball));
  return searcher.outcome();
}

}  // namespace curvsharp
