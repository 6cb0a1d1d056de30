#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <curvsharp/graph.hpp>

namespace curvsharp {

namespace detail {

using Partition = std::vector<std::vector<int>>;  // ordered cells of vertices

/** One-dimensional color refinement: split cells by neighbor counts until equitable. */
inline void refine_partition(const Graph& g, Partition& cells) {
  const int n = g.vertex_count();
  std::vector<int> cell_of(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int u : g.neighbors(v)) ++sig[cell_of[u]];
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    cells = std::move(next);
  }
}

/** Packed lower-triangle adjacency of g under the position map orig: position -> vertex. */
inline std::vector<std::uint64_t> relabelled_bits(const Graph& g, const std::vector<int>& orig) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t k = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++k)
      if (g.adjacent(orig[p], orig[q])) bits[k >> 6] |= std::uint64_t{1} << (k & 63);
  return bits;
}

}  // namespace detail

/**
 * \brief Canonical vertex relabeling by individualization and refinement.
 *
 * Returns the map vertex -> position minimizing the relabelled adjacency bits over
 * all refinement leaves. Optional colors constrain the result: only relabelings
 * preserving color classes compete, so two colored graphs relabel identically iff
 * a color-preserving isomorphism exists.
 */
inline std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors = {}) {
  const int n = g.vertex_count();
  if (!colors.empty() && colors.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("one color per vertex required");

  detail::Partition start;
  if (colors.empty()) {
    if (n > 0) {
      start.emplace_back(n);
      for (int v = 0; v < n; ++v) start[0][v] = v;
    }
  } else {
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[colors[v]].push_back(v);
    for (auto& [color, members] : classes) start.push_back(std::move(members));
  }

  std::vector<std::uint64_t> best_bits;
  std::vector<int> best_orig;
  bool have_best = false;

  auto descend = [&](auto&& self, detail::Partition cells) -> void {
    detail::refine_partition(g, cells);
    std::size_t branch = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        branch = c;
        break;
      }
    if (branch == cells.size()) {
      std::vector<int> orig(n);
      for (std::size_t p = 0; p < cells.size(); ++p) orig[p] = cells[p][0];
      auto bits = detail::relabelled_bits(g, orig);
      if (!have_best || bits < best_bits) {
        best_bits = std::move(bits);
        best_orig = std::move(orig);
        have_best = true;
      }
      return;
    }
    for (int v : cells[branch]) {
      detail::Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < branch; ++c) child.push_back(cells[c]);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cells[branch])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      for (std::size_t c = branch + 1; c < cells.size(); ++c) child.push_back(cells[c]);
      self(self, std::move(child));
    }
  };
  descend(descend, std::move(start));

  std::vector<int> labeling(n);
  for (int p = 0; p < n; ++p) labeling[best_orig[p]] = p;
  return labeling;
}

/** \brief Copy of g with vertex v renamed to labeling[v]. */
inline Graph apply_labeling(const Graph& g, const std::vector<int>& labeling) {
  if (labeling.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("labeling size mismatch");
  Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(labeling[u], labeling[v]);
  return out;
}

inline Graph canonical_graph(const Graph& g, const std::vector<int>& colors = {}) {
  return apply_labeling(g, canonical_labeling(g, colors));
}

/** \brief Canonical edge list: the edges of the canonical relabeling, sorted. */
inline std::vector<std::pair<int, int>> canonical_label(const Graph& g) {
  return canonical_graph(g).edges();
}

/**
 * \brief Serialized canonical form usable as a dedup key.
 *
 * Covers vertex count, color class sizes in color order, and the canonical
 * adjacency; equal keys mean color-preserving isomorphic inputs.
 */
inline std::string graph_key(const Graph& g, const std::vector<int>& colors = {}) {
  const int n = g.vertex_count();
  std::string key = std::to_string(n);
  if (!colors.empty()) {
    std::map<int, int> class_sizes;
    for (int c : colors) ++class_sizes[c];
    for (const auto& [color, size] : class_sizes)
      key += "," + std::to_string(color) + ":" + std::to_string(size);
  }
  key += "|";
  const Graph c = canonical_graph(g, colors);
  for (const auto& [u, v] : c.edges())
    key += std::to_string(u) + "-" + std::to_string(v) + ";";
  return key;
}

/** \brief Isomorphism test by canonical form comparison. */
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace curvsharp
