#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <curvsharp/graph.hpp>

namespace curvsharp {

/**
 * \brief Incomplete 2-ball around a center: its unit sphere S1 with internal adjacency,
 *        plus one adjacency pattern (a subset of S1) per second-sphere vertex.
 *
 * Edges inside the second sphere and beyond are deliberately absent; the curvature of the
 * center never depends on them. Patterns are bit masks over S1 indices 0..s1_count-1.
 */
struct TwoBall {
  int s1_count = 0;
  std::vector<std::uint64_t> s1_adj;    // one row per S1 vertex; bit j set iff v_i ~ v_j
  std::vector<std::uint64_t> patterns;  // one nonzero mask per S2 vertex

  bool operator==(const TwoBall&) const = default;
};

/** \brief Structural validity: symmetric loop-free S1 rows and nonempty in-range patterns. */
inline bool is_valid_ball(const TwoBall& b) {
  const int d = b.s1_count;
  if (d < 0 || d > 64 || static_cast<int>(b.s1_adj.size()) != d) return false;
  const std::uint64_t range = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  for (int i = 0; i < d; ++i) {
    if (b.s1_adj[i] & ~range) return false;
    if ((b.s1_adj[i] >> i) & 1u) return false;
    for (int j = 0; j < d; ++j)
      if (((b.s1_adj[i] >> j) & 1u) != ((b.s1_adj[j] >> i) & 1u)) return false;
  }
  for (std::uint64_t p : b.patterns)
    if (p == 0 || (p & ~range)) return false;
  return true;
}

inline int spherical_degree(const TwoBall& b, int i) { return std::popcount(b.s1_adj[i]); }

inline int pattern_count_at(const TwoBall& b, int i) {
  int c = 0;
  for (std::uint64_t p : b.patterns) c += (p >> i) & 1u;
  return c;
}

/** \brief Number of edges inside S1, i.e. the triangle count of the center. */
inline int center_triangles(const TwoBall& b) {
  int twice = 0;
  for (int i = 0; i < b.s1_count; ++i) twice += spherical_degree(b, i);
  return twice / 2;
}

/**
 * \brief True for balls of a 4-regular graph: center degree 4 and every S1 vertex of full
 *        degree 4, i.e. 1 + spherical degree + pattern occurrences = 4 on each row.
 */
inline bool is_quartic_ball(const TwoBall& b) {
  if (b.s1_count != 4 || !is_valid_ball(b)) return false;
  for (int i = 0; i < 4; ++i)
    if (1 + spherical_degree(b, i) + pattern_count_at(b, i) != 4) return false;
  return true;
}

/**
 * \brief Extracts the incomplete 2-ball of x. Works for any center; callers that require a
 *        4-regular ball must check is_quartic_ball.
 */
inline TwoBall extract(const Graph& g, int x) {
  const auto dist = bfs_distances(g, x);
  std::vector<int> s1, s2;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == 1) s1.push_back(v);
    if (dist[v] == 2) s2.push_back(v);
  }
  if (s1.size() > 64) throw std::domain_error("center degree above 64 is not supported");
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < s1.size(); ++i) index[s1[i]] = static_cast<int>(i);
  TwoBall b;
  b.s1_count = static_cast<int>(s1.size());
  b.s1_adj.assign(s1.size(), 0);
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (int u : g.neighbors(s1[i]))
      if (dist[u] == 1) b.s1_adj[i] |= std::uint64_t{1} << index[u];
  for (int z : s2) {
    std::uint64_t mask = 0;
    for (int u : g.neighbors(z))
      if (dist[u] == 1) mask |= std::uint64_t{1} << index[u];
    b.patterns.push_back(mask);
  }
  return b;
}

namespace detail {

/** Order key of a 4-bit pattern: its elements 1..4 ascending, zero padded, packed in a word. */
constexpr std::uint32_t pattern_key(unsigned mask) {
  std::uint32_t key = 0;
  int shift = 24;
  for (unsigned i = 0; i < 4; ++i)
    if ((mask >> i) & 1u) {
      key |= (i + 1) << shift;
      shift -= 8;
    }
  return key;
}

constexpr std::array<std::uint32_t, 16> kPatternKeys = [] {
  std::array<std::uint32_t, 16> keys{};
  for (unsigned m = 0; m < 16; ++m) keys[m] = pattern_key(m);
  return keys;
}();

constexpr std::array<std::pair<int, int>, 6> kSixPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/** Edge-presence-first order: a 1 sorts before a 0, so denser prefixes come first. */
inline bool six_less(const std::array<std::uint8_t, 6>& a, const std::array<std::uint8_t, 6>& b) {
  for (int k = 0; k < 6; ++k)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

inline bool key_list_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/** \brief The six S1 adjacency flags [a12, a13, a14, a23, a24, a34] of a quartic ball. */
inline std::array<std::uint8_t, 6> s1_six(const TwoBall& b) {
  if (b.s1_count != 4) throw std::domain_error("S1 flags require a 4-regular ball");
  std::array<std::uint8_t, 6> six{};
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = detail::kSixPairs[k];
    six[k] = (b.s1_adj[i] >> j) & 1u;
  }
  return six;
}

inline std::vector<std::uint64_t> six_to_rows(const std::array<std::uint8_t, 6>& six) {
  std::vector<std::uint64_t> rows(4, 0);
  for (int k = 0; k < 6; ++k)
    if (six[k]) {
      auto [i, j] = detail::kSixPairs[k];
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
  return rows;
}

/**
 * \brief Canonical representative of a quartic ball under the 24 relabellings of S1.
 *
 * The S1 flags are minimized edge-presence-first (which lands on one of the 11 standard
 * S1 forms) and the pattern list is sorted as ascending integer lists.
 */
inline TwoBall canonical_form(const TwoBall& b) {
  if (!is_quartic_ball(b)) throw std::domain_error("canonical form requires a valid 4-regular ball");
  std::array<int, 4> perm = {0, 1, 2, 3};
  bool have_best = false;
  std::array<std::uint8_t, 6> best_six{};
  std::vector<std::uint32_t> best_keys;
  std::vector<std::uint64_t> best_masks;
  std::vector<std::uint32_t> keys(b.patterns.size());
  std::vector<std::uint64_t> masks(b.patterns.size());
  do {
    std::array<std::uint8_t, 6> six{};
    for (int k = 0; k < 6; ++k) {
      auto [i, j] = detail::kSixPairs[k];
      six[k] = (b.s1_adj[perm[i]] >> perm[j]) & 1u;
    }
    for (std::size_t z = 0; z < b.patterns.size(); ++z) {
      unsigned mask = 0;
      for (int i = 0; i < 4; ++i) mask |= ((b.patterns[z] >> perm[i]) & 1u) << i;
      masks[z] = mask;
      keys[z] = detail::kPatternKeys[mask];
    }
    std::vector<std::size_t> order(masks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return keys[a] < keys[c]; });
    std::vector<std::uint32_t> sorted_keys(masks.size());
    std::vector<std::uint64_t> sorted_masks(masks.size());
    for (std::size_t z = 0; z < order.size(); ++z) {
      sorted_keys[z] = keys[order[z]];
      sorted_masks[z] = masks[order[z]];
    }
    const bool better =
        !have_best || detail::six_less(six, best_six) ||
        (six == best_six && detail::key_list_less(sorted_keys, best_keys));
    if (better) {
      have_best = true;
      best_six = six;
      best_keys = std::move(sorted_keys);
      best_masks = std::move(sorted_masks);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TwoBall{4, six_to_rows(best_six), std::move(best_masks)};
}

/** \brief Strict order on canonical quartic balls; use keys from canonical_form only. */
inline bool canonical_less(const TwoBall& a, const TwoBall& b) {
  const auto sa = s1_six(a);
  const auto sb = s1_six(b);
  if (sa != sb) return detail::six_less(sa, sb);
  std::vector<std::uint32_t> ka(a.patterns.size()), kb(b.patterns.size());
  for (std::size_t z = 0; z < a.patterns.size(); ++z) ka[z] = detail::kPatternKeys[a.patterns[z]];
  for (std::size_t z = 0; z < b.patterns.size(); ++z) kb[z] = detail::kPatternKeys[b.patterns[z]];
  return detail::key_list_less(ka, kb);
}

/** \brief Packs a canonical quartic ball into one word (6 flag bits, then pattern nibbles). */
inline std::uint64_t pack_canonical(const TwoBall& b) {
  const auto six = s1_six(b);
  if (b.patterns.size() > 12) throw std::domain_error("quartic ball has at most 12 patterns");
  std::uint64_t word = 0;
  for (int k = 0; k < 6; ++k) word = (word << 1) | six[k];
  word = (word << 4) | b.patterns.size();
  for (std::uint64_t p : b.patterns) word = (word << 4) | p;
  return word;
}

/** \brief The canonical S1 adjacency forms of the 11 isomorphism classes of graphs on 4 vertices. */
inline std::vector<std::array<std::uint8_t, 6>> standard_s1_forms() {
  std::set<std::array<std::uint8_t, 6>> forms;
  for (unsigned code = 0; code < 64; ++code) {
    std::array<std::uint8_t, 6> six{};
    for (int k = 0; k < 6; ++k) six[k] = (code >> k) & 1u;
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::array<std::uint8_t, 6> best{};
    bool have_best = false;
    const auto rows = six_to_rows(six);
    do {
      std::array<std::uint8_t, 6> candidate{};
      for (int k = 0; k < 6; ++k) {
        auto [i, j] = detail::kSixPairs[k];
        candidate[k] = (rows[perm[i]] >> perm[j]) & 1u;
      }
      if (!have_best || detail::six_less(candidate, best)) {
        have_best = true;
        best = candidate;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    forms.insert(best);
  }
  std::vector<std::array<std::uint8_t, 6>> out(forms.begin(), forms.end());
  std::sort(out.begin(), out.end(), detail::six_less);
  return out;
}

/**
 * \brief All non-isomorphic incomplete 2-balls of 4-regular graphs, canonical and sorted.
 *
 * Per S1 form, pattern multisets are generated in nonincreasing order and deduplicated
 * through canonical_form.
 */
inline std::vector<TwoBall> enumerate_quartic() {
  std::vector<TwoBall> out;
  for (const auto& six : standard_s1_forms()) {
    const auto rows = six_to_rows(six);
    std::array<int, 4> remaining{};
    for (int i = 0; i < 4; ++i) remaining[i] = 3 - std::popcount(rows[i]);

    std::vector<unsigned> masks_desc;  // nonempty patterns, largest order key first
    for (unsigned m = 1; m < 16; ++m) masks_desc.push_back(m);
    std::sort(masks_desc.begin(), masks_desc.end(),
              [](unsigned a, unsigned b) { return detail::kPatternKeys[a] > detail::kPatternKeys[b]; });

    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> chosen;
    auto dfs = [&](auto&& self, std::size_t first) -> void {
      if (remaining == std::array<int, 4>{0, 0, 0, 0}) {
        TwoBall candidate{4, rows, chosen};
        TwoBall canon = canonical_form(candidate);
        if (seen.insert(pack_canonical(canon)).second) out.push_back(std::move(canon));
        return;
      }
      for (std::size_t k = first; k < masks_desc.size(); ++k) {
        const unsigned m = masks_desc[k];
        bool fits = true;
        for (int i = 0; i < 4; ++i)
          if (((m >> i) & 1u) && remaining[i] == 0) fits = false;
        if (!fits) continue;
        for (int i = 0; i < 4; ++i)
          if ((m >> i) & 1u) --remaining[i];
        chosen.push_back(m);
        self(self, k);
        chosen.pop_back();
        for (int i = 0; i < 4; ++i)
          if ((m >> i) & 1u) ++remaining[i];
      }
    };
    dfs(dfs, 0);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/**
 * \brief Builds a quartic ball from list form: six 0/1 S1 flags and subsets of {1,...,4}.
 *
 * Enforces the row budget of 4-regular graphs: element i must occur in exactly
 * 3 - spherical_degree(v_i) subsets.
 */
inline TwoBall ball_from_lists(const std::vector<int>& s1_flags,
                               const std::vector<std::vector<int>>& subsets) {
  if (s1_flags.size() != 6) throw std::invalid_argument("expected six S1 adjacency flags");
  std::array<std::uint8_t, 6> six{};
  for (int k = 0; k < 6; ++k) {
    if (s1_flags[k] != 0 && s1_flags[k] != 1) throw std::invalid_argument("S1 flags must be 0 or 1");
    six[k] = static_cast<std::uint8_t>(s1_flags[k]);
  }
  TwoBall b{4, six_to_rows(six), {}};
  for (const auto& subset : subsets) {
    if (subset.empty()) throw std::invalid_argument("pattern subsets must be nonempty");
    std::uint64_t mask = 0;
    for (int e : subset) {
      if (e < 1 || e > 4) throw std::invalid_argument("pattern elements must lie in 1..4");
      if ((mask >> (e - 1)) & 1u) throw std::invalid_argument("pattern elements must be distinct");
      mask |= std::uint64_t{1} << (e - 1);
    }
    b.patterns.push_back(mask);
  }
  if (!is_quartic_ball(b))
    throw std::invalid_argument("pattern occurrences disagree with the 4-regular row budget");
  return b;
}

/** \brief Serializes a quartic ball as {"s1":[...],"s1s2":[[...],...]} with ascending subsets. */
inline std::string ball_to_json(const TwoBall& b) {
  if (b.s1_count != 4) throw std::domain_error("JSON form requires a 4-regular ball");
  const auto six = s1_six(b);
  std::string out = "{\"s1\":[";
  for (int k = 0; k < 6; ++k) {
    if (k) out += ',';
    out += six[k] ? '1' : '0';
  }
  out += "],\"s1s2\":[";
  for (std::size_t z = 0; z < b.patterns.size(); ++z) {
    if (z) out += ',';
    out += '[';
    bool first = true;
    for (int i = 0; i < 4; ++i)
      if ((b.patterns[z] >> i) & 1u) {
        if (!first) out += ',';
        out += static_cast<char>('1' + i);
        first = false;
      }
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace curvsharp
