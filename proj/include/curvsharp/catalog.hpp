#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <curvsharp/curvature.hpp>
#include <curvsharp/graph.hpp>
#include <curvsharp/two_ball.hpp>

namespace curvsharp {

/**
 * \brief Identifier of a curvature-sharp ball class, written family.index.
 *
 * The family encodes the constant edge-triangle count: family f means every
 * edge at the center lies in exactly 4 - f triangles.
 */
struct BallTypeId {
  int family = 0;
  int index = 0;

  auto operator<=>(const BallTypeId&) const = default;

  std::string label() const { return std::to_string(family) + "." + std::to_string(index); }

  int edge_triangles() const { return 4 - family; }

  static BallTypeId from_label(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size())
      throw std::invalid_argument("ball type must look like 4.10");
    BallTypeId id;
    try {
      std::size_t used = 0;
      id.family = std::stoi(text, &used);
      if (used != dot) throw std::invalid_argument("");
      id.index = std::stoi(text.substr(dot + 1), &used);
      if (used != text.size() - dot - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("ball type must look like 4.10");
    }
    return id;
  }
};

/** \brief One row of the ball census: an S1 structure with its ball counts. */
struct S1StructureCensusRow {
  std::array<std::uint8_t, 6> six;
  bool s1_out_regular = false;
  int ball_count = 0;
  int nonneg_count = 0;
};

/** \brief A curvature-sharp ball class: identifier, canonical ball, curvature. */
struct SharpBallRecord {
  BallTypeId type;
  TwoBall ball;  // canonical form
  double curvature = 0;
};

/** \brief Census of the 365 quartic balls by S1 structure, in standard row order. */
inline const std::vector<S1StructureCensusRow>& table1() {
  static const std::vector<S1StructureCensusRow> rows = {
      {{0, 0, 0, 0, 0, 0}, true, 93, 46},  {{1, 0, 0, 0, 0, 0}, false, 120, 55},
      {{1, 0, 0, 0, 0, 1}, true, 40, 24},  {{1, 1, 0, 0, 0, 0}, false, 55, 31},
      {{1, 1, 1, 0, 0, 0}, false, 8, 8},   {{1, 1, 0, 1, 0, 0}, false, 10, 4},
      {{1, 1, 0, 0, 1, 0}, false, 24, 21}, {{1, 1, 0, 0, 1, 1}, true, 7, 7},
      {{1, 1, 1, 1, 0, 0}, false, 5, 5},   {{1, 1, 1, 1, 1, 0}, false, 2, 2},
      {{1, 1, 1, 1, 1, 1}, true, 1, 1}};
  return rows;
}

/** \brief The 22 classes of quartic balls that are curvature sharp at the center. */
inline const std::vector<SharpBallRecord>& table2() {
  static const std::vector<SharpBallRecord> rows = [] {
    struct Row {
      BallTypeId type;
      std::vector<int> six;
      std::vector<std::vector<int>> subsets;
    };
    const std::vector<Row> raw = {
        {{1, 1}, {1, 1, 1, 1, 1, 1}, {}},
        {{2, 1}, {1, 1, 0, 0, 1, 1}, {{1, 2, 3, 4}}},
        {{2, 2}, {1, 1, 0, 0, 1, 1}, {{1, 2, 3}, {4}}},
        {{2, 3}, {1, 1, 0, 0, 1, 1}, {{1, 2}, {3}, {4}}},
        {{2, 4}, {1, 1, 0, 0, 1, 1}, {{1, 4}, {2}, {3}}},
        {{2, 5}, {1, 1, 0, 0, 1, 1}, {{1}, {2}, {3}, {4}}},
        {{2, 6}, {1, 1, 0, 0, 1, 1}, {{1, 2}, {3, 4}}},
        {{2, 7}, {1, 1, 0, 0, 1, 1}, {{1, 4}, {2, 3}}},
        {{3, 1}, {1, 0, 0, 0, 0, 1}, {{1, 2, 3, 4}, {1, 3}, {2, 4}}},
        {{3, 2}, {1, 0, 0, 0, 0, 1}, {{1, 3}, {1, 3}, {2, 4}, {2, 4}}},
        {{3, 3}, {1, 0, 0, 0, 0, 1}, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}},
        {{3, 4}, {1, 0, 0, 0, 0, 1}, {{1, 2, 3, 4}, {1, 2, 3, 4}}},
        {{4, 1}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1}, {2}, {3}, {4}}},
        {{4, 2}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2}, {3}, {4}}},
        {{4, 3}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3}, {4}}},
        {{4, 4}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}},
        {{4, 5}, {0, 0, 0, 0, 0, 0}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
        {{4, 6}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3}, {1, 2, 3}, {1, 4}, {2, 4}, {3, 4}}},
        {{4, 7}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2}, {3, 4}}},
        {{4, 8}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2, 3}, {1, 2, 4}, {3, 4}}},
        {{4, 9}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
        {{4, 10}, {0, 0, 0, 0, 0, 0}, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}}}};
    std::vector<SharpBallRecord> out;
    for (const Row& r : raw) {
      SharpBallRecord rec;
      rec.type = r.type;
      rec.ball = canonical_form(ball_from_lists(r.six, r.subsets));
      rec.curvature = 2.0 + r.type.edge_triangles() / 2.0;
      out.push_back(std::move(rec));
    }
    return out;
  }();
  return rows;
}

/** \brief Lookup from packed canonical ball form to sharp type, for fast membership tests. */
inline const std::map<std::uint64_t, BallTypeId>& sharp_ball_index() {
  static const std::map<std::uint64_t, BallTypeId> index = [] {
    std::map<std::uint64_t, BallTypeId> out;
    for (const auto& rec : table2()) out.emplace(pack_canonical(rec.ball), rec.type);
    if (out.size() != table2().size()) throw std::logic_error("sharp ball classes collide");
    return out;
  }();
  return index;
}

/** \brief The catalog record for one type identifier. */
inline const SharpBallRecord& sharp_ball(BallTypeId id) {
  for (const auto& rec : table2())
    if (rec.type == id) return rec;
  throw std::invalid_argument("unknown ball type " + id.label());
}

/** \brief Sharp type of a quartic ball, or none when its center is not curvature sharp. */
inline std::optional<BallTypeId> classify_sharp(const TwoBall& b) {
  const TwoBall canonical = canonical_form(b);
  const auto& index = sharp_ball_index();
  const auto hit = index.find(pack_canonical(canonical));
  if (hit != index.end()) return hit->second;
  if (is_curvature_sharp(canonical))
    throw std::logic_error("curvature sharp ball missing from the catalog");
  return std::nullopt;
}

/** \brief Reference data for one globally curvature sharp graph. */
struct NamedGraphFacts {
  std::string name;
  int vertex_count = 0;
  double curvature = 0;
  int diameter = 0;
  BallTypeId ball_type;
};

/** \brief The eight connected quartic graphs that are curvature sharp everywhere. */
inline const std::vector<NamedGraphFacts>& named_graph_facts() {
  static const std::vector<NamedGraphFacts> facts = {
      {"K5", 5, 3.5, 1, {1, 1}},    {"O", 6, 3.0, 2, {2, 1}},
      {"K3xK3", 9, 2.5, 2, {3, 3}}, {"K44", 8, 2.0, 2, {4, 10}},
      {"C10", 10, 2.0, 3, {4, 9}},  {"D12", 12, 2.0, 3, {4, 6}},
      {"D14", 14, 2.0, 3, {4, 5}},  {"Q4", 16, 2.0, 4, {4, 5}}};
  return facts;
}

class verification_error : public std::runtime_error {
 public:
  verification_error(const std::string& graph, const std::string& field, const std::string& detail)
      : std::runtime_error(graph + ": " + field + " mismatch (" + detail + ")"),
        field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/** \brief Full verification outcome for one named graph. */
struct ClassificationRecord {
  std::string graph_name;
  int vertex_count = 0;
  double curvature = 0;
  int diam = 0;
  bool sharp_everywhere = false;
  std::set<BallTypeId> ball_types;
};

/**
 * \brief End-to-end check of one named graph against its reference data.
 *
 * Verifies connectivity, 4-regularity, per-vertex sharpness, constant curvature,
 * vertex count, diameter, curvature value, and the ball type at every vertex.
 */
inline ClassificationRecord verify_named(const std::string& name) {
  const NamedGraphFacts* facts = nullptr;
  for (const auto& f : named_graph_facts())
    if (f.name == name) facts = &f;
  if (!facts) throw std::invalid_argument("unknown graph name: " + name);

  const Graph g = named_graph(name);
  ClassificationRecord record;
  record.graph_name = name;
  record.vertex_count = g.vertex_count();

  if (!is_connected(g)) throw verification_error(name, "connectivity", "graph is disconnected");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 4)
      throw verification_error(name, "regularity",
                               "vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(g.degree(v)));

  record.sharp_everywhere = true;
  double first_curvature = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const TwoBall ball = extract(g, v);
    const CurvatureReport report = k_infinity(ball);
    if (!report.sharp)
      throw verification_error(name, "sharpness", "vertex " + std::to_string(v));
    if (v == 0)
      first_curvature = report.k_infinity;
    else if (std::abs(report.k_infinity - first_curvature) > kSharpTolerance)
      throw verification_error(name, "constant curvature",
                               "vertex " + std::to_string(v) + " differs");
    const auto type = classify_sharp(ball);
    if (!type)
      throw verification_error(name, "ball type",
                               "vertex " + std::to_string(v) + " has no sharp type");
    record.ball_types.insert(*type);
  }
  record.curvature = first_curvature;
  record.diam = diameter(g);

  if (record.vertex_count != facts->vertex_count)
    throw verification_error(name, "vertex count", std::to_string(record.vertex_count) + " vs " +
                                                       std::to_string(facts->vertex_count));
  if (std::abs(record.curvature - facts->curvature) > kSharpTolerance)
    throw verification_error(name, "curvature value",
                             format_real(record.curvature) + " vs " +
                                 format_real(facts->curvature));
  if (record.diam != facts->diameter)
    throw verification_error(name, "diameter", std::to_string(record.diam) + " vs " +
                                                   std::to_string(facts->diameter));
  if (record.ball_types != std::set<BallTypeId>{facts->ball_type})
    throw verification_error(name, "ball type", "observed types differ from " +
                                                    facts->ball_type.label());
  return record;
}

/** \brief Diameter bound check: diam <= 2 * degree / min-curvature on a regular graph. */
struct BonnetMyersReport {
  double bound = 0;
  int diameter = 0;
  double slack = 0;
  bool holds = false;
  bool equality = false;
};

inline BonnetMyersReport check_bonnet_myers(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw std::invalid_argument("diameter bound requires a connected graph");
  const int d = g.degree(0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) throw std::invalid_argument("diameter bound requires a regular graph");

  double min_curvature = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double k = k_infinity(extract(g, v)).k_infinity;
    if (v == 0 || k < min_curvature) min_curvature = k;
  }
  // values inside the solver tolerance cannot be certified positive
  if (min_curvature <= kDefaultTolerance)
    throw std::domain_error("diameter bound requires positive curvature");

  BonnetMyersReport report;
  report.bound = 2.0 * d / min_curvature;
  report.diameter = diameter(g);
  report.slack = report.bound - report.diameter;
  report.holds = report.slack >= -1e-9;
  report.equality = std::abs(report.slack) <= 1e-9;
  return report;
}

}  // namespace curvsharp
