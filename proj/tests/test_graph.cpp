#include <curvsharp/graph.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "test_util.hpp"

using namespace curvsharp;

TEST_CASE("from_edge_list builds simple graphs") {
  Graph k2 = from_edge_list(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.adjacent(0, 1));

  Graph dup = from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(from_edge_list(2, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("named graphs have the advertised size, regularity and diameter") {
  const std::map<std::string, std::pair<int, int>> expected = {
      {"K5", {5, 1}},  {"O", {6, 2}},   {"K3xK3", {9, 2}}, {"K44", {8, 2}},
      {"C10", {10, 3}}, {"D12", {12, 3}}, {"D14", {14, 3}},  {"Q4", {16, 4}}};
  for (const auto& [name, shape] : expected) {
    INFO(name);
    Graph g = named_graph(name);
    CHECK(g.vertex_count() == shape.first);
    CHECK(is_connected(g));
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
    CHECK(diameter(g) == shape.second);
  }
  CHECK_THROWS_AS(named_graph("petersen"), std::invalid_argument);
}

TEST_CASE("dihedral Cayley graphs") {
  Graph d12 = cayley_dihedral(12, {{false, 3}, {true, 0}, {true, 2}, {true, 4}});
  CHECK(d12.vertex_count() == 12);
  for (int v = 0; v < 12; ++v) CHECK(d12.degree(v) == 4);
  CHECK(is_connected(d12));

  Graph d14 = cayley_dihedral(14, {{true, 0}, {true, 1}, {true, 4}, {true, 6}});
  CHECK(d14.vertex_count() == 14);
  for (int v = 0; v < 14; ++v) CHECK(d14.degree(v) == 4);
  CHECK(is_connected(d14));

  // a connected 2-regular graph on 6 vertices is the 6-cycle
  Graph c6 = cayley_dihedral(6, {{true, 0}, {true, 1}});
  CHECK(c6.vertex_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  CHECK(is_connected(c6));
  CHECK(diameter(c6) == 3);

  CHECK_THROWS_AS(cayley_dihedral(12, {{false, 1}}), std::invalid_argument);  // r lacks r^-1
  CHECK_THROWS_AS(cayley_dihedral(12, {{false, 0}}), std::invalid_argument);  // identity
  CHECK_THROWS_AS(cayley_dihedral(11, {{true, 0}}), std::invalid_argument);   // odd order
}

TEST_CASE("distance, sphere and ball on the 4-cube") {
  Graph q4 = named_graph("Q4");
  CHECK(distance(q4, 0, 15) == 4);
  const int sizes[5] = {1, 4, 6, 4, 1};
  int cumulative = 0;
  for (int r = 0; r <= 4; ++r) {
    cumulative += sizes[r];
    CHECK(sphere(q4, 0, r).size() == static_cast<std::size_t>(sizes[r]));
    CHECK(ball(q4, 0, r).size() == static_cast<std::size_t>(cumulative));
  }
  CHECK(sphere(q4, 3, 0) == std::vector<int>{3});
}

TEST_CASE("diameter rejects disconnected graphs") {
  Graph two_edges = from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(diameter(two_edges), std::domain_error);
}

TEST_CASE("rooted degrees") {
  Graph k5 = named_graph("K5");
  RootedDegrees r = rooted_degrees(k5, 0, 1);
  CHECK(r.in == 1);
  CHECK(r.sph == 3);
  CHECK(r.out == 0);

  Graph q4 = named_graph("Q4");
  r = rooted_degrees(q4, 0, 1);
  CHECK(r.in == 1);
  CHECK(r.sph == 0);
  CHECK(r.out == 3);

  r = rooted_degrees(q4, 0, 0);
  CHECK(r.in == 0);
  CHECK(r.sph == 0);
  CHECK(r.out == 4);

  std::mt19937 rng(7041);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testutil::random_graph(10, 0.4, rng);
    auto dist = bfs_distances(g, 0);
    for (int v = 0; v < 10; ++v) {
      if (dist[v] < 0) continue;
      RootedDegrees d = rooted_degrees(g, 0, v);
      CHECK(d.in + d.sph + d.out == g.degree(v));
    }
  }
}

TEST_CASE("triangle counts") {
  Graph k5 = named_graph("K5");
  CHECK(triangles_at_vertex(k5, 0) == 6);
  CHECK(triangles_at_edge(k5, 0, 1) == 3);

  Graph o = named_graph("O");
  CHECK(triangles_at_vertex(o, 0) == 4);
  CHECK(triangles_at_edge(o, 0, 1) == 2);

  Graph c10 = named_graph("C10");
  CHECK(triangles_at_vertex(c10, 0) == 0);

  CHECK_THROWS_AS(triangles_at_edge(c10, 0, 5), std::invalid_argument);  // crown omits i ~ 5+i

  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testutil::random_graph(9, 0.5, rng);
    for (int x = 0; x < 9; ++x) {
      int twice = 0;
      for (int y : g.neighbors(x)) twice += triangles_at_edge(g, x, y);
      CHECK(triangles_at_vertex(g, x) * 2 == twice);
    }
  }
}

TEST_CASE("out-regularity of the unit sphere") {
  for (const char* name : {"K5", "O", "K3xK3", "K44", "C10", "D12", "D14", "Q4"}) {
    Graph g = named_graph(name);
    for (int v = 0; v < g.vertex_count(); ++v) {
      INFO(name << " at " << v);
      CHECK(is_s1_out_regular(g, v));
    }
  }
  // star K_{1,3} with a pendant on one leaf: out-degrees at the center differ
  Graph star = from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  CHECK_FALSE(is_s1_out_regular(star, 0));
}

TEST_CASE("edge list round trip") {
  Graph g = named_graph("D14");
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  Graph back = read_edge_list(in);
  CHECK(back == g);

  std::istringstream commented("# crown header\n4 2 # counts\n0 1\n2 3\n");
  Graph parsed = read_edge_list(commented);
  CHECK(parsed.vertex_count() == 4);
  CHECK(parsed.edge_count() == 2);

  std::istringstream bad("4 3\n0 1\n2 3\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
  std::istringstream junk("4 1\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(junk), std::invalid_argument);
}
