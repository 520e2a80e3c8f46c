#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coarse/cayley.hpp"
#include "coarse/graph.hpp"

#include <random>
#include <set>

using namespace coarse;

namespace {

ExtDist ed(long long n, long long d = 1) { return ExtDist(Rat(n, d)); }

Graph random_graph(std::mt19937& rng, size_t max_n) {
  std::uniform_int_distribution<size_t> nd(2, max_n);
  size_t n = nd(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double p = coin(rng);
  Graph g;
  for (size_t i = 0; i < n; ++i) g.vertex_ids.push_back("v" + std::to_string(i));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.edges.emplace_back(i, j);
  g.normalize();
  return g;
}

} // namespace

TEST_CASE("graph metric: paths, components, cliques") {
  Graph path = make_graph({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto M = graph_metric(path);
  CHECK(M.dist(0, 2) == ed(2));

  Graph two = make_graph({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  auto M2 = graph_metric(two);
  CHECK(M2.dist(0, 2).is_inf());
  CHECK(M2.dist(0, 1) == ed(1));

  Graph k4 = make_graph({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto M3 = graph_metric(k4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) CHECK(M3.dist(i, j) == ed(1));
}

TEST_CASE("rips graphs at a scale") {
  FiniteMetricSpace M({"0", "1", "2", "5"},
                      {ed(0), ed(1), ed(2), ed(5), ed(1), ed(0), ed(1), ed(4), ed(2), ed(1), ed(0),
                       ed(3), ed(5), ed(4), ed(3), ed(0)});
  auto g1 = rips_graph_t(M, ed(1));
  CHECK(g1.edges == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}});
  auto g3 = rips_graph_t(M, ed(3));
  CHECK(g3.edges == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(rips_graph_t(M, ed(1, 2)).edges.empty());
  CHECK_THROWS_AS(rips_graph_t(M, ExtDist::infinity()), std::invalid_argument);
  CHECK(rips_graph_t(M, ExtDist::infinity(), true).edges.size() == 6);
}

TEST_CASE("rips graphs over a cover and the ball-cover sandwich") {
  auto M = integer_interval(0, 5);
  Cover U;
  U.members = {{"A", {0, 1, 2}}, {"B", {2, 3}}, {"C", {3, 4, 5}}};
  auto g = rips_graph_cover(M, U);
  std::vector<std::pair<uint32_t, uint32_t>> want = {{0, 1}, {0, 2}, {1, 2}, {2, 3},
                                                     {3, 4}, {3, 5}, {4, 5}};
  CHECK(g.edges == want);

  Cover singletons;
  for (size_t i = 0; i < 6; ++i) singletons.members.push_back({"s" + std::to_string(i), {i}});
  CHECK(rips_graph_cover(M, singletons).edges.empty());

  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> tnum(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    auto T = integer_interval(0, 12);
    ExtDist t = ed(tnum(rng), 2);
    auto low = rips_graph_t(T, t);
    auto mid = rips_graph_cover(T, ball_cover(T, t));
    auto high = rips_graph_t(T, t + t);
    auto sub = [](const Graph& a, const Graph& b) {
      return std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
    };
    CHECK(sub(low, mid));
    CHECK(sub(mid, high));
  }
}

TEST_CASE("augmentation adds exactly the distance-two pairs") {
  Graph path = make_graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  auto a = augment(path);
  std::vector<std::pair<uint32_t, uint32_t>> want = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(a.edges == want);

  Graph k3 = make_graph({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(augment(k3).edges == k3.edges);

  // A(G) = Rips at 2.5 of the graph metric, on random graphs; the identity
  // into the augmentation is short and the vertex set is preserved
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 40);
    auto ag = augment(g);
    auto viaRips = rips_graph_t(graph_metric(g), ed(5, 2));
    CHECK(ag.edges == viaRips.edges);
    CHECK(ag.vertex_ids == g.vertex_ids);
    std::vector<size_t> idv(g.num_vertices());
    for (size_t i = 0; i < idv.size(); ++i) idv[i] = i;
    CHECK(is_short(idv, g, ag).ok);
  }
}

TEST_CASE("rips monotonicity and the Lipschitz lower bound") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 20);
    auto M = graph_metric(g);
    auto e1 = rips_graph_t(M, ed(1)).edges;
    auto e2 = rips_graph_t(M, ed(2)).edges;
    CHECK(std::includes(e2.begin(), e2.end(), e1.begin(), e1.end()));

    // identity from Rips_t back to the space stretches distances by at most t
    long long t = 2;
    auto R = rips_graph_t(M, ed(t));
    auto RM = graph_metric(R);
    for (size_t i = 0; i < M.size(); ++i)
      for (size_t j = i + 1; j < M.size(); ++j) {
        if (RM.dist(i, j).is_inf()) continue;
        CHECK(M.dist(i, j) <= RM.dist(i, j).times(t));
      }
  }
}

TEST_CASE("composition law for rips graphs over connected graph metrics") {
  std::mt19937 rng(31);
  int tested = 0;
  while (tested < 12) {
    Graph g = random_graph(rng, 16);
    auto M = graph_metric(g);
    bool connected = true;
    for (size_t i = 0; i < M.size() && connected; ++i)
      for (size_t j = 0; j < M.size(); ++j)
        if (M.dist(i, j).is_inf()) connected = false;
    if (!connected) continue;
    ++tested;
    for (long long m = 1; m <= 3; ++m)
      for (long long n = 1; n <= 3; ++n) {
        auto composed = rips_graph_t(graph_metric(rips_graph_t(M, ed(m))), ed(n));
        auto direct = rips_graph_t(M, ed(m * n));
        CHECK(composed.edges == direct.edges);
      }
  }
}

TEST_CASE("short maps") {
  Graph g = make_graph({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(is_short({0, 1, 2}, g, g).ok);
  CHECK(is_short({1, 1, 1}, g, g).ok);
  Graph two = make_graph({"x", "y", "z", "w"}, {{0, 1}, {2, 3}});
  auto bad = is_short({0, 1, 2}, g, two); // edge bc lands across components
  CHECK(!bad.ok);
  CHECK(bad.witness_edge == std::make_pair(uint32_t{1}, uint32_t{2}));
  CHECK_THROWS_AS(is_short({0, 1}, g, g), std::invalid_argument);
}

TEST_CASE("cayley: integers with unit generators give a path") {
  auto z = make_group_oracle("z");
  spot_check_oracle(*z);
  auto ball = cayley_graph(*z, {"1", "-1"}, 3);
  CHECK(ball.graph.num_vertices() == 7);
  CHECK(ball.graph.edges.size() == 6);
  auto M = graph_metric(ball.graph);
  // the path realizes the word metric on the ball
  for (size_t i = 0; i < 7; ++i)
    for (size_t j = 0; j < 7; ++j) CHECK(M.dist(i, j) == ball.metric.dist(i, j));
}

TEST_CASE("cayley: even generators split the ball into two paths") {
  auto z = make_group_oracle("z");
  auto ball = cayley_graph(*z, {"2", "-2"}, 3);
  CHECK(ball.graph.num_vertices() == 7);
  // enumerate expected edges by brute force over the ball {-3..3}
  std::set<std::pair<std::string, std::string>> want;
  for (long long g = -3; g <= 3; ++g)
    for (long long s : {2, -2}) {
      long long h = g + s;
      if (h < -3 || h > 3) continue;
      std::string a = std::to_string(g), b = std::to_string(h);
      want.insert({std::min(a, b), std::max(a, b)});
    }
  std::set<std::pair<std::string, std::string>> got;
  for (auto [u, v] : ball.graph.edges) {
    std::string a = ball.graph.vertex_ids[u], b = ball.graph.vertex_ids[v];
    got.insert({std::min(a, b), std::max(a, b)});
  }
  CHECK(got == want);
  CHECK(got.size() == 5);
  // within the ball, the generator-2 graph has two components
  auto M = graph_metric(ball.graph);
  size_t odd = 0, even = 0;
  for (const auto& id : ball.graph.vertex_ids) (std::stoll(id) % 2 == 0 ? even : odd)++;
  CHECK(even == 3);
  CHECK(odd == 4);
}

TEST_CASE("cayley: plane lattice ball is the 13-vertex diamond") {
  auto z2 = make_group_oracle("z2");
  spot_check_oracle(*z2);
  auto ball = cayley_graph(*z2, {"1,0", "-1,0", "0,1", "0,-1"}, 2);
  CHECK(ball.graph.num_vertices() == 13);
  // brute-force the expected edge count: grid edges inside |x|+|y| <= 2
  size_t expect = 0;
  for (long long x = -2; x <= 2; ++x)
    for (long long y = -2; y <= 2; ++y) {
      if (std::llabs(x) + std::llabs(y) > 2) continue;
      if (std::llabs(x + 1) + std::llabs(y) <= 2) ++expect;
      if (std::llabs(x) + std::llabs(y + 1) <= 2) ++expect;
    }
  CHECK(ball.graph.edges.size() == expect);
  // word metric matches the l1 distance on the ball
  for (size_t i = 0; i < 13; ++i)
    for (size_t j = 0; j < 13; ++j) {
      auto parse = [&](const std::string& s) {
        auto comma = s.find(',');
        return std::pair<long long, long long>{std::stoll(s.substr(0, comma)),
                                               std::stoll(s.substr(comma + 1))};
      };
      auto [xi, yi] = parse(ball.graph.vertex_ids[i]);
      auto [xj, yj] = parse(ball.graph.vertex_ids[j]);
      CHECK(ball.metric.dist(i, j) == ed(std::llabs(xi - xj) + std::llabs(yi - yj)));
    }
}

TEST_CASE("cayley: generator validation") {
  auto z = make_group_oracle("z");
  CHECK_THROWS_AS(cayley_graph(*z, {"0"}, 2), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(*z, {"1"}, 2), std::invalid_argument); // missing -1
  auto f2 = make_group_oracle("free2");
  spot_check_oracle(*f2);
  auto ball = cayley_graph(*f2, {"a", "A", "b", "B"}, 2);
  CHECK(ball.graph.num_vertices() == 17); // 1 + 4 + 12
  CHECK(ball.graph.edges.size() == 16);   // a tree
}
