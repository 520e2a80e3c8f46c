#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coarse/complex.hpp"

#include <random>

using namespace coarse;

namespace {

ExtDist ed(long long n, long long d = 1) { return ExtDist(Rat(n, d)); }

FiniteMetricSpace unit_square_corners() {
  return point_cloud_space({"p00", "p10", "p01", "p11"},
                           {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, PointMetric::Euclidean);
}

Graph cycle4() { return make_graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Graph random_graph(std::mt19937& rng, size_t n, double p) {
  Graph g;
  for (size_t i = 0; i < n; ++i) g.vertex_ids.push_back("v" + std::to_string(i));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.edges.emplace_back(i, j);
  g.normalize();
  return g;
}

} // namespace

TEST_CASE("flag complexes: triangles, cycles, clique caps") {
  Graph k3 = make_graph({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  auto K = flag_complex(k3, 2);
  CHECK(K.generators == std::vector<std::vector<uint32_t>>{{0, 1, 2}});
  CHECK(K.dim() == 2);

  auto C4 = flag_complex(cycle4(), 2);
  CHECK(C4.dim() == 1);
  CHECK(C4.simplices_of_dim(1).size() == 4);
  CHECK(!C4.has_simplex({0, 1, 2}));

  Graph k5 = make_graph({"a", "b", "c", "d", "e"},
                        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto K5 = flag_complex(k5, 2);
  CHECK(K5.true_dim() == 4);
  CHECK(K5.dim() == 2);
  CHECK(K5.simplices_of_dim(2).size() == 10);
  CHECK(!K5.has_simplex({0, 1, 2, 3}));      // above the cap
  CHECK(K5.spans_simplex({0, 1, 2, 3}));     // but inside a generator
}

TEST_CASE("flag property on random graphs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 10, 0.5);
    auto K = flag_complex(g, 3);
    // every pairwise-connected set of <= 4 vertices spans a simplex
    for (uint32_t a = 0; a < 10; ++a)
      for (uint32_t b = a + 1; b < 10; ++b)
        for (uint32_t c = b + 1; c < 10; ++c) {
          bool clique = g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
          CHECK(K.has_simplex({a, b, c}) == clique);
        }
  }
}

TEST_CASE("rips complexes of the unit square corners") {
  auto M = unit_square_corners();
  auto K1 = rips_complex(M, ed(1), 3);
  CHECK(K1.dim() == 1);
  CHECK(K1.simplices_of_dim(1).size() == 4); // the 4-cycle, diagonals are sqrt(2)
  auto K15 = rips_complex(M, ed(3, 2), 3);
  CHECK(K15.dim() == 3);
  CHECK(K15.generators == std::vector<std::vector<uint32_t>>{{0, 1, 2, 3}});
  auto K0 = rips_complex(M, ed(1, 2), 3);
  CHECK(K0.dim() == 0);
}

TEST_CASE("augmentation of complexes: closed-star generators") {
  // path a-b-c
  auto P = complex_from_maximal({"a", "b", "c"}, {{0, 1}, {1, 2}}, 3);
  auto A = augment_complex(P);
  CHECK(A.has_simplex({0, 1, 2}));

  // a single full simplex stays put
  auto F = complex_from_maximal({"a", "b", "c"}, {{0, 1, 2}}, 3);
  auto AF = augment_complex(F);
  CHECK(AF.generators == F.generators);

  // 4-cycle: diagonals and all four triangles appear, the tetrahedron not
  auto C = flag_complex(cycle4(), 3);
  auto AC = augment_complex(C);
  CHECK(AC.has_simplex({0, 2}));
  CHECK(AC.has_simplex({1, 3}));
  CHECK(AC.has_simplex({0, 1, 2}));
  CHECK(AC.has_simplex({0, 1, 3}));
  CHECK(!AC.has_simplex({0, 1, 2, 3}));

  // brute-force the closed-star definition on subsets of size <= 3
  Graph sk = C.one_skeleton();
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = a; b < 4; ++b)
      for (uint32_t c = b; c < 4; ++c) {
        std::vector<uint32_t> s = {a, b, c};
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        bool want = false;
        for (uint32_t v = 0; v < 4 && !want; ++v) {
          bool all = true;
          for (uint32_t w : s) all = all && (w == v || sk.has_edge(v, w));
          want = all;
        }
        CHECK(AC.has_simplex(s) == want);
      }

  // edges of A(K) are exactly the distance-<=-2 pairs of the skeleton
  std::mt19937 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(rng, 9, 0.3);
    auto K = flag_complex(g, 3);
    auto AK = augment_complex(K);
    auto AG = augment(g);
    for (uint32_t i = 0; i < 9; ++i)
      for (uint32_t j = i + 1; j < 9; ++j) CHECK(AK.has_simplex({i, j}) == AG.has_edge(i, j));
    // K is contained in A(K) simplexwise
    for (const auto& gen : K.generators)
      if (gen.size() <= size_t(K.dim_cap) + 1) CHECK(AK.spans_simplex(gen));
    // reflagged variant has the same 1-skeleton
    auto AR = augment_complex(K, true);
    CHECK(AR.one_skeleton().edges == AK.one_skeleton().edges);
  }
}

TEST_CASE("nerves of covers") {
  auto M = integer_interval(0, 5);
  Cover U;
  U.members = {{"U1", {0, 1, 2}}, {"U2", {1, 2, 3, 4}}, {"U3", {3, 4, 5}}};
  auto N = nerve(M, U, 3);
  CHECK(N.num_vertices() == 3);
  CHECK(N.has_simplex({0, 1}));
  CHECK(N.has_simplex({1, 2}));
  CHECK(!N.has_simplex({0, 2}));
  CHECK(!N.has_simplex({0, 1, 2}));

  Cover disjoint;
  disjoint.members = {{"A", {0, 1}}, {"B", {2, 3}}, {"C", {4, 5}}};
  CHECK(nerve(M, disjoint, 3).dim() == 0);

  Cover shared;
  shared.members = {{"A", {0, 1, 2}}, {"B", {2, 3}}, {"C", {2, 4, 5}}};
  auto NS = nerve(M, shared, 2);
  CHECK(NS.has_simplex({0, 1, 2})); // all meet at point 2
}

TEST_CASE("rips complexes over covers flag the cover graph") {
  auto M = integer_interval(0, 5);
  Cover U;
  U.members = {{"A", {0, 1, 2}}, {"B", {2, 3}}, {"C", {3, 4, 5}}};
  auto K = rips_complex_cover(M, U, 3);
  CHECK(K.has_simplex({0, 1, 2}));
  CHECK(K.has_simplex({3, 4, 5}));
  CHECK(!K.has_simplex({2, 3, 4}));
  CHECK(K.one_skeleton().edges == rips_graph_cover(M, U).edges);
}

TEST_CASE("simplicial map checks") {
  auto C = flag_complex(cycle4(), 2);
  auto id = identity_map(C);
  CHECK(is_simplicial(id).ok);

  SimplicialMap constant{&C, &C, {0, 0, 0, 0}};
  CHECK(is_simplicial(constant).ok);

  // swapping two adjacent vertices breaks an edge
  SimplicialMap swap_adj{&C, &C, {1, 0, 2, 3}};
  auto r = is_simplicial(swap_adj);
  CHECK(!r.ok);
  CHECK(r.witness.has_value());
  // the antipodal swap is the reflection through the other diagonal: simplicial
  SimplicialMap swap_anti{&C, &C, {2, 1, 0, 3}};
  CHECK(is_simplicial(swap_anti).ok);

  SimplicialMap partial{&C, &C, {0, 1}};
  CHECK_THROWS_AS(is_simplicial(partial), std::invalid_argument);
}

TEST_CASE("contiguity") {
  auto C = flag_complex(cycle4(), 2);
  auto id = identity_map(C);
  CHECK(are_contiguous(id, id).ok);

  // two constant maps are contiguous exactly when the edge exists
  SimplicialMap ca{&C, &C, {0, 0, 0, 0}}, cb{&C, &C, {1, 1, 1, 1}}, cc{&C, &C, {2, 2, 2, 2}};
  CHECK(are_contiguous(ca, cb).ok);
  CHECK(!are_contiguous(ca, cc).ok);

  // identity vs rotation of the 4-cycle
  SimplicialMap rot{&C, &C, {1, 2, 3, 0}};
  CHECK(is_simplicial(rot).ok);
  auto r = are_contiguous(id, rot);
  CHECK(!r.ok);
  CHECK(r.witness.has_value());

  // reflexive + symmetric on random pairs of simplicial maps
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 7, 0.6);
    auto K = flag_complex(g, 3);
    std::uniform_int_distribution<size_t> pick(0, 6);
    SimplicialMap f{&K, &K, {}}, h{&K, &K, {}};
    // constant-ish maps are always simplicial; vary bases
    size_t base1 = pick(rng), base2 = pick(rng);
    f.verts.assign(7, base1);
    h.verts.assign(7, base2);
    CHECK(are_contiguous(f, f).ok);
    CHECK(are_contiguous(f, h).ok == are_contiguous(h, f).ok);
  }
}

TEST_CASE("contiguous factorizations") {
  auto C = flag_complex(cycle4(), 2);
  auto id = identity_map(C);
  auto chk = verify_contiguous_factorization(id, id, id);
  CHECK(chk.ok);
  CHECK(chk.mid_dim == 1);

  // square corners: everything factors through a point at a coning scale
  auto M = unit_square_corners();
  auto K1 = rips_complex(M, ed(1), 3);
  auto K3 = rips_complex(M, ed(3), 3);
  auto pt = complex_from_maximal({"z"}, {{0}}, 1);
  SimplicialMap f{&K1, &K3, {0, 1, 2, 3}};
  SimplicialMap g{&K1, &pt, {0, 0, 0, 0}};
  SimplicialMap h{&pt, &K3, {0}};
  auto chk2 = verify_contiguous_factorization(f, g, h);
  CHECK(chk2.ok);
  CHECK(chk2.mid_dim == 0);

  // a path middle fails to factor the 4-cycle identity
  auto P = complex_from_maximal({"x", "y", "z"}, {{0, 1}, {1, 2}}, 2);
  SimplicialMap g2{&C, &P, {0, 1, 2, 1}};
  SimplicialMap h2{&P, &C, {0, 1, 2}};
  CHECK(is_simplicial(g2).ok);
  CHECK(is_simplicial(h2).ok);
  auto chk3 = verify_contiguous_factorization(identity_map(C), g2, h2);
  CHECK(!chk3.ok);
  CHECK(chk3.contiguity.witness.has_value());

  SimplicialMap wrong{&P, &P, {0, 1, 2}};
  CHECK_THROWS_AS(verify_contiguous_factorization(id, g2, wrong), std::invalid_argument);
}

TEST_CASE("bounded simplices check") {
  auto M = integer_interval(0, 5);
  auto K = rips_complex(M, ed(1), 1);
  std::vector<size_t> idv = {0, 1, 2, 3, 4, 5};
  auto rep = bounded_simplices_check(idv, K, M, ed(1));
  CHECK(rep.ok);
  CHECK(rep.max_diameter == ed(1));

  std::vector<size_t> constant(6, 2);
  auto repc = bounded_simplices_check(constant, K, M, ed(0));
  CHECK(repc.ok);
  CHECK(repc.max_diameter == ed(0));

  // collapsing everything onto a diameter-5 pair with bound 2 fails
  auto K5 = rips_complex(M, ed(5), 1);
  std::vector<size_t> spread = {0, 5, 0, 5, 0, 5};
  auto reps = bounded_simplices_check(spread, K5, M, ed(2));
  CHECK(!reps.ok);
  CHECK(reps.max_diameter == ed(5));
}

TEST_CASE("simplicial maps compose on random towers") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(rng, 8, 0.4);
    Graph g2 = g;
    std::uniform_int_distribution<uint32_t> pick(0, 7);
    for (int extra = 0; extra < 4; ++extra) {
      uint32_t a = pick(rng), b = pick(rng);
      if (a != b) g2.add_edge(a, b);
    }
    g2.normalize();
    Graph g3 = g2;
    for (int extra = 0; extra < 4; ++extra) {
      uint32_t a = pick(rng), b = pick(rng);
      if (a != b) g3.add_edge(a, b);
    }
    g3.normalize();
    auto K1 = flag_complex(g, 3), K2 = flag_complex(g2, 3), K3 = flag_complex(g3, 3);
    SimplicialMap f{&K1, &K2, {0, 1, 2, 3, 4, 5, 6, 7}};
    SimplicialMap h{&K2, &K3, {0, 1, 2, 3, 4, 5, 6, 7}};
    REQUIRE(is_simplicial(f).ok);
    REQUIRE(is_simplicial(h).ok);
    CHECK(is_simplicial(compose(h, f)).ok);
  }
}
