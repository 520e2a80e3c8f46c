#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coarse/tower.hpp"

using namespace coarse;

namespace {

ExtDist ed(long long n, long long d = 1) { return ExtDist(Rat(n, d)); }

std::vector<Cover> interval_covers_0_20() {
  auto member = [](long long lo, long long hi) {
    std::vector<size_t> pts;
    for (long long x = std::max<long long>(lo, 0); x <= std::min<long long>(hi, 20); ++x)
      pts.push_back(static_cast<size_t>(x));
    return pts;
  };
  Cover small, mid, whole;
  for (long long k = 0; k <= 19; ++k) small.members.push_back({"s" + std::to_string(k), member(k, k + 2)});
  for (long long k = 0; 2 * k <= 20; ++k)
    mid.members.push_back({"m" + std::to_string(k), member(2 * k, 2 * k + 8)});
  whole.members.push_back({"w", member(0, 20)});
  return {small, mid, whole};
}

} // namespace

TEST_CASE("rips towers verify as coarse complexes when scales double") {
  auto M = integer_interval(0, 30);
  auto T = rips_tower(M, {ed(1), ed(2), ed(4), ed(8)}, 3);
  REQUIRE(T.num_levels() == 4);
  auto rep = verify_coarse_complex(T);
  CHECK(rep.bonds_ok);
  CHECK(rep.composition_ok);
  CHECK(rep.augmentation[0].witness_m == 1);
  CHECK(rep.augmentation[1].witness_m == 2);
  CHECK(rep.augmentation[2].witness_m == 3);
  CHECK(!rep.augmentation[3].witness_m.has_value()); // truncation is explicit
  CHECK(rep.ok());
}

TEST_CASE("grid rips towers with doubling scales verify too") {
  auto G = integer_grid(12, 12);
  auto T = rips_tower(G, {ed(1), ed(2), ed(4)}, 3);
  auto rep = verify_coarse_complex(T);
  CHECK(rep.ok());
  CHECK(rep.augmentation[0].witness_m == 1);
  CHECK(rep.augmentation[1].witness_m == 2);
}

TEST_CASE("single-level towers are honestly unwitnessed") {
  auto M = integer_interval(0, 10);
  auto T = rips_tower(M, {ed(2)}, 2);
  auto rep = verify_coarse_complex(T);
  CHECK(!rep.augmentation[0].witness_m.has_value());
  CHECK(rep.ok()); // nothing to witness, nothing failed
}

TEST_CASE("a corrupted bond fails with a witness simplex") {
  auto M = integer_interval(0, 30);
  auto T = rips_tower(M, {ed(1), ed(2)}, 3);
  T.bonds[0][0] = 30; // send the left endpoint far away
  auto rep = verify_coarse_complex(T);
  CHECK(!rep.bonds_ok);
  REQUIRE(!rep.bond_failures.empty());
  CHECK(rep.bond_failures[0].first == 0);
  // the named witness contains the moved vertex
  auto wit = rep.bond_failures[0].second;
  CHECK(std::find(wit.begin(), wit.end(), 0u) != wit.end());
  CHECK(!rep.ok());
}

TEST_CASE("graph towers: rips graph ladders verify") {
  auto M = integer_interval(0, 30);
  auto T = rips_graph_tower(M, {ed(1), ed(2), ed(4), ed(8)});
  auto rep = verify_coarse_graph(T);
  CHECK(rep.bonds_ok);
  CHECK(rep.augmentation[0].witness_m == 1);
  CHECK(rep.augmentation[2].witness_m == 3);
  CHECK(rep.ok());

  T.bonds[1][3] = 25;
  auto bad = verify_coarse_graph(T);
  CHECK(!bad.bonds_ok);
}

TEST_CASE("cech towers over star-refining covers") {
  auto M = integer_interval(0, 20);
  auto covers = interval_covers_0_20();
  REQUIRE(is_star_refinement(M, covers[0], covers[1]).ok);
  REQUIRE(is_star_refinement(M, covers[1], covers[2]).ok);
  auto T = cech_tower(M, covers, 3);
  REQUIRE(T.num_levels() == 3);
  auto rep = verify_coarse_complex(T);
  CHECK(rep.bonds_ok);
  CHECK(rep.augmentation[0].witness_m == 1); // next level witnesses
  CHECK(rep.augmentation[1].witness_m == 2);
  CHECK(rep.ok());

  // non-star-refining covers are rejected with the witness member named
  Cover halves;
  halves.members = {{"A", {}}, {"B", {}}};
  for (size_t x = 0; x <= 12; ++x) halves.members[0].points.push_back(x);
  for (size_t x = 8; x <= 20; ++x) halves.members[1].points.push_back(x);
  CHECK_THROWS_WITH_AS(cech_tower(M, {halves, halves}, 3),
                       doctest::Contains("does not star-refine"), std::invalid_argument);

  // single cover: a one-level tower
  CHECK(cech_tower(M, {covers[1]}, 3).num_levels() == 1);
}

TEST_CASE("cech projections are ls-close step by step") {
  auto M = integer_interval(0, 20);
  auto covers = interval_covers_0_20();
  auto T = cech_tower(M, covers, 3);
  auto rep = verify_projections(T);
  CHECK(rep.ok);
  // the step distance is bounded by the next cover's mesh
  for (size_t n = 0; n + 1 < T.num_levels(); ++n) CHECK(rep.ls_step[n] <= mesh(M, covers[n + 1]));
  // projections are bornologous: simplex images have finite diameter
  for (const auto& d : rep.simplex_diameter) CHECK(!d.is_inf());

  // rips towers project by identities
  auto R = rips_tower(M, {ed(1), ed(2)}, 2);
  auto rrep = verify_projections(R);
  CHECK(rrep.ok);
  CHECK(rrep.ls_step[0] == ed(0));

  // graph towers report edge-image diameters
  auto RG = rips_graph_tower(M, {ed(1), ed(2)});
  auto grep = verify_projections(RG);
  CHECK(grep.ok);
  CHECK(grep.simplex_diameter[0] == ed(1));
  CHECK(grep.simplex_diameter[1] == ed(2));

  // a projection into a far translate goes infinite
  auto I = ExtDist::infinity();
  FiniteMetricSpace two({"a", "b", "c", "d"},
                        {ed(0), ed(1), I, I, ed(1), ed(0), I, I, I, I, ed(0), ed(1), I, I, ed(1), ed(0)});
  auto TT = rips_tower(two, {ed(1), ed(2)}, 2);
  TT.projections[0] = {2, 3, 2, 3}; // level-0 projection lands in the far part
  auto bad = verify_projections(TT);
  CHECK(!bad.ok);
  CHECK(bad.ls_step[0].is_inf());
}

TEST_CASE("premorphisms: identity, subladder inclusion, divergence") {
  auto M = integer_interval(0, 20);
  auto W = rips_tower(M, {ed(1), ed(2), ed(4), ed(8)}, 2);

  // identity pre-morphism
  PreMorphism F;
  F.source = &W;
  F.target = &W;
  for (size_t k = 0; k < 4; ++k) {
    F.level_of.push_back(k);
    F.maps.push_back(W.projections[k]); // identity vertex maps
  }
  auto rep = premorphism_check(F);
  CHECK(rep.maps_simplicial);
  REQUIRE(rep.witness.size() == 3);
  CHECK(rep.witness[0] == 1);
  CHECK(rep.witness[1] == 2);
  CHECK(rep.all_witnessed());

  // a sub-ladder includes into the full ladder
  auto S = rips_tower(M, {ed(1), ed(4)}, 2);
  PreMorphism incl;
  incl.source = &S;
  incl.target = &W;
  incl.level_of = {0, 2};
  incl.maps = {S.projections[0], S.projections[1]};
  auto irep = premorphism_check(incl);
  CHECK(irep.maps_simplicial);
  CHECK(irep.all_witnessed());

  // equivalent pre-morphisms: F against a one-level-up shift of itself
  PreMorphism G;
  G.source = &W;
  G.target = &W;
  for (size_t k = 0; k < 4; ++k) {
    G.level_of.push_back(std::min<size_t>(k + 1, 3));
    G.maps.push_back(W.projections[k]);
  }
  auto eq = premorphisms_equivalent(F, G);
  CHECK(eq.all_witnessed());

  // divergent maps across infinite components stay unwitnessed
  auto I = ExtDist::infinity();
  FiniteMetricSpace two({"a", "b", "c", "d"},
                        {ed(0), ed(1), I, I, ed(1), ed(0), I, I, I, I, ed(0), ed(1), I, I, ed(1), ed(0)});
  auto TT = rips_tower(two, {ed(1), ed(2)}, 2);
  PreMorphism D1, D2;
  D1.source = &TT;
  D1.target = &TT;
  D1.level_of = {0, 1};
  D1.maps = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  D2 = D1;
  D2.maps = {{2, 2, 2, 2}, {2, 2, 2, 2}};
  auto div = premorphisms_equivalent(D1, D2);
  CHECK(!div.all_witnessed());
}

TEST_CASE("towers reject non-ascending ladders") {
  auto M = integer_interval(0, 5);
  CHECK_THROWS_AS(rips_tower(M, {ed(2), ed(1)}, 2), std::invalid_argument);
  CHECK_THROWS_AS(rips_tower(M, {ed(1), ed(1)}, 2), std::invalid_argument);
  CHECK_THROWS_AS(rips_tower(M, {}, 2), std::invalid_argument);
}

TEST_CASE("premorphisms to opposite ends of a long path stay unwitnessed") {
  auto M = integer_interval(0, 30);
  auto W = rips_tower(M, {ed(1), ed(2), ed(4)}, 2);
  PreMorphism F, G;
  F.source = &W;
  F.target = &W;
  F.level_of = {0, 1, 2};
  F.maps = {std::vector<size_t>(31, 0), std::vector<size_t>(31, 0), std::vector<size_t>(31, 0)};
  G = F;
  G.maps = {std::vector<size_t>(31, 30), std::vector<size_t>(31, 30), std::vector<size_t>(31, 30)};
  // the endpoints are 30 apart; no stored scale spans the gap
  CHECK(!premorphisms_equivalent(F, G).all_witnessed());
}

TEST_CASE("graph-tower premorphisms use finite ls-distance") {
  auto M = integer_interval(0, 20);
  auto W = rips_graph_tower(M, {ed(1), ed(2), ed(4)});
  GraphPreMorphism F;
  F.source = &W;
  F.target = &W;
  for (size_t k = 0; k < 3; ++k) {
    F.level_of.push_back(k);
    F.maps.push_back(W.projections[k]);
  }
  auto rep = premorphism_check(F);
  CHECK(rep.maps_simplicial);
  CHECK(rep.all_witnessed());

  auto I = ExtDist::infinity();
  FiniteMetricSpace two({"a", "b", "c", "d"},
                        {ed(0), ed(1), I, I, ed(1), ed(0), I, I, I, I, ed(0), ed(1), I, I, ed(1), ed(0)});
  auto TT = rips_graph_tower(two, {ed(1), ed(2)});
  GraphPreMorphism D1, D2;
  D1.source = &TT;
  D1.target = &TT;
  D1.level_of = {0, 1};
  D1.maps = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  D2 = D1;
  D2.maps = {{2, 2, 2, 2}, {2, 2, 2, 2}};
  CHECK(premorphisms_equivalent(D1, D1).all_witnessed());
  CHECK(!premorphisms_equivalent(D1, D2).all_witnessed());
}

TEST_CASE("bond composition closure holds for stored triples") {
  auto M = integer_interval(0, 12);
  auto T = rips_tower(M, {ed(1), ed(2), ed(4)}, 2);
  for (size_t n = 0; n < 3; ++n)
    for (size_t m = n; m < 3; ++m)
      for (size_t l = m; l < 3; ++l) {
        auto direct = T.bond(n, l);
        auto two_step = T.bond(n, m);
        auto second = T.bond(m, l);
        for (auto& v : two_step) v = second[v];
        CHECK(direct == two_step);
      }
}
