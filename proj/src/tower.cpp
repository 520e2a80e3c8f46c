#include "coarse/tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarse {

namespace {

std::vector<size_t> compose_bonds(const std::vector<std::vector<size_t>>& bonds, size_t n_vertices,
                                  size_t k, size_t m) {
  std::vector<size_t> f(n_vertices);
  for (size_t i = 0; i < n_vertices; ++i) f[i] = i;
  for (size_t level = k; level < m; ++level) {
    for (auto& v : f) v = bonds[level][v];
  }
  return f;
}

} // namespace

std::vector<size_t> ComplexTower::bond(size_t k, size_t m) const {
  if (k > m || m >= levels.size()) throw std::out_of_range("bond: bad level pair");
  return compose_bonds(bonds, levels[k].num_vertices(), k, m);
}

SimplicialMap ComplexTower::bond_map(size_t k, size_t m) const {
  SimplicialMap f;
  f.source = &levels[k];
  f.target = &levels[m];
  f.verts = bond(k, m);
  return f;
}

std::vector<size_t> GraphTower::bond(size_t k, size_t m) const {
  if (k > m || m >= levels.size()) throw std::out_of_range("bond: bad level pair");
  return compose_bonds(bonds, levels[k].num_vertices(), k, m);
}

namespace {

void check_ascending(const std::vector<ExtDist>& scales) {
  if (scales.empty()) throw std::invalid_argument("empty scale ladder");
  for (size_t i = 1; i < scales.size(); ++i)
    if (!(scales[i - 1] < scales[i])) throw std::invalid_argument("scale ladder is not ascending");
}

std::vector<size_t> identity_verts(size_t n) {
  std::vector<size_t> f(n);
  for (size_t i = 0; i < n; ++i) f[i] = i;
  return f;
}

} // namespace

ComplexTower rips_tower(const FiniteMetricSpace& M, const std::vector<ExtDist>& scales, int dim_cap) {
  check_ascending(scales);
  ComplexTower T;
  T.space = M;
  T.scales = scales;
  for (const auto& t : scales) {
    T.levels.push_back(rips_complex(M, t, dim_cap));
    T.labels.push_back("t=" + t.str());
    T.projections.push_back(identity_verts(M.size()));
  }
  for (size_t k = 0; k + 1 < T.levels.size(); ++k) T.bonds.push_back(identity_verts(M.size()));
  return T;
}

GraphTower rips_graph_tower(const FiniteMetricSpace& M, const std::vector<ExtDist>& scales) {
  check_ascending(scales);
  GraphTower T;
  T.space = M;
  T.scales = scales;
  for (const auto& t : scales) {
    T.levels.push_back(rips_graph_t(M, t));
    T.labels.push_back("t=" + t.str());
    T.projections.push_back(identity_verts(M.size()));
  }
  for (size_t k = 0; k + 1 < T.levels.size(); ++k) T.bonds.push_back(identity_verts(M.size()));
  return T;
}

ComplexTower cech_tower(const FiniteMetricSpace& M, const std::vector<Cover>& covers, int dim_cap) {
  if (covers.empty()) throw std::invalid_argument("cech_tower: no covers");
  for (size_t n = 0; n + 1 < covers.size(); ++n) {
    auto sr = is_star_refinement(M, covers[n], covers[n + 1]);
    if (!sr.ok)
      throw std::invalid_argument("cech_tower: cover " + std::to_string(n) +
                                  " does not star-refine its successor (member '" +
                                  covers[n].members[*sr.failing_member].name + "')");
  }
  ComplexTower T;
  T.space = M;
  for (size_t n = 0; n < covers.size(); ++n) {
    T.levels.push_back(nerve(M, covers[n], dim_cap));
    T.labels.push_back("cover=" + std::to_string(n));
    std::vector<size_t> proj;
    for (const auto& mem : covers[n].members) proj.push_back(mem.points.front());
    T.projections.push_back(std::move(proj));
  }
  for (size_t n = 0; n + 1 < covers.size(); ++n) {
    std::vector<size_t> b;
    b.reserve(covers[n].members.size());
    for (const auto& mem : covers[n].members) {
      auto st = star(mem.points, covers[n], M.size());
      size_t chosen = SIZE_MAX;
      for (size_t j = 0; j < covers[n + 1].members.size(); ++j) {
        const auto& cand = covers[n + 1].members[j].points;
        if (std::includes(cand.begin(), cand.end(), st.begin(), st.end())) {
          chosen = j;
          break;
        }
      }
      if (chosen == SIZE_MAX)
        throw std::logic_error("cech_tower: no member contains a star despite refinement check");
      b.push_back(chosen);
    }
    T.bonds.push_back(std::move(b));
  }
  return T;
}

bool TowerVerifyReport::ok() const {
  if (!bonds_ok || !identity_ok || !composition_ok) return false;
  // The final level never has a stored later target; it is excluded.
  for (size_t i = 0; i + 1 < augmentation.size(); ++i)
    if (!augmentation[i].witness_m) return false;
  return true;
}

TowerVerifyReport verify_coarse_graph(const GraphTower& T) {
  TowerVerifyReport rep;
  for (size_t k = 0; k + 1 < T.num_levels(); ++k) {
    auto chk = is_short(T.bonds[k], T.levels[k], T.levels[k + 1]);
    if (!chk.ok) {
      rep.bonds_ok = false;
      rep.bond_failures.emplace_back(k, std::vector<uint32_t>{chk.witness_edge->first, chk.witness_edge->second});
    }
  }
  for (size_t n = 0; n < T.num_levels(); ++n)
    for (size_t m = n; m < T.num_levels(); ++m)
      for (size_t l = m; l < T.num_levels(); ++l) {
        auto f = T.bond(n, m);
        auto g = T.bond(m, l);
        for (auto& v : f) v = g[v];
        if (T.bond(n, l) != f) rep.composition_ok = false;
      }
  for (size_t n = 0; n < T.num_levels(); ++n) {
    LevelWitness w{n, std::nullopt};
    Graph a = augment(T.levels[n]);
    for (size_t m = n + 1; m < T.num_levels(); ++m) {
      if (is_short(T.bond(n, m), a, T.levels[m]).ok) {
        w.witness_m = m;
        break;
      }
    }
    rep.augmentation.push_back(w);
  }
  return rep;
}

TowerVerifyReport verify_coarse_complex(const ComplexTower& T) {
  TowerVerifyReport rep;
  for (size_t k = 0; k + 1 < T.num_levels(); ++k) {
    SimplicialMap f;
    f.source = &T.levels[k];
    f.target = &T.levels[k + 1];
    f.verts = T.bonds[k];
    auto chk = is_simplicial(f);
    if (!chk.ok) {
      rep.bonds_ok = false;
      rep.bond_failures.emplace_back(k, *chk.witness);
    }
  }
  for (size_t n = 0; n < T.num_levels(); ++n)
    for (size_t m = n; m < T.num_levels(); ++m)
      for (size_t l = m; l < T.num_levels(); ++l) {
        auto f = T.bond(n, m);
        auto g = T.bond(m, l);
        for (auto& v : f) v = g[v];
        if (T.bond(n, l) != f) rep.composition_ok = false;
      }
  for (size_t n = 0; n < T.num_levels(); ++n) {
    LevelWitness w{n, std::nullopt};
    SimplicialComplex a = augment_complex(T.levels[n]);
    for (size_t m = n + 1; m < T.num_levels(); ++m) {
      SimplicialMap f;
      f.source = &a;
      f.target = &T.levels[m];
      f.verts = T.bond(n, m);
      if (is_simplicial(f).ok) {
        w.witness_m = m;
        break;
      }
    }
    rep.augmentation.push_back(w);
  }
  return rep;
}

ProjectionReport verify_projections(const ComplexTower& T) {
  if (!T.space || T.projections.size() != T.num_levels())
    throw std::invalid_argument("verify_projections: tower has no projections");
  ProjectionReport rep;
  const auto& M = *T.space;
  for (size_t n = 0; n + 1 < T.num_levels(); ++n) {
    std::vector<size_t> pushed(T.levels[n].num_vertices());
    for (size_t v = 0; v < pushed.size(); ++v) pushed[v] = T.projections[n + 1][T.bonds[n][v]];
    ExtDist d = ls_distance(T.projections[n], pushed, M);
    if (d.is_inf()) rep.ok = false;
    rep.ls_step.push_back(d);
  }
  for (size_t n = 0; n < T.num_levels(); ++n) {
    auto b = bounded_simplices_check(T.projections[n], T.levels[n], M, ExtDist::infinity());
    if (b.max_diameter.is_inf()) rep.ok = false;
    rep.simplex_diameter.push_back(b.max_diameter);
  }
  return rep;
}

ProjectionReport verify_projections(const GraphTower& T) {
  if (!T.space || T.projections.size() != T.num_levels())
    throw std::invalid_argument("verify_projections: tower has no projections");
  ProjectionReport rep;
  const auto& M = *T.space;
  for (size_t n = 0; n + 1 < T.num_levels(); ++n) {
    std::vector<size_t> pushed(T.levels[n].num_vertices());
    for (size_t v = 0; v < pushed.size(); ++v) pushed[v] = T.projections[n + 1][T.bonds[n][v]];
    ExtDist d = ls_distance(T.projections[n], pushed, M);
    if (d.is_inf()) rep.ok = false;
    rep.ls_step.push_back(d);
  }
  for (size_t n = 0; n < T.num_levels(); ++n) {
    ExtDist diam;
    for (auto [u, v] : T.levels[n].edges)
      diam = ExtDist::max(diam, M.dist(T.projections[n][u], T.projections[n][v]));
    if (diam.is_inf()) rep.ok = false;
    rep.simplex_diameter.push_back(diam);
  }
  return rep;
}

bool PreMorphismReport::all_witnessed() const {
  for (const auto& w : witness)
    if (!w) return false;
  return true;
}

bool EquivalenceReport::all_witnessed() const {
  for (const auto& w : witness)
    if (!w) return false;
  return true;
}

namespace {

void validate_premorphism(const PreMorphism& F) {
  if (!F.source || !F.target) throw std::invalid_argument("unbound pre-morphism");
  size_t L = F.source->num_levels();
  if (F.level_of.size() != L || F.maps.size() != L)
    throw std::invalid_argument("pre-morphism must assign a level and map per source level");
  for (size_t k = 0; k < L; ++k) {
    if (F.level_of[k] >= F.target->num_levels())
      throw std::invalid_argument("pre-morphism level out of range");
    if (k && F.level_of[k] < F.level_of[k - 1])
      throw std::invalid_argument("pre-morphism levels must be nondecreasing");
    if (F.maps[k].size() != F.source->levels[k].num_vertices())
      throw std::invalid_argument("pre-morphism map is not total");
  }
}

std::vector<size_t> push_forward(const ComplexTower& target, const std::vector<size_t>& f,
                                 size_t from_level, size_t to_level) {
  auto j = target.bond(from_level, to_level);
  std::vector<size_t> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = j[f[i]];
  return out;
}

} // namespace

PreMorphismReport premorphism_check(const PreMorphism& F) {
  validate_premorphism(F);
  PreMorphismReport rep;
  const auto& S = *F.source;
  const auto& W = *F.target;
  for (size_t k = 0; k < S.num_levels(); ++k) {
    SimplicialMap f;
    f.source = &S.levels[k];
    f.target = &W.levels[F.level_of[k]];
    f.verts = F.maps[k];
    if (!is_simplicial(f).ok) rep.maps_simplicial = false;
  }
  for (size_t k = 0; k + 1 < S.num_levels(); ++k) {
    std::optional<size_t> found;
    // f_{k+1} o i_{k,k+1}
    std::vector<size_t> stepped(S.levels[k].num_vertices());
    for (size_t v = 0; v < stepped.size(); ++v) stepped[v] = F.maps[k + 1][S.bonds[k][v]];
    size_t lo = std::max(F.level_of[k], F.level_of[k + 1]);
    for (size_t m = lo; m < W.num_levels(); ++m) {
      SimplicialMap a, b;
      a.source = &S.levels[k];
      a.target = &W.levels[m];
      a.verts = push_forward(W, F.maps[k], F.level_of[k], m);
      b.source = &S.levels[k];
      b.target = &W.levels[m];
      b.verts = push_forward(W, stepped, F.level_of[k + 1], m);
      if (are_contiguous(a, b).ok) {
        found = m;
        break;
      }
    }
    rep.witness.push_back(found);
  }
  return rep;
}

EquivalenceReport premorphisms_equivalent(const PreMorphism& F, const PreMorphism& G) {
  validate_premorphism(F);
  validate_premorphism(G);
  if (F.source != G.source || F.target != G.target)
    throw std::invalid_argument("premorphisms_equivalent: endpoint mismatch");
  EquivalenceReport rep;
  const auto& S = *F.source;
  const auto& W = *F.target;
  for (size_t k = 0; k < S.num_levels(); ++k) {
    std::optional<size_t> found;
    size_t lo = std::max(F.level_of[k], G.level_of[k]);
    for (size_t m = lo; m < W.num_levels(); ++m) {
      SimplicialMap a, b;
      a.source = &S.levels[k];
      a.target = &W.levels[m];
      a.verts = push_forward(W, F.maps[k], F.level_of[k], m);
      b.source = &S.levels[k];
      b.target = &W.levels[m];
      b.verts = push_forward(W, G.maps[k], G.level_of[k], m);
      if (are_contiguous(a, b).ok) {
        found = m;
        break;
      }
    }
    rep.witness.push_back(found);
  }
  return rep;
}

namespace {

void validate_graph_premorphism(const GraphPreMorphism& F) {
  if (!F.source || !F.target) throw std::invalid_argument("unbound pre-morphism");
  size_t L = F.source->num_levels();
  if (F.level_of.size() != L || F.maps.size() != L)
    throw std::invalid_argument("pre-morphism must assign a level and map per source level");
  for (size_t k = 0; k < L; ++k) {
    if (F.level_of[k] >= F.target->num_levels())
      throw std::invalid_argument("pre-morphism level out of range");
    if (k && F.level_of[k] < F.level_of[k - 1])
      throw std::invalid_argument("pre-morphism levels must be nondecreasing");
    if (F.maps[k].size() != F.source->levels[k].num_vertices())
      throw std::invalid_argument("pre-morphism map is not total");
  }
}

std::vector<size_t> push_forward_graph(const GraphTower& target, const std::vector<size_t>& f,
                                       size_t from_level, size_t to_level) {
  auto j = target.bond(from_level, to_level);
  std::vector<size_t> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = j[f[i]];
  return out;
}

} // namespace

PreMorphismReport premorphism_check(const GraphPreMorphism& F) {
  validate_graph_premorphism(F);
  PreMorphismReport rep;
  const auto& S = *F.source;
  const auto& W = *F.target;
  for (size_t k = 0; k < S.num_levels(); ++k)
    if (!is_short(F.maps[k], S.levels[k], W.levels[F.level_of[k]]).ok) rep.maps_simplicial = false;
  std::vector<std::optional<FiniteMetricSpace>> metric(W.num_levels());
  auto metric_of = [&](size_t m) -> const FiniteMetricSpace& {
    if (!metric[m]) metric[m] = graph_metric(W.levels[m]);
    return *metric[m];
  };
  for (size_t k = 0; k + 1 < S.num_levels(); ++k) {
    std::optional<size_t> found;
    std::vector<size_t> stepped(S.levels[k].num_vertices());
    for (size_t v = 0; v < stepped.size(); ++v) stepped[v] = F.maps[k + 1][S.bonds[k][v]];
    size_t lo = std::max(F.level_of[k], F.level_of[k + 1]);
    for (size_t m = lo; m < W.num_levels(); ++m) {
      auto a = push_forward_graph(W, F.maps[k], F.level_of[k], m);
      auto b = push_forward_graph(W, stepped, F.level_of[k + 1], m);
      if (!ls_distance(a, b, metric_of(m)).is_inf()) {
        found = m;
        break;
      }
    }
    rep.witness.push_back(found);
  }
  return rep;
}

EquivalenceReport premorphisms_equivalent(const GraphPreMorphism& F, const GraphPreMorphism& G) {
  validate_graph_premorphism(F);
  validate_graph_premorphism(G);
  if (F.source != G.source || F.target != G.target)
    throw std::invalid_argument("premorphisms_equivalent: endpoint mismatch");
  EquivalenceReport rep;
  const auto& S = *F.source;
  const auto& W = *F.target;
  std::vector<std::optional<FiniteMetricSpace>> metric(W.num_levels());
  auto metric_of = [&](size_t m) -> const FiniteMetricSpace& {
    if (!metric[m]) metric[m] = graph_metric(W.levels[m]);
    return *metric[m];
  };
  for (size_t k = 0; k < S.num_levels(); ++k) {
    std::optional<size_t> found;
    size_t lo = std::max(F.level_of[k], G.level_of[k]);
    for (size_t m = lo; m < W.num_levels(); ++m) {
      auto a = push_forward_graph(W, F.maps[k], F.level_of[k], m);
      auto b = push_forward_graph(W, G.maps[k], G.level_of[k], m);
      if (!ls_distance(a, b, metric_of(m)).is_inf()) {
        found = m;
        break;
      }
    }
    rep.witness.push_back(found);
  }
  return rep;
}

} // namespace coarse
