#include "coarse/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coarse {

int SimplicialComplex::true_dim() const {
  int d = -1;
  for (const auto& g : generators) d = std::max(d, static_cast<int>(g.size()) - 1);
  return d;
}

int SimplicialComplex::dim() const { return std::min(true_dim(), dim_cap); }

void SimplicialComplex::rebuild_masks() const {
  generator_masks.clear();
  generator_masks.reserve(generators.size());
  for (const auto& g : generators) {
    Bits b(num_vertices());
    for (uint32_t v : g) b.set(v);
    generator_masks.push_back(std::move(b));
  }
}

bool SimplicialComplex::spans_simplex(const std::vector<uint32_t>& vs) const {
  if (vs.empty()) return false;
  if (generator_masks.size() != generators.size()) rebuild_masks();
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    if (generators[gi].size() < vs.size()) continue;
    bool inside = true;
    for (uint32_t v : vs)
      if (!generator_masks[gi].test(v)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

bool SimplicialComplex::has_simplex(const std::vector<uint32_t>& vs) const {
  if (static_cast<int>(vs.size()) > dim_cap + 1) return false;
  return spans_simplex(vs);
}

std::vector<std::vector<uint32_t>> SimplicialComplex::simplices_of_dim(int p) const {
  std::vector<std::vector<uint32_t>> out;
  if (p < 0 || p > dim_cap) return out;
  size_t k = static_cast<size_t>(p) + 1;
  std::set<std::vector<uint32_t>> seen;
  std::vector<uint32_t> pick(k);
  for (const auto& g : generators) {
    if (g.size() < k) continue;
    // enumerate k-subsets of g
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      for (size_t i = 0; i < k; ++i) pick[i] = g[idx[i]];
      seen.insert(pick);
      // next combination
      size_t i = k;
      while (i > 0) {
        --i;
        if (idx[i] != i + g.size() - k) break;
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

size_t SimplicialComplex::count_simplices_up_to(int p) const {
  size_t c = 0;
  for (int q = 0; q <= std::min(p, dim()); ++q) c += simplices_of_dim(q).size();
  return c;
}

Graph SimplicialComplex::one_skeleton() const {
  Graph g;
  g.vertex_ids = vertex_ids;
  for (const auto& gen : generators)
    for (size_t a = 0; a < gen.size(); ++a)
      for (size_t b = a + 1; b < gen.size(); ++b) g.edges.emplace_back(gen[a], gen[b]);
  g.normalize();
  return g;
}

namespace {

/// Ensures every vertex appears in some generator (isolated vertices become
/// singleton generators), prunes to an antichain, sorts.
std::vector<std::vector<uint32_t>> finish_generators(std::vector<std::vector<uint32_t>> gens,
                                                     size_t n_vertices) {
  std::vector<char> seen(n_vertices, 0);
  for (auto& g : gens) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    for (uint32_t v : g) {
      if (v >= n_vertices) throw std::invalid_argument("simplex vertex out of range");
      seen[v] = 1;
    }
  }
  for (size_t v = 0; v < n_vertices; ++v)
    if (!seen[v]) gens.push_back({static_cast<uint32_t>(v)});
  return antichain(std::move(gens), n_vertices);
}

} // namespace

SimplicialComplex complex_from_maximal(std::vector<std::string> vertex_ids,
                                       std::vector<std::vector<uint32_t>> maximal, int dim_cap) {
  if (dim_cap < 1) throw std::invalid_argument("dim_cap must be >= 1");
  SimplicialComplex K;
  K.vertex_ids = std::move(vertex_ids);
  K.dim_cap = dim_cap;
  K.generators = finish_generators(std::move(maximal), K.num_vertices());
  return K;
}

SimplicialComplex flag_complex(const Graph& G, int dim_cap) {
  if (dim_cap < 1) throw std::invalid_argument("dim_cap must be >= 1");
  size_t n = G.num_vertices();
  std::vector<Bits> adj(n, Bits(n));
  for (auto [u, v] : G.edges) {
    adj[u].set(v);
    adj[v].set(u);
  }
  SimplicialComplex K;
  K.vertex_ids = G.vertex_ids;
  K.dim_cap = dim_cap;
  K.generators = maximal_cliques(adj);
  return K;
}

SimplicialComplex rips_complex(const FiniteMetricSpace& M, const ExtDist& t, int dim_cap) {
  return flag_complex(rips_graph_t(M, t), dim_cap);
}

SimplicialComplex rips_complex_cover(const FiniteMetricSpace& M, const Cover& U, int dim_cap) {
  return flag_complex(rips_graph_cover(M, U), dim_cap);
}

SimplicialComplex augment_complex(const SimplicialComplex& K, bool reflag) {
  Graph sk = K.one_skeleton();
  size_t n = sk.num_vertices();
  if (reflag) return flag_complex(augment(sk), K.dim_cap);
  auto adj = sk.adjacency();
  std::vector<std::vector<uint32_t>> gens;
  gens.reserve(n);
  for (uint32_t v = 0; v < n; ++v) {
    std::vector<uint32_t> closed_star = adj[v];
    closed_star.push_back(v);
    std::sort(closed_star.begin(), closed_star.end());
    gens.push_back(std::move(closed_star));
  }
  SimplicialComplex A;
  A.vertex_ids = K.vertex_ids;
  A.dim_cap = K.dim_cap;
  A.generators = finish_generators(std::move(gens), n);
  return A;
}

SimplicialComplex nerve(const FiniteMetricSpace& M, const Cover& U, int dim_cap) {
  validate_cover(M, U);
  SimplicialComplex N;
  for (const auto& m : U.members) N.vertex_ids.push_back(m.name);
  N.dim_cap = dim_cap;
  std::vector<std::vector<uint32_t>> gens(M.size());
  for (uint32_t mi = 0; mi < U.members.size(); ++mi)
    for (size_t p : U.members[mi].points) gens[p].push_back(mi);
  N.generators = finish_generators(std::move(gens), N.num_vertices());
  return N;
}

std::vector<uint32_t> SimplicialMap::image_set(const std::vector<uint32_t>& simplex) const {
  std::vector<uint32_t> img;
  img.reserve(simplex.size());
  for (uint32_t v : simplex) img.push_back(static_cast<uint32_t>(verts[v]));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

namespace {
bool structurally_equal(const SimplicialComplex* a, const SimplicialComplex* b) {
  if (a == b) return true;
  return a && b && a->vertex_ids == b->vertex_ids && a->generators == b->generators;
}
} // namespace

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (!structurally_equal(inner.target, outer.source))
    throw std::invalid_argument("compose: endpoint mismatch");
  SimplicialMap out;
  out.source = inner.source;
  out.target = outer.target;
  out.verts.reserve(inner.verts.size());
  for (size_t v : inner.verts) out.verts.push_back(outer.verts[v]);
  return out;
}

SimplicialMap identity_map(const SimplicialComplex& K) {
  SimplicialMap f;
  f.source = &K;
  f.target = &K;
  f.verts.resize(K.num_vertices());
  for (size_t i = 0; i < f.verts.size(); ++i) f.verts[i] = i;
  return f;
}

namespace {

void check_total(const SimplicialMap& f) {
  if (!f.source || !f.target) throw std::invalid_argument("unbound simplicial map");
  if (f.verts.size() != f.source->num_vertices())
    throw std::invalid_argument("vertex assignment is not total");
  for (size_t v : f.verts)
    if (v >= f.target->num_vertices()) throw std::invalid_argument("image vertex out of range");
}

bool same_complex(const SimplicialComplex* a, const SimplicialComplex* b) {
  return structurally_equal(a, b);
}

} // namespace

SimplicialCheck is_simplicial(const SimplicialMap& f) {
  check_total(f);
  for (const auto& g : f.source->generators) {
    auto img = f.image_set(g);
    if (!f.target->spans_simplex(img)) return {false, g};
  }
  return {true, std::nullopt};
}

SimplicialCheck are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  check_total(f);
  check_total(g);
  if (!same_complex(f.source, g.source) || !same_complex(f.target, g.target))
    throw std::invalid_argument("are_contiguous: maps must share endpoints");
  for (const auto& gen : f.source->generators) {
    auto a = f.image_set(gen);
    auto b = g.image_set(gen);
    std::vector<uint32_t> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    if (!f.target->spans_simplex(u)) return {false, gen};
  }
  return {true, std::nullopt};
}

FactorizationCheck verify_contiguous_factorization(const SimplicialMap& f, const SimplicialMap& g,
                                                   const SimplicialMap& h) {
  if (!same_complex(g.source, f.source) || !same_complex(h.target, f.target) ||
      !same_complex(g.target, h.source))
    throw std::invalid_argument("verify_contiguous_factorization: endpoint mismatch");
  FactorizationCheck out;
  out.mid_dim = g.target->dim();
  out.mid_true_dim = g.target->true_dim();
  out.g_simplicial = is_simplicial(g);
  out.h_simplicial = is_simplicial(h);
  if (!out.g_simplicial.ok || !out.h_simplicial.ok) return out;
  SimplicialMap hg = compose(h, g);
  hg.source = f.source; // structurally equal endpoints
  hg.target = f.target;
  out.contiguity = are_contiguous(f, hg);
  out.ok = out.contiguity.ok;
  return out;
}

BoundedSimplicesReport bounded_simplices_check(const std::vector<size_t>& f, const SimplicialComplex& K,
                                               const FiniteMetricSpace& M, const ExtDist& bound) {
  if (f.size() != K.num_vertices()) throw std::invalid_argument("bounded_simplices_check: partial map");
  BoundedSimplicesReport rep;
  for (const auto& g : K.generators) {
    std::vector<size_t> img;
    img.reserve(g.size());
    for (uint32_t v : g) img.push_back(f[v]);
    ExtDist d = diameter_of(M, img);
    if (d > rep.max_diameter) {
      rep.max_diameter = d;
      rep.witness = g;
    }
  }
  rep.ok = rep.max_diameter <= bound;
  return rep;
}

} // namespace coarse
