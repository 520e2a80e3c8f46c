#include "coarse/asdim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coarse {

int multiplicity(const FiniteMetricSpace& M, const Cover& U) {
  validate_cover(M, U, false);
  std::vector<int> count(M.size(), 0);
  for (const auto& m : U.members)
    for (size_t p : m.points) ++count[p];
  int mult = 0;
  for (int c : count) mult = std::max(mult, c);
  return mult;
}

FactorizationCheck reverify(FactorizationWitness& W) {
  if (!W.source || !W.target || !W.mid) throw std::invalid_argument("reverify: incomplete witness");
  SimplicialMap f, g, h;
  f.source = W.source.get();
  f.target = W.target.get();
  f.verts.resize(W.source->num_vertices());
  std::iota(f.verts.begin(), f.verts.end(), size_t{0});
  g.source = W.source.get();
  g.target = W.mid.get();
  g.verts = W.g;
  h.source = W.mid.get();
  h.target = W.target.get();
  h.verts = W.h;
  auto chk = verify_contiguous_factorization(f, g, h);
  W.verified = chk.ok;
  W.mid_dim = chk.mid_true_dim;
  return chk;
}

CoverWitness factorization_to_cover(const FiniteMetricSpace& M, const ExtDist& t,
                                    const FactorizationWitness& W) {
  if (!W.verified) throw std::invalid_argument("factorization_to_cover: witness is not verified");
  if (W.t != t) throw std::invalid_argument("factorization_to_cover: scale mismatch");
  if (!W.source || W.source->num_vertices() != M.size())
    throw std::invalid_argument("factorization_to_cover: witness source does not match the space");

  std::map<size_t, std::vector<size_t>> preimage; // mid vertex -> points
  for (size_t x = 0; x < W.g.size(); ++x) preimage[W.g[x]].push_back(x);

  CoverWitness out;
  for (const auto& [l, pts] : preimage) {
    std::vector<char> in(M.size(), 0);
    for (size_t x : pts)
      for (size_t y : ball(M, x, t)) in[y] = 1;
    CoverMember mem;
    mem.name = "W(" + W.mid->vertex_ids[l] + ")";
    for (size_t y = 0; y < M.size(); ++y)
      if (in[y]) mem.points.push_back(y);
    out.cover.members.push_back(std::move(mem));
  }
  out.multiplicity = multiplicity(M, out.cover);
  out.mesh_value = mesh(M, out.cover);
  out.lebesgue = lebesgue_ball(M, out.cover);
  out.mult_bound_ok = out.multiplicity <= W.mid->true_dim() + 1;
  return out;
}

namespace {

std::vector<size_t> identity_assignment(size_t n) {
  std::vector<size_t> f(n);
  std::iota(f.begin(), f.end(), size_t{0});
  return f;
}

/// g(x) = first member containing ball(x,t); SIZE_MAX when none exists.
std::vector<size_t> first_member_assignment(const FiniteMetricSpace& M, const Cover& V,
                                            const ExtDist& t) {
  std::vector<size_t> g(M.size(), SIZE_MAX);
  for (size_t x = 0; x < M.size(); ++x) {
    auto b = ball(M, x, t);
    for (size_t j = 0; j < V.members.size(); ++j) {
      const auto& pts = V.members[j].points;
      if (std::includes(pts.begin(), pts.end(), b.begin(), b.end())) {
        g[x] = j;
        break;
      }
    }
  }
  return g;
}

std::vector<size_t> member_centers(const FiniteMetricSpace& M, const Cover& V) {
  std::vector<size_t> h;
  h.reserve(V.members.size());
  for (const auto& mem : V.members) h.push_back(one_center(M, mem.points));
  return h;
}

} // namespace

FactorizationWitness cover_to_factorization(const FiniteMetricSpace& M, const Cover& V,
                                            const ExtDist& t, int dim_cap) {
  validate_cover(M, V);
  ExtDist leb = lebesgue_ball(M, V);
  if (leb < t)
    throw std::invalid_argument("cover_to_factorization: lebesgue_ball " + leb.str() +
                                " is below the scale " + t.str());
  ExtDist m = mesh(M, V);
  if (m.is_inf()) throw std::invalid_argument("cover_to_factorization: cover is not uniformly bounded");
  ExtDist s = m + m + t;

  FactorizationWitness W;
  W.t = t;
  W.s = s;
  W.family = "nerve-cover";
  W.source = std::make_shared<SimplicialComplex>(rips_complex(M, t, dim_cap));
  W.target = std::make_shared<SimplicialComplex>(rips_complex(M, s, dim_cap));
  W.mid = std::make_shared<SimplicialComplex>(nerve(M, V, kNoCap));
  W.g = first_member_assignment(M, V, t);
  for (size_t x = 0; x < W.g.size(); ++x)
    if (W.g[x] == SIZE_MAX) throw std::logic_error("cover_to_factorization: unassigned point");
  W.h = member_centers(M, V);
  reverify(W);
  return W;
}

// ---------------------------------------------------------------------------
// factorization search
// ---------------------------------------------------------------------------

namespace {

long long ceil_int(const ExtDist& d) {
  if (d.is_inf()) throw std::invalid_argument("ceil_int: infinite");
  if (d.is_exact()) {
    const Rat& r = d.rat();
    return (r.num() + r.den() - 1) / r.den();
  }
  return static_cast<long long>(std::ceil(d.value() - ExtDist::tolerance()));
}

struct PartitionCandidate {
  std::string family;
  std::vector<uint32_t> block_of; // per source vertex
};

void relabel_blocks(std::vector<uint32_t>& block_of) {
  std::map<uint32_t, uint32_t> remap;
  for (uint32_t b : block_of) remap.emplace(b, 0);
  uint32_t next = 0;
  for (auto& [old_label, fresh] : remap) fresh = next++;
  for (auto& b : block_of) b = remap[b];
}

std::vector<long long> width_sweep(long long T) {
  std::vector<long long> ws = {T, T + 1, 2 * T, 2 * T + 1, 3 * T + 2};
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

/// Integer coordinates per point when the space has integral coords of the
/// given dimension; nullopt otherwise.
std::optional<std::vector<std::vector<long long>>> integral_coords(const FiniteMetricSpace& M,
                                                                   size_t want_dim) {
  if (M.coords.size() != M.size() || M.size() == 0) return std::nullopt;
  if (M.coords[0].size() != want_dim) return std::nullopt;
  std::vector<std::vector<long long>> out(M.size());
  for (size_t i = 0; i < M.size(); ++i) {
    out[i].resize(want_dim);
    for (size_t k = 0; k < want_dim; ++k) {
      double c = M.coords[i][k];
      if (c != std::floor(c)) return std::nullopt;
      out[i][k] = static_cast<long long>(c);
    }
  }
  return out;
}

void add_interval_partitions(std::vector<PartitionCandidate>& out, const FiniteMetricSpace& M,
                             long long T) {
  auto coords = integral_coords(M, 1);
  if (!coords) return;
  long long xmin = (*coords)[0][0];
  for (const auto& c : *coords) xmin = std::min(xmin, c[0]);
  for (long long w : width_sweep(T))
    for (long long phi : {0LL, w / 2}) {
      PartitionCandidate cand;
      cand.family = "interval-partition w=" + std::to_string(w) + " phi=" + std::to_string(phi);
      cand.block_of.resize(M.size());
      for (size_t i = 0; i < M.size(); ++i)
        cand.block_of[i] = static_cast<uint32_t>(((*coords)[i][0] - xmin + phi) / w);
      out.push_back(std::move(cand));
    }
}

void add_brick_partitions(std::vector<PartitionCandidate>& out, const FiniteMetricSpace& M,
                          long long T) {
  auto coords = integral_coords(M, 2);
  if (!coords) return;
  long long xmin = (*coords)[0][0], ymin = (*coords)[0][1];
  for (const auto& c : *coords) {
    xmin = std::min(xmin, c[0]);
    ymin = std::min(ymin, c[1]);
  }
  // Brick-wall partitions: rows of w x h bricks, odd rows shifted by w/2.
  std::vector<std::pair<long long, long long>> shapes = {
      {2 * T, T}, {2 * T + 2, T + 1}, {4 * T, 2 * T}};
  for (auto [w, h] : shapes) {
    PartitionCandidate cand;
    cand.family = "brick-partition " + std::to_string(w) + "x" + std::to_string(h);
    cand.block_of.resize(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
      long long x = (*coords)[i][0] - xmin, y = (*coords)[i][1] - ymin;
      long long row = y / h;
      long long shift = (row % 2) * (w / 2);
      long long col = (x + shift) / w; // x >= 0, shift >= 0
      cand.block_of[i] = static_cast<uint32_t>(row * 4096 + col);
    }
    out.push_back(std::move(cand));
  }
}

/// Union-find components of the distance-<=-gap relation restricted to a
/// point class given by `cls` (same class id = same stratum).
std::vector<uint32_t> chain_components(const FiniteMetricSpace& M, const std::vector<long long>& cls,
                                       const ExtDist& gap) {
  size_t n = M.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (cls[i] == cls[j] && M.dist(i, j) <= gap) parent[find(i)] = find(j);
  std::vector<uint32_t> block(n);
  for (size_t i = 0; i < n; ++i) block[i] = static_cast<uint32_t>(find(i));
  return block;
}

void add_band_partitions(std::vector<PartitionCandidate>& out, const FiniteMetricSpace& M,
                         const ExtDist& t, long long T) {
  std::vector<size_t> roots = {0};
  std::vector<size_t> all(M.size());
  std::iota(all.begin(), all.end(), size_t{0});
  size_t center = one_center(M, all);
  if (center != 0) roots.push_back(center);
  for (size_t root : roots)
    for (long long w : width_sweep(T))
      for (long long phi : {0LL, (w + 1) / 2}) {
        std::vector<long long> band(M.size());
        for (size_t i = 0; i < M.size(); ++i) {
          const ExtDist& d = M.dist(root, i);
          if (d.is_inf()) {
            band[i] = -1; // separate stratum; components split it further
            continue;
          }
          long long di = ceil_int(d);
          band[i] = di < phi ? 0 : 1 + (di - phi) / w;
        }
        PartitionCandidate cand;
        cand.family = "band-components root=" + M.ids[root] + " w=" + std::to_string(w) +
                      " phi=" + std::to_string(phi);
        cand.block_of = chain_components(M, band, t);
        out.push_back(std::move(cand));
      }
}

void add_component_partition(std::vector<PartitionCandidate>& out, const FiniteMetricSpace& M,
                             const ExtDist& t) {
  PartitionCandidate cand;
  cand.family = "chain-components";
  cand.block_of = chain_components(M, std::vector<long long>(M.size(), 0), t);
  out.push_back(std::move(cand));
}

// Covers for the nerve route.

struct CoverCandidate {
  std::string family;
  Cover cover;
};

void add_interval_covers(std::vector<CoverCandidate>& out, const FiniteMetricSpace& M, long long T) {
  auto coords = integral_coords(M, 1);
  if (!coords) return;
  long long xmin = (*coords)[0][0], xmax = (*coords)[0][0];
  for (const auto& c : *coords) {
    xmin = std::min(xmin, c[0]);
    xmax = std::max(xmax, c[0]);
  }
  for (long long L : {4 * T + 2, 6 * T + 2}) {
    long long step = L - 2 * T;
    CoverCandidate cand;
    cand.family = "staggered-intervals L=" + std::to_string(L);
    for (long long a = xmin - L; a <= xmax; a += step) {
      CoverMember mem;
      mem.name = "I" + std::to_string((a - (xmin - L)) / step);
      for (size_t i = 0; i < M.size(); ++i)
        if ((*coords)[i][0] >= a && (*coords)[i][0] <= a + L) mem.points.push_back(i);
      if (!mem.points.empty()) cand.cover.members.push_back(std::move(mem));
    }
    out.push_back(std::move(cand));
  }
}

void add_brick_covers(std::vector<CoverCandidate>& out, const FiniteMetricSpace& M, long long T) {
  auto coords = integral_coords(M, 2);
  if (!coords) return;
  long long xmin = (*coords)[0][0], ymin = (*coords)[0][1];
  long long xmax = xmin, ymax = ymin;
  for (const auto& c : *coords) {
    xmin = std::min(xmin, c[0]);
    xmax = std::max(xmax, c[0]);
    ymin = std::min(ymin, c[1]);
    ymax = std::max(ymax, c[1]);
  }
  // Brick wall of w x h bricks expanded by margin T; odd rows shifted w/2.
  for (auto [w, h] : std::vector<std::pair<long long, long long>>{{4 * T, 2 * T}, {8 * T, 4 * T}}) {
    CoverCandidate cand;
    cand.family = "brick-cover " + std::to_string(w) + "x" + std::to_string(h) + " margin=" +
                  std::to_string(T);
    size_t idx = 0;
    for (long long row = (ymin - 2 * T - h) / h - 1; row * h <= ymax + 2 * T; ++row) {
      long long shift = ((row % 2) + 2) % 2 * (w / 2);
      for (long long col = (xmin - 2 * T - w - shift) / w - 1; col * w - shift <= xmax + 2 * T; ++col) {
        long long x0 = col * w - shift - T, x1 = col * w - shift + w - 1 + T;
        long long y0 = row * h - T, y1 = row * h + h - 1 + T;
        CoverMember mem;
        mem.name = "B" + std::to_string(idx);
        for (size_t i = 0; i < M.size(); ++i) {
          long long x = (*coords)[i][0], y = (*coords)[i][1];
          if (x >= x0 && x <= x1 && y >= y0 && y <= y1) mem.points.push_back(i);
        }
        if (!mem.points.empty()) {
          cand.cover.members.push_back(std::move(mem));
          ++idx;
        }
      }
    }
    out.push_back(std::move(cand));
  }
}

void add_greedy_ball_covers(std::vector<CoverCandidate>& out, const FiniteMetricSpace& M, long long T) {
  for (long long rho : {2 * T, 3 * T}) {
    ExtDist r{Rat(rho)};
    std::vector<char> covered(M.size(), 0);
    CoverCandidate cand;
    cand.family = "greedy-balls rho=" + std::to_string(rho);
    for (size_t x = 0; x < M.size(); ++x) {
      if (covered[x]) continue;
      auto b = ball(M, x, r);
      for (size_t y : b) covered[y] = 1;
      cand.cover.members.push_back({"G(" + M.ids[x] + ")", std::move(b)});
    }
    out.push_back(std::move(cand));
  }
}

} // namespace

SearchOutcome search_factorization(const ComplexTower& T, int n, size_t k, const SearchBudget& budget) {
  if (k >= T.num_levels()) throw std::out_of_range("search_factorization: bad level");
  SearchOutcome out;
  if (k + 1 >= T.num_levels()) return out; // no stored later level
  if (!T.space) throw std::invalid_argument("search_factorization: tower has no metric space");
  const FiniteMetricSpace& M = *T.space;
  const SimplicialComplex& src = T.levels[k];
  if (src.num_vertices() != M.size())
    throw std::invalid_argument("search_factorization: level vertices must be the points");
  // witnesses describe identity-vertex bonds; towers with relabeling bonds
  // (nerve towers) are out of scope here
  for (size_t m = k; m + 1 < T.num_levels(); ++m)
    for (size_t v = 0; v < T.bonds[m].size(); ++v)
      if (T.bonds[m][v] != v)
        throw std::invalid_argument("search_factorization: tower bonds must be identities on vertices");
  ExtDist t = k < T.scales.size() ? T.scales[k] : ExtDist(Rat(1));
  long long Ti = std::max<long long>(1, ceil_int(t));

  auto scale_of = [&](size_t m) {
    return m < T.scales.size() ? T.scales[m] : ExtDist(Rat(static_cast<long long>(m) + 1));
  };

  size_t tried = 0;
  auto spend = [&]() {
    ++tried;
    ++out.candidates_tried;
    if (tried > budget.candidates) {
      out.budget_exhausted = true;
      return false;
    }
    return true;
  };

  auto make_witness = [&](size_t m, std::shared_ptr<SimplicialComplex> mid, std::vector<size_t> g,
                          std::vector<size_t> h, const std::string& family) {
    FactorizationWitness W;
    W.t = t;
    W.s = scale_of(m);
    W.family = family;
    W.source_level = k;
    W.target_level = m;
    W.source = std::make_shared<SimplicialComplex>(T.levels[k]);
    W.target = std::make_shared<SimplicialComplex>(T.levels[m]);
    W.mid = std::move(mid);
    W.g = std::move(g);
    W.h = std::move(h);
    reverify(W);
    return W;
  };

  // Identity route: the level itself is already low-dimensional.
  if (src.true_dim() <= n) {
    size_t m = k + 1;
    auto mid = std::make_shared<SimplicialComplex>(src);
    auto W = make_witness(m, mid, identity_assignment(src.num_vertices()), T.bond(k, m),
                          "identity (level dimension <= n)");
    if (W.verified) {
      out.witness = std::move(W);
      return out;
    }
  }

  // Partition quotients: mid is the image complex of the block map, h picks
  // each block's 1-center.
  std::vector<PartitionCandidate> partitions;
  add_interval_partitions(partitions, M, Ti);
  add_brick_partitions(partitions, M, Ti);
  add_band_partitions(partitions, M, t, Ti);
  add_component_partition(partitions, M, t);

  for (auto& cand : partitions) {
    if (!spend()) return out;
    relabel_blocks(cand.block_of);
    uint32_t nblocks = 0;
    for (uint32_t b : cand.block_of) nblocks = std::max(nblocks, b + 1);

    // Image complex; reject early if a source generator hits > n+1 blocks.
    std::vector<std::vector<uint32_t>> mid_gens;
    bool too_big = false;
    for (const auto& gen : src.generators) {
      std::vector<uint32_t> img;
      for (uint32_t v : gen) img.push_back(cand.block_of[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (static_cast<int>(img.size()) > n + 1) {
        too_big = true;
        break;
      }
      mid_gens.push_back(std::move(img));
    }
    if (too_big) continue;

    std::vector<std::string> mid_ids;
    for (uint32_t b = 0; b < nblocks; ++b) mid_ids.push_back("b" + std::to_string(b));
    auto mid = std::make_shared<SimplicialComplex>(
        complex_from_maximal(std::move(mid_ids), std::move(mid_gens), kNoCap));
    if (mid->true_dim() > n) continue;

    std::vector<std::vector<size_t>> block_points(nblocks);
    for (size_t v = 0; v < cand.block_of.size(); ++v) block_points[cand.block_of[v]].push_back(v);
    std::vector<size_t> h(nblocks);
    for (uint32_t b = 0; b < nblocks; ++b) h[b] = one_center(M, block_points[b]);
    std::vector<size_t> g(cand.block_of.begin(), cand.block_of.end());

    for (size_t m = k + 1; m < T.num_levels(); ++m) {
      auto W = make_witness(m, mid, g, h, cand.family);
      if (W.verified) {
        out.witness = std::move(W);
        return out;
      }
    }
  }

  // Nerve-of-cover route (first member containing the t-ball).
  std::vector<CoverCandidate> covers;
  add_interval_covers(covers, M, Ti);
  add_brick_covers(covers, M, Ti);
  add_greedy_ball_covers(covers, M, Ti);

  for (auto& cand : covers) {
    if (!spend()) return out;
    if (cand.cover.members.empty()) continue;
    if (multiplicity(M, cand.cover) > n + 1) continue; // nerve would be too fat
    auto mid = std::make_shared<SimplicialComplex>(nerve(M, cand.cover, kNoCap));
    if (mid->true_dim() > n) continue;
    auto g = first_member_assignment(M, cand.cover, t);
    if (std::find(g.begin(), g.end(), SIZE_MAX) != g.end()) continue; // lebesgue below t
    auto h = member_centers(M, cand.cover);
    for (size_t m = k + 1; m < T.num_levels(); ++m) {
      auto W = make_witness(m, mid, g, h, cand.family);
      if (W.verified) {
        out.witness = std::move(W);
        return out;
      }
    }
  }

  // Exhaustive vertex maps for tiny levels, gated by the map budget.
  size_t nv = src.num_vertices();
  if (nv <= 10) {
    size_t maps_left = budget.map_enumeration;
    for (uint32_t j = 1; j <= std::min<size_t>(nv, static_cast<size_t>(n) + 2); ++j) {
      double total = std::pow(static_cast<double>(j), static_cast<double>(nv));
      if (total > static_cast<double>(maps_left)) {
        out.budget_exhausted = true;
        break;
      }
      std::vector<uint32_t> assign(nv, 0);
      bool done = false;
      while (!done) {
        if (maps_left == 0) {
          out.budget_exhausted = true;
          break;
        }
        --maps_left;
        PartitionCandidate cand;
        cand.family = "exhaustive j=" + std::to_string(j);
        cand.block_of = assign;
        relabel_blocks(cand.block_of);
        uint32_t nblocks = 0;
        for (uint32_t b : cand.block_of) nblocks = std::max(nblocks, b + 1);
        std::vector<std::vector<uint32_t>> mid_gens;
        bool too_big = false;
        for (const auto& gen : src.generators) {
          std::vector<uint32_t> img;
          for (uint32_t v : gen) img.push_back(cand.block_of[v]);
          std::sort(img.begin(), img.end());
          img.erase(std::unique(img.begin(), img.end()), img.end());
          if (static_cast<int>(img.size()) > n + 1) {
            too_big = true;
            break;
          }
          mid_gens.push_back(std::move(img));
        }
        if (!too_big) {
          std::vector<std::string> mid_ids;
          for (uint32_t b = 0; b < nblocks; ++b) mid_ids.push_back("b" + std::to_string(b));
          auto mid = std::make_shared<SimplicialComplex>(
              complex_from_maximal(std::move(mid_ids), std::move(mid_gens), kNoCap));
          if (mid->true_dim() <= n) {
            std::vector<std::vector<size_t>> block_points(nblocks);
            for (size_t v = 0; v < cand.block_of.size(); ++v)
              block_points[cand.block_of[v]].push_back(v);
            std::vector<size_t> h(nblocks);
            for (uint32_t b = 0; b < nblocks; ++b) h[b] = one_center(M, block_points[b]);
            std::vector<size_t> g(cand.block_of.begin(), cand.block_of.end());
            for (size_t m = k + 1; m < T.num_levels(); ++m) {
              auto W = make_witness(m, mid, g, h, cand.family);
              if (W.verified) {
                out.witness = std::move(W);
                return out;
              }
            }
          }
        }
        // next assignment in base j
        size_t pos = 0;
        while (pos < nv) {
          if (++assign[pos] < j) break;
          assign[pos] = 0;
          ++pos;
        }
        if (pos == nv) done = true;
      }
      if (out.budget_exhausted) break;
    }
  }

  return out;
}

AsdimReport asdim_report(const ComplexTower& T, int n_max, const SearchBudget& budget) {
  AsdimReport rep;
  rep.n_max = n_max;
  size_t L = T.num_levels();
  // witnessed[n][k]
  std::vector<std::vector<std::optional<FactorizationWitness>>> found(
      n_max + 1, std::vector<std::optional<FactorizationWitness>>(L));
  for (int n = 0; n <= n_max; ++n) {
    for (size_t k = 0; k + 1 < L; ++k) {
      if (n > 0 && found[n - 1][k]) {
        found[n][k] = found[n - 1][k]; // a lower-dimensional witness still works
        continue;
      }
      auto res = search_factorization(T, n, k, budget);
      rep.budget_exhausted = rep.budget_exhausted || res.budget_exhausted;
      if (res.witness) found[n][k] = std::move(res.witness);
    }
  }
  for (int n = 0; n <= n_max; ++n)
    for (size_t k = 0; k + 1 < L; ++k) {
      AsdimCell cell;
      cell.n = n;
      cell.level = k;
      cell.witnessed = found[n][k].has_value();
      if (cell.witnessed) {
        cell.family = found[n][k]->family;
        cell.mid_dim = found[n][k]->mid_dim;
        cell.target_level = found[n][k]->target_level;
      }
      rep.cells.push_back(cell);
    }
  if (L >= 2) {
    for (int n = 0; n <= n_max && !rep.headline; ++n) {
      bool all = true;
      for (size_t k = 0; k + 1 < L; ++k) all = all && found[n][k].has_value();
      if (all) {
        rep.headline = n;
        for (size_t k = 0; k + 1 < L; ++k) rep.witnesses.push_back(*found[n][k]);
      }
    }
  }
  return rep;
}

TreeProbeReport coarse_tree_probe(const FiniteMetricSpace& M, const std::vector<ExtDist>& scales,
                                  int dim_cap, uint32_t prime, const SearchBudget& budget) {
  ComplexTower T = rips_tower(M, scales, dim_cap);
  TreeProbeReport rep;
  rep.asdim = asdim_report(T, 1, budget);
  rep.asdim_headline = rep.asdim.headline;
  rep.profile = connectivity_profile(T, 1, prime);
  rep.connectivity_ok = rep.profile.all_levels_witnessed();
  bool asdim_ok = rep.asdim_headline.has_value() && *rep.asdim_headline <= 1;
  rep.pass = asdim_ok && rep.connectivity_ok;
  if (!asdim_ok)
    rep.blocking = "no asymptotic-dimension <= 1 witness within the truncation";
  else if (!rep.connectivity_ok) {
    for (size_t k = 0; k < rep.profile.witness.size(); ++k)
      if (!rep.profile.witness[k]) {
        rep.blocking = "reduced homology through degree 1 of level " + std::to_string(k) +
                       " is not killed within the truncation";
        break;
      }
  }
  return rep;
}

} // namespace coarse
