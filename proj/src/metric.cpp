#include "coarse/metric.hpp"

#include "coarse/bitset_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace coarse {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> point_ids,
                                     std::vector<ExtDist> dist_table)
    : ids(std::move(point_ids)), table(std::move(dist_table)) {
  if (table.size() != ids.size() * ids.size())
    throw std::invalid_argument("distance table is not square over the point list");
}

size_t FiniteMetricSpace::index_of(const std::string& id) const {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  throw std::out_of_range("unknown point id '" + id + "'");
}

ExtDist FiniteMetricSpace::diameter() const {
  ExtDist d;
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = i + 1; j < size(); ++j) d = ExtDist::max(d, dist(i, j));
  return d;
}

FiniteMetricSpace integer_interval(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("empty interval");
  size_t n = static_cast<size_t>(hi - lo + 1);
  std::vector<std::string> ids(n);
  std::vector<ExtDist> tab(n * n);
  for (size_t i = 0; i < n; ++i) ids[i] = std::to_string(lo + static_cast<long long>(i));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      tab[i * n + j] = ExtDist(Rat(std::llabs(static_cast<long long>(i) - static_cast<long long>(j))));
  FiniteMetricSpace M(std::move(ids), std::move(tab));
  M.coords.resize(n);
  for (size_t i = 0; i < n; ++i) M.coords[i] = {static_cast<double>(lo + static_cast<long long>(i))};
  return M;
}

FiniteMetricSpace point_cloud_space(std::vector<std::string> ids,
                                    std::vector<std::vector<double>> coords,
                                    PointMetric kind) {
  size_t n = ids.size();
  if (coords.size() != n) throw std::invalid_argument("coordinate rows do not match ids");
  size_t dim = n ? coords[0].size() : 0;
  for (const auto& row : coords)
    if (row.size() != dim) throw std::invalid_argument("ragged coordinate rows");
  std::vector<ExtDist> tab(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (kind == PointMetric::Euclidean) {
        double s = 0;
        for (size_t k = 0; k < dim; ++k) {
          double d = coords[i][k] - coords[j][k];
          s += d * d;
        }
        tab[i * n + j] = ExtDist::approx(std::sqrt(s));
      } else {
        // Chebyshev on integral coordinates stays exact.
        double m = 0;
        bool integral = true;
        for (size_t k = 0; k < dim; ++k) {
          double d = std::fabs(coords[i][k] - coords[j][k]);
          m = std::max(m, d);
          if (d != std::floor(d)) integral = false;
        }
        tab[i * n + j] = integral ? ExtDist(Rat(static_cast<long long>(m))) : ExtDist::approx(m);
      }
    }
  FiniteMetricSpace M(std::move(ids), std::move(tab));
  M.coords = std::move(coords);
  return M;
}

FiniteMetricSpace integer_grid(long long w, long long h) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> coords;
  for (long long y = 0; y < h; ++y)
    for (long long x = 0; x < w; ++x) {
      ids.push_back(std::to_string(x) + "_" + std::to_string(y));
      coords.push_back({static_cast<double>(x), static_cast<double>(y)});
    }
  return point_cloud_space(std::move(ids), std::move(coords), PointMetric::Chebyshev);
}

void validate_cover(const FiniteMetricSpace& M, const Cover& U, bool require_cover) {
  std::vector<char> hit(M.size(), 0);
  for (const auto& m : U.members) {
    if (m.points.empty()) throw std::invalid_argument("cover member '" + m.name + "' is empty");
    size_t prev = SIZE_MAX;
    for (size_t p : m.points) {
      if (p >= M.size()) throw std::invalid_argument("cover member '" + m.name + "' references a missing point");
      if (prev != SIZE_MAX && p <= prev)
        throw std::invalid_argument("cover member '" + m.name + "' is not sorted/unique");
      prev = p;
      hit[p] = 1;
    }
  }
  if (require_cover)
    for (size_t i = 0; i < hit.size(); ++i)
      if (!hit[i]) throw std::invalid_argument("point '" + M.ids[i] + "' is not covered");
}

MetricValidation validate_metric(const FiniteMetricSpace& M) {
  MetricValidation r;
  size_t n = M.size();
  for (size_t i = 0; i < n; ++i) {
    if (M.dist(i, i) != ExtDist()) {
      r.ok = false;
      r.axiom = "zero-diagonal";
      r.witness = {i, i, i};
      r.message = "d(" + M.ids[i] + "," + M.ids[i] + ") != 0";
      return r;
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (M.dist(i, j) != M.dist(j, i)) {
        r.ok = false;
        r.axiom = "symmetry";
        r.witness = {i, j, j};
        r.message = "d(" + M.ids[i] + "," + M.ids[j] + ") != d(" + M.ids[j] + "," + M.ids[i] + ")";
        return r;
      }
      if (M.dist(i, j) == ExtDist()) {
        r.ok = false;
        r.axiom = "separation";
        r.witness = {i, j, j};
        r.message = "d(" + M.ids[i] + "," + M.ids[j] + ") = 0 for distinct points";
        return r;
      }
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (M.dist(i, k) > M.dist(i, j) + M.dist(j, k)) {
          r.ok = false;
          r.axiom = "triangle";
          r.witness = {i, j, k};
          r.message = "d(" + M.ids[i] + "," + M.ids[k] + ") > d(" + M.ids[i] + "," + M.ids[j] + ") + d(" +
                      M.ids[j] + "," + M.ids[k] + ")";
          return r;
        }
      }
    }
  return r;
}

std::vector<size_t> ball(const FiniteMetricSpace& M, size_t x, const ExtDist& r) {
  if (x >= M.size()) throw std::out_of_range("ball: point index out of range");
  std::vector<size_t> out;
  for (size_t y = 0; y < M.size(); ++y)
    if (M.dist(x, y) <= r) out.push_back(y);
  return out;
}

std::vector<size_t> ball(const FiniteMetricSpace& M, const std::string& id, const ExtDist& r) {
  return ball(M, M.index_of(id), r);
}

ExtDist diameter_of(const FiniteMetricSpace& M, const std::vector<size_t>& subset) {
  ExtDist d;
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      d = ExtDist::max(d, M.dist(subset[a], subset[b]));
  return d;
}

ExtDist mesh(const FiniteMetricSpace& M, const Cover& U) {
  validate_cover(M, U);
  ExtDist m;
  for (const auto& mem : U.members) m = ExtDist::max(m, diameter_of(M, mem.points));
  return m;
}

std::vector<ExtDist> realized_distances(const FiniteMetricSpace& M) {
  std::vector<ExtDist> ds;
  bool has_inf = false;
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = i + 1; j < M.size(); ++j) {
      if (M.dist(i, j).is_inf())
        has_inf = true;
      else
        ds.push_back(M.dist(i, j));
    }
  std::sort(ds.begin(), ds.end(), [](const ExtDist& a, const ExtDist& b) { return a.value() < b.value(); });
  ds.erase(std::unique(ds.begin(), ds.end(), [](const ExtDist& a, const ExtDist& b) { return a == b; }),
           ds.end());
  if (has_inf) ds.push_back(ExtDist::infinity());
  return ds;
}

namespace {

std::vector<Bits> member_masks(const Cover& U, size_t n) {
  std::vector<Bits> masks;
  masks.reserve(U.members.size());
  for (const auto& m : U.members) {
    Bits b(n);
    for (size_t p : m.points) b.set(p);
    masks.push_back(std::move(b));
  }
  return masks;
}

bool every_ball_fits(const FiniteMetricSpace& M, const std::vector<Bits>& masks, const ExtDist& r) {
  size_t n = M.size();
  for (size_t x = 0; x < n; ++x) {
    Bits bx(n);
    for (size_t y = 0; y < n; ++y)
      if (M.dist(x, y) <= r) bx.set(y);
    bool fits = false;
    for (const auto& m : masks)
      if (bx.is_subset_of(m)) {
        fits = true;
        break;
      }
    if (!fits) return false;
  }
  return true;
}

} // namespace

ExtDist lebesgue_ball(const FiniteMetricSpace& M, const Cover& U) {
  validate_cover(M, U);
  auto masks = member_masks(U, M.size());
  auto cands = realized_distances(M);
  ExtDist best; // r = 0 always works: {x} is covered
  for (const auto& r : cands) {
    if (every_ball_fits(M, masks, r))
      best = r;
    else
      break; // property is monotone decreasing in r
  }
  return best;
}

LebesgueResult lebesgue_exact(const FiniteMetricSpace& M, const Cover& U, size_t budget) {
  ExtDist lower = lebesgue_ball(M, U);
  auto masks = member_masks(U, M.size());
  size_t n = M.size();
  auto cands = realized_distances(M);

  auto property_at = [&](const ExtDist& r, bool* out_exceeded) {
    std::vector<Bits> adj(n, Bits(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (M.dist(i, j) <= r) {
          adj[i].set(j);
          adj[j].set(i);
        }
    bool exceeded = false;
    auto cliques = maximal_cliques(adj, budget, &exceeded);
    if (exceeded) {
      *out_exceeded = true;
      return false;
    }
    for (const auto& c : cliques) {
      Bits cb(n);
      for (uint32_t v : c) cb.set(v);
      bool fits = false;
      for (const auto& m : masks)
        if (cb.is_subset_of(m)) {
          fits = true;
          break;
        }
      if (!fits) return false;
    }
    return true;
  };

  // Every subset of diameter <= lebesgue_ball already fits; scan upward.
  LebesgueResult res{lower, true};
  for (const auto& r : cands) {
    if (r <= lower) continue;
    bool exceeded = false;
    bool ok = property_at(r, &exceeded);
    if (exceeded) {
      res.exact = false;
      return res;
    }
    if (ok)
      res.value = r;
    else
      break;
  }
  return res;
}

TGeodesicResult is_t_geodesic(const FiniteMetricSpace& M, const ExtDist& t) {
  size_t n = M.size();
  // Dijkstra over the gap-<=-t relation from every source.
  for (size_t s = 0; s < n; ++s) {
    std::vector<ExtDist> best(n, ExtDist::infinity());
    std::vector<char> done(n, 0);
    best[s] = ExtDist();
    for (size_t iter = 0; iter < n; ++iter) {
      size_t u = n;
      for (size_t v = 0; v < n; ++v)
        if (!done[v] && !best[v].is_inf() && (u == n || best[v] < best[u])) u = v;
      if (u == n) break;
      done[u] = 1;
      for (size_t v = 0; v < n; ++v) {
        if (done[v] || M.dist(u, v) > t) continue;
        ExtDist cand = best[u] + M.dist(u, v);
        if (cand < best[v]) best[v] = cand;
      }
    }
    for (size_t y = 0; y < n; ++y) {
      if (M.dist(s, y).is_inf()) continue;
      if (best[y] != M.dist(s, y)) return {false, std::make_pair(s, y)};
    }
  }
  return {true, std::nullopt};
}

DistortionProfile distortion_profile(const PointMap& f, const std::vector<ExtDist>& ts) {
  if (!f.source || !f.target) throw std::invalid_argument("distortion_profile: unbound map");
  if (f.assignment.size() != f.source->size())
    throw std::invalid_argument("distortion_profile: map is not total");
  for (size_t i = 1; i < ts.size(); ++i)
    if (ts[i] < ts[i - 1]) throw std::invalid_argument("distortion_profile: ts not ascending");
  DistortionProfile out;
  const auto& X = *f.source;
  const auto& Y = *f.target;
  for (const auto& t : ts) {
    ExtDist s;
    for (size_t i = 0; i < X.size(); ++i)
      for (size_t j = i + 1; j < X.size(); ++j)
        if (X.dist(i, j) <= t) s = ExtDist::max(s, Y.dist(f.assignment[i], f.assignment[j]));
    out.samples.emplace_back(t, s);
  }
  return out;
}

ExtDist ls_distance(const std::vector<size_t>& f, const std::vector<size_t>& g,
                    const FiniteMetricSpace& target) {
  if (f.size() != g.size()) throw std::invalid_argument("ls_distance: maps have different sources");
  ExtDist d;
  for (size_t i = 0; i < f.size(); ++i) d = ExtDist::max(d, target.dist(f[i], g[i]));
  return d;
}

ExtDist ls_distance(const PointMap& f, const PointMap& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("ls_distance: maps must share source and target");
  return ls_distance(f.assignment, g.assignment, *f.target);
}

std::vector<size_t> star(const std::vector<size_t>& A, const Cover& U, size_t n_points) {
  std::vector<char> in(n_points, 0), out(n_points, 0);
  for (size_t p : A) {
    in[p] = 1;
    out[p] = 1;
  }
  for (const auto& m : U.members) {
    bool meets = false;
    for (size_t p : m.points)
      if (in[p]) {
        meets = true;
        break;
      }
    if (meets)
      for (size_t p : m.points) out[p] = 1;
  }
  std::vector<size_t> res;
  for (size_t p = 0; p < n_points; ++p)
    if (out[p]) res.push_back(p);
  return res;
}

StarRefinementResult is_star_refinement(const FiniteMetricSpace& M, const Cover& U, const Cover& V) {
  validate_cover(M, U);
  validate_cover(M, V);
  auto vmasks = member_masks(V, M.size());
  for (size_t a = 0; a < U.members.size(); ++a) {
    auto st = star(U.members[a].points, U, M.size());
    Bits sb(M.size());
    for (size_t p : st) sb.set(p);
    bool inside = false;
    for (const auto& vm : vmasks)
      if (sb.is_subset_of(vm)) {
        inside = true;
        break;
      }
    if (!inside) return {false, a};
  }
  return {true, std::nullopt};
}

Cover ball_cover(const FiniteMetricSpace& M, const ExtDist& t) {
  Cover U;
  for (size_t x = 0; x < M.size(); ++x) U.members.push_back({"B(" + M.ids[x] + ")", ball(M, x, t)});
  return U;
}

size_t one_center(const FiniteMetricSpace& M, const std::vector<size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("one_center: empty subset");
  size_t best = subset[0];
  ExtDist best_r = ExtDist::infinity();
  for (size_t c : subset) {
    ExtDist r;
    for (size_t p : subset) r = ExtDist::max(r, M.dist(c, p));
    if (r < best_r) {
      best_r = r;
      best = c;
    }
  }
  return best;
}

} // namespace coarse
