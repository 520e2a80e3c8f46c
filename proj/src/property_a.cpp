#include "coarse/property_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarse {

Rat SparseProbVector::total() const {
  Rat s;
  for (const auto& [p, w] : weights) s += w;
  return s;
}

void SparseProbVector::normalize_order() {
  std::sort(weights.begin(), weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < weights.size(); ++i)
    if (weights[i].first == weights[i - 1].first)
      throw std::invalid_argument("duplicate support point in probability vector");
  for (const auto& [p, w] : weights)
    if (w.is_negative() || w.is_zero()) throw std::invalid_argument("weights must be positive");
}

SparseProbVector point_mass(size_t x) { return {{{x, Rat(1)}}}; }

SparseProbVector uniform_on(const std::vector<size_t>& pts) {
  if (pts.empty()) throw std::invalid_argument("uniform_on: empty support");
  SparseProbVector v;
  Rat w(1, static_cast<long long>(pts.size()));
  for (size_t p : pts) v.weights.emplace_back(p, w);
  v.normalize_order();
  return v;
}

Rat l1_distance(const SparseProbVector& a, const SparseProbVector& b) {
  Rat s;
  size_t i = 0, j = 0;
  while (i < a.weights.size() || j < b.weights.size()) {
    if (j == b.weights.size() ||
        (i < a.weights.size() && a.weights[i].first < b.weights[j].first)) {
      s += a.weights[i].second.abs();
      ++i;
    } else if (i == a.weights.size() || b.weights[j].first < a.weights[i].first) {
      s += b.weights[j].second.abs();
      ++j;
    } else {
      s += (a.weights[i].second - b.weights[j].second).abs();
      ++i;
      ++j;
    }
  }
  return s;
}

XiVerifyReport verify_xi(const FiniteMetricSpace& M, const XiAssignment& A, const ExtDist& R,
                         const Rat& eps, const ExtDist& S) {
  if (A.size() != M.size()) throw std::invalid_argument("verify_xi: assignment is not total");
  XiVerifyReport rep;
  rep.note = "certificate for one (R,eps) pair; the asymptotic statement needs a sweep";

  rep.norms_ok = true;
  for (const auto& v : A.xi)
    if (v.total() != Rat(1)) rep.norms_ok = false;

  rep.support_ok = true;
  for (size_t x = 0; x < A.size(); ++x) {
    for (const auto& [p, w] : A.xi[x].weights) {
      const ExtDist& d = M.dist(x, p);
      if (d > rep.max_support_radius) rep.max_support_radius = d;
      if (d > S && rep.support_ok) {
        rep.support_ok = false;
        rep.support_witness = x;
      }
    }
  }

  rep.closeness_ok = true;
  for (size_t x = 0; x < A.size(); ++x)
    for (size_t y = x + 1; y < A.size(); ++y) {
      if (M.dist(x, y) > R) continue;
      Rat nrm = l1_distance(A.xi[x], A.xi[y]);
      if (nrm > rep.worst_pair_norm) {
        rep.worst_pair_norm = nrm;
        rep.worst_pair = std::make_pair(x, y);
      }
    }
  if (rep.worst_pair_norm > eps) rep.closeness_ok = false;

  rep.ok = rep.norms_ok && rep.support_ok && rep.closeness_ok;
  return rep;
}

XiAssignment uniform_ball_xi(const FiniteMetricSpace& M, const ExtDist& S) {
  XiAssignment A;
  A.xi.reserve(M.size());
  for (size_t x = 0; x < M.size(); ++x) A.xi.push_back(uniform_on(ball(M, x, S)));
  return A;
}

XiAssignment truncate_xi(const XiAssignment& A, const Rat& eps) {
  if (eps <= Rat(0)) throw std::invalid_argument("truncate_xi: eps must be positive");
  Rat half = eps / Rat(2);
  XiAssignment out;
  out.xi.reserve(A.size());
  for (const auto& v : A.xi) {
    // ascending by weight, ties by point index
    std::vector<std::pair<size_t, Rat>> order = v.weights;
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      int c = Rat::compare(a.second, b.second);
      if (c != 0) return c < 0;
      return a.first < b.first;
    });
    Rat dropped;
    size_t cut = 0;
    while (cut + 1 < order.size() && dropped + order[cut].second < half) {
      dropped += order[cut].second;
      ++cut;
    }
    SparseProbVector w;
    for (size_t i = cut; i < order.size(); ++i) w.weights.push_back(order[i]);
    // heaviest retained point, ties to the lowest index
    size_t heavy = 0;
    for (size_t i = 1; i < w.weights.size(); ++i) {
      int c = Rat::compare(w.weights[i].second, w.weights[heavy].second);
      if (c > 0 || (c == 0 && w.weights[i].first < w.weights[heavy].first)) heavy = i;
    }
    w.weights[heavy].second += dropped;
    w.normalize_order();
    out.xi.push_back(std::move(w));
  }
  return out;
}

namespace {

std::vector<uint32_t> support_vertices(const SparseProbVector& v) {
  std::vector<uint32_t> s;
  s.reserve(v.weights.size());
  for (const auto& [p, w] : v.weights) s.push_back(static_cast<uint32_t>(p));
  return s;
}

} // namespace

XiToRealization xi_to_realization_map(const FiniteMetricSpace& M, const XiAssignment& A,
                                      const ExtDist& R, const Rat& eps, const ExtDist& S,
                                      int dim_cap) {
  auto pre = verify_xi(M, A, R, eps, S);
  if (!pre.ok) {
    std::string which = !pre.norms_ok ? "norm" : (!pre.support_ok ? "support" : "closeness");
    throw std::invalid_argument("xi_to_realization_map: certificate fails the " + which + " clause");
  }
  ExtDist big = S + S + R;
  XiToRealization out;
  out.map.source = std::make_shared<SimplicialComplex>(rips_complex(M, R, dim_cap));
  out.map.target = std::make_shared<SimplicialComplex>(rips_complex(M, big, dim_cap));
  out.map.values = A.xi;

  auto& rep = out.report;
  rep.supports_span_ok = true;
  for (size_t x = 0; x < A.size(); ++x)
    if (!out.map.target->spans_simplex(support_vertices(A.xi[x]))) rep.supports_span_ok = false;

  rep.contiguous_ok = true;
  rep.diameter_ok = true;
  for (const auto& gen : out.map.source->generators) {
    std::vector<uint32_t> u = gen;
    for (uint32_t v : gen) {
      auto s = support_vertices(A.xi[v]);
      u.insert(u.end(), s.begin(), s.end());
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (!out.map.target->spans_simplex(u)) {
      rep.contiguous_ok = false;
      if (!rep.witness_simplex) rep.witness_simplex = gen;
    }
    // linear extensions attain their l1 diameter at vertex pairs
    for (size_t a = 0; a < gen.size(); ++a)
      for (size_t b = a + 1; b < gen.size(); ++b) {
        Rat d = l1_distance(A.xi[gen[a]], A.xi[gen[b]]);
        if (d > rep.max_simplex_diameter) {
          rep.max_simplex_diameter = d;
          if (d > eps && !rep.witness_simplex) rep.witness_simplex = gen;
        }
      }
  }
  rep.diameter_ok = !(rep.max_simplex_diameter > eps);
  rep.ok = rep.contiguous_ok && rep.supports_span_ok && rep.diameter_ok;
  return out;
}

XiPullback realization_map_to_xi(const FiniteMetricSpace& M, const RealizationMap& f,
                                 const ExtDist& R, const Rat& eps, const ExtDist& S) {
  if (!f.source || !f.target) throw std::invalid_argument("realization_map_to_xi: unbound map");
  if (f.values.size() != f.source->num_vertices())
    throw std::invalid_argument("realization_map_to_xi: map is not total");
  if (f.source->num_vertices() != M.size())
    throw std::invalid_argument("realization_map_to_xi: source vertices must be the points");
  XiPullback out;
  out.mu.xi = f.values;

  out.support_clause_ok = true;
  for (size_t x = 0; x < M.size(); ++x) {
    auto s = support_vertices(f.values[x]);
    auto with_x = s;
    with_x.push_back(static_cast<uint32_t>(x));
    std::sort(with_x.begin(), with_x.end());
    with_x.erase(std::unique(with_x.begin(), with_x.end()), with_x.end());
    if (!f.target->spans_simplex(with_x)) {
      out.support_clause_ok = false;
      if (!out.support_witness) out.support_witness = x;
    }
  }
  // Supports must also sit inside B(x,S) for the stated radius.
  for (size_t x = 0; x < M.size(); ++x)
    for (const auto& [p, w] : f.values[x].weights)
      if (M.dist(x, p) > S) {
        out.support_clause_ok = false;
        if (!out.support_witness) out.support_witness = x;
      }

  out.closeness_clause_ok = true;
  for (size_t x = 0; x < M.size(); ++x)
    for (size_t y = x + 1; y < M.size(); ++y) {
      if (M.dist(x, y) > R) continue;
      Rat nrm = l1_distance(f.values[x], f.values[y]);
      if (nrm > out.worst_pair_norm) out.worst_pair_norm = nrm;
    }
  if (out.worst_pair_norm > eps) out.closeness_clause_ok = false;
  return out;
}

RealizationVerifyReport verify_property_a_complex(const ComplexTower& T, size_t k, const Rat& eps,
                                                  const RealizationMap& f, size_t target_level) {
  if (k >= T.num_levels() || target_level >= T.num_levels() || k > target_level)
    throw std::out_of_range("verify_property_a_complex: bad level pair");
  const SimplicialComplex& K = T.levels[k];
  const SimplicialComplex& L = T.levels[target_level];
  if (f.values.size() != K.num_vertices())
    throw std::invalid_argument("verify_property_a_complex: candidate is not total on the level");
  auto bond = T.bond(k, target_level);

  RealizationVerifyReport rep;
  rep.supports_span_ok = true;
  for (const auto& v : f.values)
    if (!L.spans_simplex(support_vertices(v))) rep.supports_span_ok = false;

  rep.contiguous_ok = true;
  for (const auto& gen : K.generators) {
    std::vector<uint32_t> u;
    for (uint32_t v : gen) {
      u.push_back(static_cast<uint32_t>(bond[v]));
      auto s = support_vertices(f.values[v]);
      u.insert(u.end(), s.begin(), s.end());
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (!L.spans_simplex(u)) {
      rep.contiguous_ok = false;
      if (!rep.witness_simplex) rep.witness_simplex = gen;
    }
    for (size_t a = 0; a < gen.size(); ++a)
      for (size_t b = a + 1; b < gen.size(); ++b) {
        Rat d = l1_distance(f.values[gen[a]], f.values[gen[b]]);
        if (d > rep.max_simplex_diameter) rep.max_simplex_diameter = d;
      }
  }
  rep.diameter_ok = !(rep.max_simplex_diameter > eps);
  rep.ok = rep.contiguous_ok && rep.supports_span_ok && rep.diameter_ok;
  return rep;
}

} // namespace coarse
