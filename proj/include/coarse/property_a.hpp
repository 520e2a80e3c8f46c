#pragma once

#include "coarse/complex.hpp"
#include "coarse/tower.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Finitely supported probability vector over point indices with exact
/// rational weights (decimal inputs are parsed exactly, so sums check out
/// to equality, not tolerance).
struct SparseProbVector {
  std::vector<std::pair<size_t, Rat>> weights; // sorted by point, weights > 0

  Rat total() const;
  void normalize_order();
  bool operator==(const SparseProbVector& o) const { return weights == o.weights; }
};

SparseProbVector point_mass(size_t x);
SparseProbVector uniform_on(const std::vector<size_t>& pts);

/// l1 norm of the difference.
Rat l1_distance(const SparseProbVector& a, const SparseProbVector& b);

/// One probability vector per point of the space.
struct XiAssignment {
  std::vector<SparseProbVector> xi; // indexed by point

  size_t size() const { return xi.size(); }
};

struct XiVerifyReport {
  bool ok = false;
  bool norms_ok = false;
  bool support_ok = false;
  bool closeness_ok = false;
  ExtDist max_support_radius;
  Rat worst_pair_norm;                          // max over pairs d(x,y) <= R
  std::optional<std::pair<size_t, size_t>> worst_pair;
  std::optional<size_t> support_witness;        // point whose support escapes B(x,S)
  std::string note;                             // single-(R,eps) certificate caveat
};

/// All three certificate clauses: unit norms (exact), supports inside
/// B(x,S), and l1 variation <= eps across pairs at distance <= R. Strict
/// strict inequalities become <= with the achieved values reported.
XiVerifyReport verify_xi(const FiniteMetricSpace& M, const XiAssignment& A, const ExtDist& R,
                         const Rat& eps, const ExtDist& S);

/// xi_x = uniform measure on the closed ball B(x,S).
XiAssignment uniform_ball_xi(const FiniteMetricSpace& M, const ExtDist& S);

/// Per point: drop the smallest weights while their total stays under
/// eps/2, then move the dropped mass onto the heaviest retained point.
/// Changes each vector by l1 distance < eps and keeps exact unit mass.
XiAssignment truncate_xi(const XiAssignment& A, const Rat& eps);

/// Vertex-level map into the l1 geometric realization of a target complex:
/// each source vertex carries barycentric coordinates whose support spans a
/// target simplex; simplices extend linearly.
struct RealizationMap {
  std::shared_ptr<SimplicialComplex> source; // e.g. Rips_R
  std::shared_ptr<SimplicialComplex> target; // e.g. Rips_{2S+R}
  std::vector<SparseProbVector> values;      // per source vertex, over target vertices
};

struct RealizationVerifyReport {
  bool ok = false;
  bool contiguous_ok = false;  // union of simplex + supports spans a target simplex
  bool supports_span_ok = false;
  bool diameter_ok = false;    // max simplex image l1 diameter <= eps
  Rat max_simplex_diameter;
  std::optional<std::vector<uint32_t>> witness_simplex;
};

struct XiToRealization {
  RealizationMap map;
  RealizationVerifyReport report;
};

/// Builds the realization map x -> xi_x over Rips_{2S+R} and verifies the
/// two clauses (contiguity with the bonding inclusion; l1 diameters of
/// simplex images against eps, linear extensions attaining their diameter
/// at vertex pairs). Throws when verify_xi fails.
XiToRealization xi_to_realization_map(const FiniteMetricSpace& M, const XiAssignment& A,
                                      const ExtDist& R, const Rat& eps, const ExtDist& S,
                                      int dim_cap = 3);

struct XiPullback {
  XiAssignment mu;
  bool support_clause_ok = false;   // {x} u supp(mu_x) spans a target simplex
  bool closeness_clause_ok = false; // l1 variation <= eps on pairs d <= R
  Rat worst_pair_norm;
  std::optional<size_t> support_witness;
};

/// Restricts a realization map to vertices and re-derives the certificate
/// clauses at target scale S (the support bound comes from the simplex
/// containing both x and its image).
XiPullback realization_map_to_xi(const FiniteMetricSpace& M, const RealizationMap& f,
                                 const ExtDist& R, const Rat& eps, const ExtDist& S);

/// Both clauses of complex-level Property A for a candidate map from tower
/// level k into level target_level: generalized contiguity with the bond,
/// and eps-small l1 images of simplices.
RealizationVerifyReport verify_property_a_complex(const ComplexTower& T, size_t k, const Rat& eps,
                                                  const RealizationMap& f, size_t target_level);

} // namespace coarse
