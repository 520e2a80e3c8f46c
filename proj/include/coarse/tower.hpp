#pragma once

#include "coarse/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Finite truncation of a direct sequence of complexes with simplicial
/// bonds. Consecutive bonds are stored; composites are generated, so
/// i_{n,n} = id and the composition law hold by construction and are
/// re-checked by the verifier. Optional projections land in `space`.
struct ComplexTower {
  std::vector<SimplicialComplex> levels;
  std::vector<std::string> labels;               // e.g. "t=2"
  std::vector<std::vector<size_t>> bonds;        // bonds[k]: level k -> k+1 vertex map
  std::vector<std::vector<size_t>> projections;  // per level, vertex -> point of `space`
  std::optional<FiniteMetricSpace> space;
  std::vector<ExtDist> scales; // set for Rips towers

  size_t num_levels() const { return levels.size(); }
  /// Composite vertex map level k -> level m (k <= m).
  std::vector<size_t> bond(size_t k, size_t m) const;
  SimplicialMap bond_map(size_t k, size_t m) const;
};

/// Same shape for graph towers.
struct GraphTower {
  std::vector<Graph> levels;
  std::vector<std::string> labels;
  std::vector<std::vector<size_t>> bonds;
  std::vector<std::vector<size_t>> projections;
  std::optional<FiniteMetricSpace> space;
  std::vector<ExtDist> scales;

  size_t num_levels() const { return levels.size(); }
  std::vector<size_t> bond(size_t k, size_t m) const;
};

/// Rips tower over an ascending scale ladder; bonds and projections are
/// identities on vertices. Throws on a non-ascending ladder.
ComplexTower rips_tower(const FiniteMetricSpace& M, const std::vector<ExtDist>& scales, int dim_cap = 3);
GraphTower rips_graph_tower(const FiniteMetricSpace& M, const std::vector<ExtDist>& scales);

/// Nerve tower over covers where covers[n] star-refines covers[n+1]
/// (checked; violations throw with the witness member in the message).
/// Bond sends a member to the first member of the next cover containing its
/// star; projections pick each member's first point.
ComplexTower cech_tower(const FiniteMetricSpace& M, const std::vector<Cover>& covers, int dim_cap = 3);

struct LevelWitness {
  size_t level = 0;
  std::optional<size_t> witness_m; // least stored m > level, if any
};

struct TowerVerifyReport {
  bool bonds_ok = true;          // every consecutive bond short/simplicial
  bool identity_ok = true;       // i_{n,n} = id (by construction, re-checked)
  bool composition_ok = true;    // stored triples compose
  std::vector<std::pair<size_t, std::vector<uint32_t>>> bond_failures; // (level, witness simplex/edge)
  std::vector<LevelWitness> augmentation; // per level: least m with A(level_n) -> level_m structure-preserving
  /// Everything checked holds and every level with a stored later level has
  /// an augmentation witness. The final level is a truncation artifact and
  /// is excluded from the quantifier.
  bool ok() const;
};

TowerVerifyReport verify_coarse_graph(const GraphTower& T);
TowerVerifyReport verify_coarse_complex(const ComplexTower& T);

struct ProjectionReport {
  bool ok = true;
  /// Per level n < last: ls distance between p_n and p_{n+1} o i_{n,n+1}.
  std::vector<ExtDist> ls_step;
  /// Per level: max diameter of projected generators (bornologousness).
  std::vector<ExtDist> simplex_diameter;
};

/// Throws when projections are missing.
ProjectionReport verify_projections(const ComplexTower& T);
/// Graph variant: simplex diameters become edge-image diameters.
ProjectionReport verify_projections(const GraphTower& T);

/// Level-indexed family of maps f_k : level k of source -> level n_F(k) of
/// target, n_F nondecreasing.
struct PreMorphism {
  const ComplexTower* source = nullptr;
  const ComplexTower* target = nullptr;
  std::vector<size_t> level_of;             // n_F
  std::vector<std::vector<size_t>> maps;    // f_k vertex maps
};

struct GraphPreMorphism {
  const GraphTower* source = nullptr;
  const GraphTower* target = nullptr;
  std::vector<size_t> level_of;
  std::vector<std::vector<size_t>> maps;
};

struct PreMorphismReport {
  bool maps_simplicial = true;
  /// Per level k < last: least stored m with
  /// j_{n_F(k),m} o f_k contiguous to j_{n_F(k+1),m} o f_{k+1} o i_{k,k+1}.
  std::vector<std::optional<size_t>> witness;
  bool all_witnessed() const;
};

PreMorphismReport premorphism_check(const PreMorphism& F);
/// Graph variant: witnessed when the pushed-forward maps land at finite
/// ls-distance in the target level's graph metric.
PreMorphismReport premorphism_check(const GraphPreMorphism& F);

struct EquivalenceReport {
  /// Per level k: least stored m with j_{n_F(k),m} o f_k contiguous to
  /// j_{n_G(k),m} o g_k (finite ls-distance for graph towers).
  std::vector<std::optional<size_t>> witness;
  bool all_witnessed() const;
};

EquivalenceReport premorphisms_equivalent(const PreMorphism& F, const PreMorphism& G);
EquivalenceReport premorphisms_equivalent(const GraphPreMorphism& F, const GraphPreMorphism& G);

} // namespace coarse
