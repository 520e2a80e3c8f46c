#pragma once

#include "coarse/bitset_graph.hpp"
#include "coarse/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coarse {

inline constexpr int kNoCap = 1 << 28;

/// Simplicial complex given by the antichain of its maximal vertex sets
/// ("generators"), with downward closure implicit. Generators may be larger
/// than the dimension cap; the complex's simplices are the subsets of
/// generators with at most dim_cap+1 vertices, so membership applies the
/// cap while span tests against generators stay exact above it. This keeps
/// memory proportional to the number of maximal cliques.
struct SimplicialComplex {
  std::vector<std::string> vertex_ids;
  std::vector<std::vector<uint32_t>> generators; // antichain, each sorted
  int dim_cap = 3;

  size_t num_vertices() const { return vertex_ids.size(); }
  /// Dimension of the stored (capped) complex.
  int dim() const;
  /// Dimension before capping, from the generator antichain.
  int true_dim() const;

  /// Simplex of the capped complex: fits under the cap and inside a
  /// generator. `vs` must be sorted and duplicate-free.
  bool has_simplex(const std::vector<uint32_t>& vs) const;
  /// Contained in some generator, cap ignored. This is the right test for
  /// contiguity-style conditions where the cap is a storage bound only.
  bool spans_simplex(const std::vector<uint32_t>& vs) const;

  /// All p-simplices, sorted lexicographically.
  std::vector<std::vector<uint32_t>> simplices_of_dim(int p) const;
  size_t count_simplices_up_to(int p) const;

  Graph one_skeleton() const;

  void rebuild_masks() const; // internal cache for subset tests
  mutable std::vector<Bits> generator_masks;
};

/// Complex whose generators are exactly the given maximal simplices (after
/// antichain pruning); used for hand-built and deserialized complexes.
SimplicialComplex complex_from_maximal(std::vector<std::string> vertex_ids,
                                       std::vector<std::vector<uint32_t>> maximal,
                                       int dim_cap = 3);

/// Minimal flag complex on G: generators are the maximal cliques.
SimplicialComplex flag_complex(const Graph& G, int dim_cap = 3);

SimplicialComplex rips_complex(const FiniteMetricSpace& M, const ExtDist& t, int dim_cap = 3);
SimplicialComplex rips_complex_cover(const FiniteMetricSpace& M, const Cover& U, int dim_cap = 3);

/// Augmentation: a set is a simplex iff it sits inside the closed star of
/// some vertex (computed from the edges of K). With reflag=true the result
/// is re-flagged over its own 1-skeleton instead of the literal definition.
SimplicialComplex augment_complex(const SimplicialComplex& K, bool reflag = false);

/// Nerve of a cover: vertices are member names, generators come from the
/// member sets containing each point.
SimplicialComplex nerve(const FiniteMetricSpace& M, const Cover& U, int dim_cap = 3);

struct SimplicialMap {
  const SimplicialComplex* source = nullptr;
  const SimplicialComplex* target = nullptr;
  std::vector<size_t> verts; // total vertex assignment

  std::vector<uint32_t> image_set(const std::vector<uint32_t>& simplex) const;
};

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);
SimplicialMap identity_map(const SimplicialComplex& K);

struct SimplicialCheck {
  bool ok = true;
  std::optional<std::vector<uint32_t>> witness; // failing source simplex
};

/// Image of every generator must span a simplex of the target. Generators
/// are used rather than capped maximal simplices, so the verdict matches
/// the uncapped complex for flag/nerve-style inputs.
SimplicialCheck is_simplicial(const SimplicialMap& f);

/// f(D) u g(D) must span a target simplex for every source generator D.
SimplicialCheck are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

struct FactorizationCheck {
  bool ok = false;
  int mid_dim = -1;      // capped dimension of the middle complex
  int mid_true_dim = -1; // generator dimension of the middle complex
  SimplicialCheck g_simplicial, h_simplicial, contiguity;
};

/// Checks that f is contiguous to h o g through the middle complex, with g
/// and h simplicial. Endpoint mismatches throw.
FactorizationCheck verify_contiguous_factorization(const SimplicialMap& f, const SimplicialMap& g,
                                                   const SimplicialMap& h);

struct BoundedSimplicesReport {
  bool ok = true;
  ExtDist max_diameter;
  std::optional<std::vector<uint32_t>> witness; // generator attaining the max
};

/// Max diameter of generator images under a vertex-level map into a metric
/// space; ok iff it stays under `bound`.
BoundedSimplicesReport bounded_simplices_check(const std::vector<size_t>& f, const SimplicialComplex& K,
                                               const FiniteMetricSpace& M, const ExtDist& bound);

} // namespace coarse
