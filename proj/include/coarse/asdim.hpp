#pragma once

#include "coarse/homology.hpp"
#include "coarse/tower.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Max over points of the number of members containing it.
int multiplicity(const FiniteMetricSpace& M, const Cover& U);

/// A contiguous factorization of the bond Rips_t -> Rips_s through `mid`:
/// g into the middle complex, h back out. `family` names the construction
/// that produced it; `verified` is set only by re-running the full check.
struct FactorizationWitness {
  ExtDist t, s;
  std::shared_ptr<SimplicialComplex> source; // Rips_t level
  std::shared_ptr<SimplicialComplex> target; // Rips_s level
  std::shared_ptr<SimplicialComplex> mid;
  std::vector<size_t> g; // source vertices -> mid vertices
  std::vector<size_t> h; // mid vertices -> target vertices
  bool verified = false;
  int mid_dim = -1; // generator (uncapped) dimension of mid
  std::string family;
  std::optional<size_t> source_level, target_level; // set when found inside a tower
};

/// Runs verify_contiguous_factorization on the witness's own complexes and
/// updates `verified`.
FactorizationCheck reverify(FactorizationWitness& W);

struct CoverWitness {
  Cover cover;
  int multiplicity = 0;
  ExtDist mesh_value;
  ExtDist lebesgue;
  bool mult_bound_ok = false; // multiplicity <= dim(mid)+1 for the source witness
};

/// Cover {W_l} indexed by mid vertices with nonempty g-preimage, W_l the
/// union of closed t-balls over the preimage. Requires a verified witness
/// whose source vertices are the points of M; throws otherwise.
CoverWitness factorization_to_cover(const FiniteMetricSpace& M, const ExtDist& t,
                                    const FactorizationWitness& W);

/// Converse construction: mid is the (uncapped) nerve of V, g sends x to
/// the first member containing ball(x,t) (needs lebesgue_ball(M,V) >= t,
/// checked), h sends a member to its 1-center, and the bond lands in
/// Rips_s with s = 2*mesh(V) + t. The returned witness is re-verified.
FactorizationWitness cover_to_factorization(const FiniteMetricSpace& M, const Cover& V,
                                            const ExtDist& t, int dim_cap = 3);

struct SearchBudget {
  size_t candidates = 4000;    // partition/cover candidates tried
  size_t map_enumeration = 200000; // exhaustive vertex maps considered
  size_t clique_nodes = 4000000;
};

struct SearchOutcome {
  std::optional<FactorizationWitness> witness;
  size_t candidates_tried = 0;
  bool budget_exhausted = false;
};

/// Looks for an n-dimensional contiguous factorization of the bond from
/// level k into any stored later level (tried in ascending order).
/// Strategies, in order: the level itself when its dimension is already
/// <= n; coordinate-aligned interval/brick partitions and covers when the
/// space has 1- or 2-dimensional coordinates; chain-component partitions of
/// metric annuli around a root; greedy ball covers; exhaustive vertex-map
/// enumeration for tiny levels. Every returned witness has passed
/// verify_contiguous_factorization.
SearchOutcome search_factorization(const ComplexTower& T, int n, size_t k,
                                   const SearchBudget& budget = {});

struct AsdimCell {
  int n = 0;
  size_t level = 0;
  bool witnessed = false;
  std::string family; // construction that worked
  std::optional<size_t> target_level;
  int mid_dim = -1;
};

struct AsdimReport {
  int n_max = 0;
  std::vector<AsdimCell> cells; // row-major over n, then level
  /// Least n with every non-final level witnessed; nullopt when none is
  /// (or the tower has a single level). Relative to the truncation.
  std::optional<int> headline;
  bool budget_exhausted = false;
  std::vector<FactorizationWitness> witnesses; // the ones backing the headline
};

AsdimReport asdim_report(const ComplexTower& T, int n_max, const SearchBudget& budget = {});

struct TreeProbeReport {
  bool pass = false;
  std::optional<int> asdim_headline;
  bool connectivity_ok = false;
  AsdimReport asdim;
  ConnectivityProfile profile;
  std::string blocking; // empty on PASS
  std::string label = "desk-scale probe, not a proof";
};

/// Combined probe: asdim headline <= 1 and homology 1-connectivity
/// witnessed at every level of the Rips tower over `scales`.
TreeProbeReport coarse_tree_probe(const FiniteMetricSpace& M, const std::vector<ExtDist>& scales,
                                  int dim_cap = 3, uint32_t prime = 2, const SearchBudget& budget = {});

} // namespace coarse
