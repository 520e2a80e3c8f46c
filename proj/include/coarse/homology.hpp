#pragma once

#include "coarse/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coarse {

/// Arithmetic in GF(p), p prime (2 is the default throughout).
struct GF {
  uint32_t p;
  explicit GF(uint32_t prime);
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t{a} * b) % p);
  }
  uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
  uint32_t inv(uint32_t a) const;
};

bool is_prime(uint32_t n);

/// Sparse column: (row, coeff) pairs sorted by row, coeffs nonzero.
using SparseCol = std::vector<std::pair<uint32_t, uint32_t>>;

/// y += c*x over GF(p), merged by row.
SparseCol axpy(const GF& f, const SparseCol& y, const SparseCol& x, uint32_t c);

/// Incremental column reducer with pivot = largest row index. Feeding the
/// columns of a matrix gives its rank; companion tracking (optional) yields
/// kernel combinations.
class ColumnReducer {
public:
  explicit ColumnReducer(GF f) : f_(f) {}
  /// Reduces c in place against stored columns; stores it and returns true
  /// if it survives (rank grew), returns false if it vanished.
  bool add(SparseCol c);
  size_t rank() const { return cols_.size(); }

private:
  GF f_;
  std::vector<SparseCol> cols_;
  std::unordered_map<uint32_t, uint32_t> pivot_col_;
};

size_t sparse_rank(const GF& f, const std::vector<SparseCol>& cols);

/// Kernel basis of the matrix with the given columns, expressed as
/// combinations of column indices.
std::vector<SparseCol> sparse_kernel(const GF& f, const std::vector<SparseCol>& cols);

/// Chain complex of K over GF(prime) up to dimension p_top, with reduced
/// homology's augmentation as the boundary of dimension 0. Bases are the
/// lexicographically sorted simplex lists; boundaries carry alternating
/// signs in the sorted-vertex orientation.
struct FieldChainComplex {
  uint32_t prime = 2;
  int p_top = 0;
  std::vector<std::vector<std::vector<uint32_t>>> basis; // basis[p]
  std::vector<std::vector<SparseCol>> boundary;          // boundary[p]: C_p -> C_{p-1}; boundary[0] = augmentation

  size_t basis_index(int p, const std::vector<uint32_t>& simplex) const; // SIZE_MAX if absent
};

/// Throws std::invalid_argument when prime is not prime. Verifies dd = 0.
FieldChainComplex chain_complex(const SimplicialComplex& K, int p_top, uint32_t prime = 2);

struct BettiReport {
  std::vector<size_t> betti;         // unreduced b_p, p = 0..p_max
  std::vector<size_t> reduced_betti; // tilde b_p
  std::vector<size_t> simplex_counts;
  int dim_cap = 0; // cap in force; ranks above it are about the stored complex
};

BettiReport betti(const SimplicialComplex& K, int p_max, uint32_t prime = 2);

struct InducedMapReport {
  std::vector<size_t> rank;          // rank of reduced H_p(f), p = 0..p_max
  std::vector<size_t> betti_source;  // reduced
  std::vector<size_t> betti_target;  // reduced
  std::vector<bool> trivial;         // rank == 0
  bool all_trivial(int up_to) const;
};

/// Ranks of the maps induced on reduced homology by a simplicial map.
/// Degenerate simplex images map to zero; odd-prime coefficients carry the
/// permutation sign of the image ordering.
InducedMapReport induced_map(const SimplicialMap& f, int p_max, uint32_t prime = 2);

struct ConnectivityProfile {
  int n = 1;
  uint32_t prime = 2;
  /// ranks[k][m-k][p] = rank of reduced H_p of the bond level k -> level m.
  std::vector<std::vector<std::vector<size_t>>> ranks;
  /// Least stored m >= k with all ranks 0 for p <= n (m == k means the
  /// level's own reduced homology already vanishes); nullopt if none.
  std::vector<std::optional<size_t>> witness;
  bool all_levels_witnessed() const;
  bool space_has_inf_distances = false; // report note, injectivity caveat
};

struct ComplexTower; // tower.hpp

ConnectivityProfile connectivity_profile(const ComplexTower& T, int n, uint32_t prime = 2);

/// Connectivity of the distance-<=-t relation by union-find.
bool is_t_chain_connected(const FiniteMetricSpace& M, const ExtDist& t);

} // namespace coarse
