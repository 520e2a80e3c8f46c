#pragma once

#include "coarse/extdist.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Finite metric space with possibly-infinite distances. The table is
/// stored flat; everything downstream addresses points by index into `ids`.
/// Coordinates are kept when the space came from a point cloud (some cover
/// constructions use them).
struct FiniteMetricSpace {
  std::vector<std::string> ids;
  std::vector<ExtDist> table; // n*n, row-major
  std::vector<std::vector<double>> coords; // empty unless built from points

  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> point_ids, std::vector<ExtDist> dist_table);

  size_t size() const { return ids.size(); }
  const ExtDist& dist(size_t i, size_t j) const { return table[i * size() + j]; }
  ExtDist& dist(size_t i, size_t j) { return table[i * size() + j]; }

  /// Throws std::out_of_range with the offending id.
  size_t index_of(const std::string& id) const;

  ExtDist diameter() const;
};

/// Integer interval {lo..hi} with |i-j| distances; ids are the integers.
FiniteMetricSpace integer_interval(long long lo, long long hi);
/// Euclidean or Chebyshev metric over coordinate rows.
enum class PointMetric { Euclidean, Chebyshev };
FiniteMetricSpace point_cloud_space(std::vector<std::string> ids,
                                    std::vector<std::vector<double>> coords,
                                    PointMetric kind);
/// Chebyshev variant with exact integer coordinates stays exact.
FiniteMetricSpace integer_grid(long long w, long long h);

struct CoverMember {
  std::string name;
  std::vector<size_t> points; // sorted, unique, nonempty
};

struct Cover {
  std::vector<CoverMember> members;
};

/// Throws std::invalid_argument if a member is empty, repeats points or
/// falls outside the space; returns normally otherwise. `require_cover`
/// additionally demands the union be everything.
void validate_cover(const FiniteMetricSpace& M, const Cover& U, bool require_cover = true);

struct PointMap {
  const FiniteMetricSpace* source = nullptr;
  const FiniteMetricSpace* target = nullptr;
  std::vector<size_t> assignment; // total on source indices
};

struct DistortionProfile {
  std::vector<std::pair<ExtDist, ExtDist>> samples; // (t, s(t)), monotone in t
};

struct MetricValidation {
  bool ok = true;
  std::string axiom;                 // "zero-diagonal" | "separation" | "symmetry" | "triangle"
  std::array<size_t, 3> witness{};   // points involved (unused slots repeat)
  std::string message;
};

/// Checks the metric axioms; reports the first violation found in a fixed
/// scan order. Squareness is enforced structurally by the constructor.
MetricValidation validate_metric(const FiniteMetricSpace& M);

/// Closed ball { y : d(x,y) <= r }, ascending indices.
std::vector<size_t> ball(const FiniteMetricSpace& M, size_t x, const ExtDist& r);
/// Id-based convenience; throws std::out_of_range on unknown ids.
std::vector<size_t> ball(const FiniteMetricSpace& M, const std::string& id, const ExtDist& r);

ExtDist diameter_of(const FiniteMetricSpace& M, const std::vector<size_t>& subset);

/// Maximum member diameter.
ExtDist mesh(const FiniteMetricSpace& M, const Cover& U);

/// Largest r such that every closed r-ball fits in some member; scans the
/// realized distances. Zero when even the smallest positive radius fails.
ExtDist lebesgue_ball(const FiniteMetricSpace& M, const Cover& U);

struct LebesgueResult {
  ExtDist value;
  bool exact = true; // false: enumeration budget ran out, value is the ball lower bound
};

/// Largest r such that every subset of diameter <= r lies in some member,
/// via maximal cliques of the distance-<=-r relation. Budget caps clique
/// enumeration nodes; on exhaustion the ball bound is returned with
/// exact=false.
LebesgueResult lebesgue_exact(const FiniteMetricSpace& M, const Cover& U, size_t budget = 2'000'000);

struct TGeodesicResult {
  bool ok = true;
  std::optional<std::pair<size_t, size_t>> witness; // violating pair
};

/// True iff every finite-distance pair is joined by a chain with gaps <= t
/// whose length sum equals the distance (shortest paths over the gap
/// relation, summed original distances).
TGeodesicResult is_t_geodesic(const FiniteMetricSpace& M, const ExtDist& t);

/// For each t in ascending `ts`: max target distance over source pairs at
/// distance <= t (zero if none).
DistortionProfile distortion_profile(const PointMap& f, const std::vector<ExtDist>& ts);

/// sup over x of target distance between f(x) and g(x). Throws on
/// mismatched endpoints.
ExtDist ls_distance(const PointMap& f, const PointMap& g);
ExtDist ls_distance(const std::vector<size_t>& f, const std::vector<size_t>& g,
                    const FiniteMetricSpace& target);

/// Union of A with all members meeting A.
std::vector<size_t> star(const std::vector<size_t>& A, const Cover& U, size_t n_points);

struct StarRefinementResult {
  bool ok = true;
  std::optional<size_t> failing_member; // index into U.members
};

/// U star-refines V: for every member A of U, star(A,U) fits inside some
/// member of V.
StarRefinementResult is_star_refinement(const FiniteMetricSpace& M, const Cover& U, const Cover& V);

/// Cover of M by closed t-balls, one per point, named after the center.
Cover ball_cover(const FiniteMetricSpace& M, const ExtDist& t);

/// Point minimizing the maximum distance to `subset` (candidates restricted
/// to the subset itself); ties break to the lowest index.
size_t one_center(const FiniteMetricSpace& M, const std::vector<size_t>& subset);

/// Sorted distinct realized distances (finite ones, plus infinity if any).
std::vector<ExtDist> realized_distances(const FiniteMetricSpace& M);

} // namespace coarse
