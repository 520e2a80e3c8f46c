#pragma once

#include "coarse/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coarse {

/// Group presented through canonical element strings. Implementations must
/// make canon() idempotent so string equality decides element equality.
/// super_generators() is a fixed symmetric generating set whose word metric
/// is the reference metric for truncated balls.
class GroupOracle {
public:
  virtual ~GroupOracle() = default;
  virtual std::string name() const = 0;
  virtual std::string identity() const = 0;
  virtual std::string mul(const std::string& a, const std::string& b) const = 0;
  virtual std::string inv(const std::string& a) const = 0;
  virtual std::string canon(const std::string& a) const = 0;
  virtual std::vector<std::string> super_generators() const = 0;
};

/// "z", "z2", "z3", "cyclic:n", "free2". Throws on unknown specs.
std::unique_ptr<GroupOracle> make_group_oracle(const std::string& spec);

/// Spot-checks the group axioms on ball elements (identity, inverses,
/// associativity samples). Throws std::runtime_error on a failure.
void spot_check_oracle(const GroupOracle& O, int radius = 2);

struct CayleyBall {
  Graph graph;              // vertices: ball of the super-generator word metric
  FiniteMetricSpace metric; // word metric of the super-generators, restricted
};

/// Vertices are all products of at most `radius` super-generators; edges
/// [g, g*s] for s in S when both ends lie in the ball; the metric is the
/// super-generator word metric restricted to the ball (all tower levels over
/// one oracle share this vertex set, so bonding maps are identities).
/// Throws if S contains the identity or is not closed under inversion.
CayleyBall cayley_graph(const GroupOracle& O, const std::vector<std::string>& S, int radius);

} // namespace coarse
