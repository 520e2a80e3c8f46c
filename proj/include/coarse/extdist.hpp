#pragma once

#include "coarse/rational.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace coarse {

/// Non-negative extended distance. Holds an exact rational when the input
/// was exact, a binary64 value otherwise, or the distinguished infinity.
/// Infinity is absorbing under addition and maximal under comparison.
/// Exact-vs-exact comparisons are exact; any comparison touching a binary64
/// value uses the global tolerance to decide ties. There is no subtraction.
class ExtDist {
public:
  ExtDist() = default; // zero
  ExtDist(const Rat& r);
  ExtDist(long long n) : ExtDist(Rat(n)) {}

  static ExtDist infinity();
  static ExtDist approx(double v);
  static ExtDist exact(long long num, long long den = 1) { return ExtDist(Rat(num, den)); }

  /// Parses "inf" (any case), a rational/decimal literal (kept exact), or
  /// falls back to binary64. Throws std::invalid_argument on junk.
  static ExtDist parse(const std::string& text);

  bool is_inf() const { return inf_; }
  bool is_exact() const { return !inf_ && exact_; }
  double value() const { return inf_ ? std::numeric_limits<double>::infinity() : approx_; }
  const Rat& rat() const; // pre: is_exact()

  friend ExtDist operator+(const ExtDist& a, const ExtDist& b);
  ExtDist times(long long k) const; // k >= 0 scaling

  /// -1 / 0 / 1. Infinity compares greater than every finite value and
  /// equal to itself.
  static int compare(const ExtDist& a, const ExtDist& b);
  friend bool operator<(const ExtDist& a, const ExtDist& b) { return compare(a, b) < 0; }
  friend bool operator<=(const ExtDist& a, const ExtDist& b) { return compare(a, b) <= 0; }
  friend bool operator>(const ExtDist& a, const ExtDist& b) { return compare(a, b) > 0; }
  friend bool operator>=(const ExtDist& a, const ExtDist& b) { return compare(a, b) >= 0; }
  friend bool operator==(const ExtDist& a, const ExtDist& b) { return compare(a, b) == 0; }
  friend bool operator!=(const ExtDist& a, const ExtDist& b) { return compare(a, b) != 0; }

  static const ExtDist& max(const ExtDist& a, const ExtDist& b) { return compare(a, b) >= 0 ? a : b; }
  static const ExtDist& min(const ExtDist& a, const ExtDist& b) { return compare(a, b) <= 0 ? a : b; }

  /// "inf", exact "n/d", or a decimal rendering of the binary64 value.
  std::string str() const;

  static double tolerance();
  static void set_tolerance(double t);

private:
  bool inf_ = false;
  bool exact_ = true;
  Rat rat_;           // valid when exact_
  double approx_ = 0; // mirror of rat_ when exact_, the value otherwise
};

} // namespace coarse
