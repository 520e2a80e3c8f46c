#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coarse {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator positive). Arithmetic runs through 128-bit
/// intermediates and throws std::overflow_error when a normalized result
/// does not fit back into 64 bits. Comparisons never overflow.
class Rat {
public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n) {}
  Rat(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;
  Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }

  // Exact order via cross multiplication in 128 bits.
  static int compare(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return compare(a, b) >= 0; }

  /// "7", "-3/4", "0.125", "2.5e-3". Returns nullopt on malformed text or
  /// values that do not fit (callers fall back to binary64).
  static std::optional<Rat> parse(std::string_view text);

  /// "n" when integral, otherwise "n/d".
  std::string str() const;

private:
  long long num_ = 0;
  long long den_ = 1;

  static Rat from_i128(__int128 n, __int128 d);
};

} // namespace coarse
