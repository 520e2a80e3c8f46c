#include "coarse/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace coarse {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax64 = std::numeric_limits<long long>::max();

} // namespace

Rat Rat::from_i128(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  if (d < 0) { n = -n; d = -d; }
  __int128 g = gcd128(n, d);
  if (g > 1) { n /= g; d /= g; }
  if (n > kMax64 || n < -kMax64 || d > kMax64)
    throw std::overflow_error("Rat: value does not fit in 64 bits");
  Rat r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rat::Rat(long long n, long long d) { *this = from_i128(n, d); }

Rat operator+(const Rat& a, const Rat& b) {
  return Rat::from_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat::from_i128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat::from_i128(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) throw std::invalid_argument("Rat: division by zero");
  return Rat::from_i128(static_cast<__int128>(a.num_) * b.den_,
                        static_cast<__int128>(a.den_) * b.num_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

int Rat::compare(const Rat& a, const Rat& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::optional<Rat> Rat::parse(std::string_view text) {
  // Trim surrounding whitespace.
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.empty()) return std::nullopt;

  bool neg = false;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }

  __int128 mantissa = 0;
  long long frac_digits = 0;
  long long exponent = 0;
  bool any_digit = false, in_frac = false, slash = false;
  __int128 denominator = 1;

  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > (static_cast<__int128>(1) << 100)) return std::nullopt;
      if (in_frac) ++frac_digits;
      any_digit = true;
    } else if (c == '.' && !in_frac && !slash) {
      in_frac = true;
    } else if (c == '/' && !slash && !in_frac && any_digit && i + 1 < text.size()) {
      slash = true;
      denominator = 0;
      for (++i; i < text.size(); ++i) {
        char d = text[i];
        if (d < '0' || d > '9') return std::nullopt;
        denominator = denominator * 10 + (d - '0');
        if (denominator > kMax64) return std::nullopt;
      }
      break;
    } else if ((c == 'e' || c == 'E') && any_digit && !slash) {
      ++i;
      bool eneg = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        eneg = text[i] == '-';
        ++i;
      }
      if (i >= text.size()) return std::nullopt;
      for (; i < text.size(); ++i) {
        char d = text[i];
        if (d < '0' || d > '9') return std::nullopt;
        exponent = exponent * 10 + (d - '0');
        if (exponent > 40) return std::nullopt;
      }
      if (eneg) exponent = -exponent;
      break;
    } else {
      return std::nullopt;
    }
  }
  if (!any_digit || denominator == 0) return std::nullopt;

  __int128 num = neg ? -mantissa : mantissa;
  __int128 den = denominator;
  long long pow10 = exponent - frac_digits;
  while (pow10 > 0) {
    num *= 10;
    if (num > (static_cast<__int128>(1) << 110) || num < -(static_cast<__int128>(1) << 110)) return std::nullopt;
    --pow10;
  }
  while (pow10 < 0) {
    den *= 10;
    if (den > (static_cast<__int128>(1) << 110)) return std::nullopt;
    ++pow10;
  }
  try {
    return from_i128(num, den);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace coarse
