#include "coarse/extdist.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace coarse {

namespace {
double g_tolerance = 1e-9;
}

double ExtDist::tolerance() { return g_tolerance; }
void ExtDist::set_tolerance(double t) {
  if (!(t >= 0)) throw std::invalid_argument("tolerance must be non-negative");
  g_tolerance = t;
}

ExtDist::ExtDist(const Rat& r) : rat_(r), approx_(r.to_double()) {
  if (r.is_negative()) throw std::invalid_argument("ExtDist: negative value");
}

ExtDist ExtDist::infinity() {
  ExtDist d;
  d.inf_ = true;
  d.exact_ = false;
  d.approx_ = std::numeric_limits<double>::infinity();
  return d;
}

ExtDist ExtDist::approx(double v) {
  if (std::isinf(v)) return infinity();
  if (std::isnan(v) || v < 0) throw std::invalid_argument("ExtDist: invalid value");
  ExtDist d;
  d.exact_ = false;
  d.approx_ = v;
  return d;
}

ExtDist ExtDist::parse(const std::string& text) {
  std::string low;
  for (char c : text) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  // trim
  size_t b = low.find_first_not_of(" \t\r\n");
  size_t e = low.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("empty distance token");
  low = low.substr(b, e - b + 1);
  if (low == "inf" || low == "+inf" || low == "infinity") return infinity();
  if (auto r = Rat::parse(low)) return ExtDist(*r);
  char* end = nullptr;
  double v = std::strtod(low.c_str(), &end);
  if (end == nullptr || *end != '\0') throw std::invalid_argument("bad distance token '" + text + "'");
  return approx(v);
}

const Rat& ExtDist::rat() const {
  if (!is_exact()) throw std::logic_error("ExtDist::rat on non-exact value");
  return rat_;
}

ExtDist operator+(const ExtDist& a, const ExtDist& b) {
  if (a.inf_ || b.inf_) return ExtDist::infinity();
  if (a.exact_ && b.exact_) {
    try {
      return ExtDist(a.rat_ + b.rat_);
    } catch (const std::overflow_error&) {
      // fall through to binary64
    }
  }
  return ExtDist::approx(a.approx_ + b.approx_);
}

ExtDist ExtDist::times(long long k) const {
  if (k < 0) throw std::invalid_argument("ExtDist::times: negative factor");
  if (inf_) return k == 0 ? ExtDist() : infinity();
  if (exact_) {
    try {
      return ExtDist(rat_ * Rat(k));
    } catch (const std::overflow_error&) {
    }
  }
  return approx(approx_ * static_cast<double>(k));
}

int ExtDist::compare(const ExtDist& a, const ExtDist& b) {
  if (a.inf_ && b.inf_) return 0;
  if (a.inf_) return 1;
  if (b.inf_) return -1;
  if (a.exact_ && b.exact_) return Rat::compare(a.rat_, b.rat_);
  double d = a.approx_ - b.approx_;
  if (std::fabs(d) <= g_tolerance) return 0;
  return d < 0 ? -1 : 1;
}

std::string ExtDist::str() const {
  if (inf_) return "inf";
  if (exact_) return rat_.str();
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", approx_);
  return buf;
}

} // namespace coarse
