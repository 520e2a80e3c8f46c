#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace coarse {

/// Fixed-size bitset sized at runtime; just enough for adjacency work.
class Bits {
public:
  Bits() = default;
  explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  void set(size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  size_t count() const {
    size_t c = 0;
    for (uint64_t w : w_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
  }
  /// Index of the lowest set bit; size() if none.
  size_t first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + static_cast<size_t>(__builtin_ctzll(w_[i]));
    return n_;
  }
  size_t next(size_t after) const {
    for (size_t i = after + 1; i < n_; ++i) {
      size_t blk = i >> 6;
      uint64_t w = w_[blk] >> (i & 63);
      if (w) return i + static_cast<size_t>(__builtin_ctzll(w));
      i = ((blk + 1) << 6) - 1;
    }
    return n_;
  }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  bool is_subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  size_t intersect_count(const Bits& o) const {
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i)
      c += static_cast<size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
    return c;
  }

  std::vector<uint32_t> to_indices() const {
    std::vector<uint32_t> out;
    for (size_t i = first(); i < n_; i = next(i)) out.push_back(static_cast<uint32_t>(i));
    return out;
  }

private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

/// Bron-Kerbosch with pivoting over an adjacency-bitset view. Emits every
/// maximal clique (isolated vertices come out as singletons) in a
/// deterministic order; the caller sorts if a canonical order is needed.
/// `budget` caps recursion nodes; on exhaustion enumeration stops and
/// `exceeded` (if given) is set.
std::vector<std::vector<uint32_t>> maximal_cliques(const std::vector<Bits>& adj,
                                                   size_t budget = SIZE_MAX,
                                                   bool* exceeded = nullptr);

/// Drops sets contained in another set; output sorted lexicographically.
/// Input sets must each be sorted ascending.
std::vector<std::vector<uint32_t>> antichain(std::vector<std::vector<uint32_t>> sets, size_t universe);

} // namespace coarse
