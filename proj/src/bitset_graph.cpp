#include "coarse/bitset_graph.hpp"

#include <algorithm>

namespace coarse {

namespace {

struct BKState {
  const std::vector<Bits>* adj;
  std::vector<std::vector<uint32_t>> out;
  size_t nodes_left;
  bool exceeded = false;

  void expand(std::vector<uint32_t>& r, Bits p, Bits x) {
    if (exceeded) return;
    if (nodes_left == 0) {
      exceeded = true;
      return;
    }
    --nodes_left;
    if (!p.any() && !x.any()) {
      out.push_back(r);
      return;
    }
    // pivot: vertex of P|X with most neighbours in P
    size_t n = p.size();
    size_t pivot = n, best = SIZE_MAX;
    for (size_t u = p.first(); u < n; u = p.next(u)) {
      size_t c = p.intersect_count((*adj)[u]);
      if (best == SIZE_MAX || c > best) { best = c; pivot = u; }
    }
    for (size_t u = x.first(); u < n; u = x.next(u)) {
      size_t c = p.intersect_count((*adj)[u]);
      if (best == SIZE_MAX || c > best) { best = c; pivot = u; }
    }
    std::vector<uint32_t> cand;
    for (size_t u = p.first(); u < n; u = p.next(u))
      if (pivot >= n || !(*adj)[pivot].test(u)) cand.push_back(static_cast<uint32_t>(u));
    for (uint32_t u : cand) {
      r.push_back(u);
      expand(r, p & (*adj)[u], x & (*adj)[u]);
      r.pop_back();
      p.reset(u);
      x.set(u);
      if (exceeded) return;
    }
  }
};

} // namespace

std::vector<std::vector<uint32_t>> maximal_cliques(const std::vector<Bits>& adj,
                                                   size_t budget, bool* exceeded) {
  size_t n = adj.size();
  BKState st;
  st.adj = &adj;
  st.nodes_left = budget;
  Bits p(n), x(n);
  for (size_t i = 0; i < n; ++i) p.set(i);
  std::vector<uint32_t> r;
  st.expand(r, p, x);
  if (exceeded) *exceeded = st.exceeded;
  for (auto& c : st.out) std::sort(c.begin(), c.end());
  std::sort(st.out.begin(), st.out.end());
  return st.out;
}

std::vector<std::vector<uint32_t>> antichain(std::vector<std::vector<uint32_t>> sets, size_t universe) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Bits> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    Bits b(universe);
    for (uint32_t v : s) b.set(v);
    masks.push_back(std::move(b));
  }
  std::vector<std::vector<uint32_t>> keep;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < sets.size() && !dominated; ++j)
      if (j != i && sets[i].size() < sets[j].size() && masks[i].is_subset_of(masks[j])) dominated = true;
    // equal-size distinct sets never contain each other; duplicates removed above
    if (!dominated) keep.push_back(sets[i]);
  }
  return keep;
}

} // namespace coarse
