#include "coarse/homology.hpp"

#include "coarse/tower.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace coarse {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GF::GF(uint32_t prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("coefficient field order must be prime");
}

uint32_t GF::inv(uint32_t a) const {
  // Fermat: a^(p-2)
  if (a == 0) throw std::domain_error("GF: inverse of zero");
  uint64_t base = a % p, result = 1;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

SparseCol axpy(const GF& f, const SparseCol& y, const SparseCol& x, uint32_t c) {
  SparseCol out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      uint32_t v = f.mul(x[j].second, c);
      if (v) out.emplace_back(x[j].first, v);
      ++j;
    } else {
      uint32_t v = f.add(y[i].second, f.mul(x[j].second, c));
      if (v) out.emplace_back(y[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

bool ColumnReducer::add(SparseCol c) {
  while (!c.empty()) {
    uint32_t piv = c.back().first;
    auto it = pivot_col_.find(piv);
    if (it == pivot_col_.end()) {
      pivot_col_[piv] = static_cast<uint32_t>(cols_.size());
      cols_.push_back(std::move(c));
      return true;
    }
    const SparseCol& other = cols_[it->second];
    // eliminate the pivot: c -= (c_piv / other_piv) * other
    uint32_t lambda = f_.mul(c.back().second, f_.inv(other.back().second));
    c = axpy(f_, c, other, f_.neg(lambda));
  }
  return false;
}

size_t sparse_rank(const GF& f, const std::vector<SparseCol>& cols) {
  ColumnReducer red(f);
  for (const auto& c : cols) red.add(c);
  return red.rank();
}

std::vector<SparseCol> sparse_kernel(const GF& f, const std::vector<SparseCol>& cols) {
  // Companion tracking: a column that reduces to zero yields a kernel vector
  // in terms of the original column indices.
  struct Tracked {
    SparseCol col, combo;
  };
  std::vector<Tracked> stored;
  std::unordered_map<uint32_t, uint32_t> pivot_col;
  std::vector<SparseCol> kernel;
  for (uint32_t j = 0; j < cols.size(); ++j) {
    Tracked t{cols[j], {{j, 1}}};
    while (!t.col.empty()) {
      uint32_t piv = t.col.back().first;
      auto it = pivot_col.find(piv);
      if (it == pivot_col.end()) break;
      const Tracked& other = stored[it->second];
      uint32_t lambda = f.mul(t.col.back().second, f.inv(other.col.back().second));
      uint32_t neg = f.neg(lambda);
      t.col = axpy(f, t.col, other.col, neg);
      t.combo = axpy(f, t.combo, other.combo, neg);
    }
    if (t.col.empty()) {
      kernel.push_back(std::move(t.combo));
    } else {
      pivot_col[t.col.back().first] = static_cast<uint32_t>(stored.size());
      stored.push_back(std::move(t));
    }
  }
  return kernel;
}

size_t FieldChainComplex::basis_index(int p, const std::vector<uint32_t>& simplex) const {
  if (p < 0 || p > p_top) return SIZE_MAX;
  const auto& b = basis[p];
  auto it = std::lower_bound(b.begin(), b.end(), simplex);
  if (it == b.end() || *it != simplex) return SIZE_MAX;
  return static_cast<size_t>(it - b.begin());
}

FieldChainComplex chain_complex(const SimplicialComplex& K, int p_top, uint32_t prime) {
  GF f(prime);
  if (p_top < 0) p_top = 0;
  FieldChainComplex cc;
  cc.prime = prime;
  cc.p_top = p_top;
  cc.basis.resize(p_top + 1);
  cc.boundary.resize(p_top + 1);
  for (int p = 0; p <= p_top; ++p) cc.basis[p] = K.simplices_of_dim(p);

  // Augmentation: every vertex maps to the generator of C_{-1}.
  cc.boundary[0].assign(cc.basis[0].size(), SparseCol{{0, 1}});

  for (int p = 1; p <= p_top; ++p) {
    const auto& below = cc.basis[p - 1];
    cc.boundary[p].reserve(cc.basis[p].size());
    for (const auto& s : cc.basis[p]) {
      SparseCol col;
      std::vector<uint32_t> face(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face[w++] = s[i];
        auto it = std::lower_bound(below.begin(), below.end(), face);
        uint32_t row = static_cast<uint32_t>(it - below.begin());
        uint32_t coeff = (drop % 2 == 0) ? 1 : f.neg(1);
        col.emplace_back(row, coeff);
      }
      std::sort(col.begin(), col.end());
      cc.boundary[p].push_back(std::move(col));
    }
  }

  // dd = 0 over the constructed matrices.
  for (int p = 1; p <= p_top; ++p)
    for (const auto& col : cc.boundary[p]) {
      SparseCol acc;
      for (auto [row, coeff] : col) acc = axpy(f, acc, cc.boundary[p - 1][row], coeff);
      if (!acc.empty()) throw std::logic_error("chain_complex: boundary of boundary is nonzero");
    }
  return cc;
}

namespace {

std::vector<size_t> boundary_ranks(const GF& f, const FieldChainComplex& cc) {
  std::vector<size_t> r(cc.p_top + 2, 0);
  for (int p = 0; p <= cc.p_top; ++p) r[p] = sparse_rank(f, cc.boundary[p]);
  return r;
}

std::vector<size_t> reduced_betti_from(const FieldChainComplex& cc, const std::vector<size_t>& ranks,
                                       int p_max) {
  std::vector<size_t> b;
  for (int p = 0; p <= p_max; ++p) {
    size_t np = p <= cc.p_top ? cc.basis[p].size() : 0;
    size_t dp = p <= cc.p_top ? ranks[p] : 0;
    size_t dp1 = p + 1 <= cc.p_top ? ranks[p + 1] : 0;
    b.push_back(np - dp - dp1);
  }
  return b;
}

/// Chain-map image of a source p-simplex: nullopt when degenerate, else the
/// sorted target simplex with the permutation sign.
std::optional<std::pair<std::vector<uint32_t>, uint32_t>> chain_image(const GF& f,
                                                                      const std::vector<size_t>& verts,
                                                                      const std::vector<uint32_t>& s) {
  std::vector<uint32_t> img;
  img.reserve(s.size());
  for (uint32_t v : s) img.push_back(static_cast<uint32_t>(verts[v]));
  std::vector<uint32_t> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  uint32_t sign = 1;
  if (f.p != 2) {
    size_t inversions = 0;
    for (size_t i = 0; i < img.size(); ++i)
      for (size_t j = i + 1; j < img.size(); ++j)
        if (img[i] > img[j]) ++inversions;
    sign = (inversions % 2 == 0) ? 1 : f.neg(1);
  }
  return std::make_pair(std::move(sorted), sign);
}

/// Rank of reduced H_p of a vertex map, from prebuilt chain complexes.
std::vector<size_t> induced_ranks(const GF& f, const FieldChainComplex& ck, const FieldChainComplex& cl,
                                  const std::vector<size_t>& verts, int p_max) {
  std::vector<size_t> out;
  for (int p = 0; p <= p_max; ++p) {
    size_t nk = p <= ck.p_top ? ck.basis[p].size() : 0;
    if (nk == 0) {
      out.push_back(0);
      continue;
    }
    std::vector<SparseCol> kernel = sparse_kernel(f, ck.boundary[p]);
    if (kernel.empty()) {
      out.push_back(0);
      continue;
    }
    ColumnReducer red(f);
    if (p + 1 <= cl.p_top)
      for (const auto& col : cl.boundary[p + 1]) red.add(col);
    size_t rank_quotient = 0;
    for (const auto& z : kernel) {
      SparseCol img;
      for (auto [src_idx, coeff] : z) {
        auto ci = chain_image(f, verts, ck.basis[p][src_idx]);
        if (!ci) continue;
        size_t tgt = cl.basis_index(p, ci->first);
        if (tgt == SIZE_MAX) throw std::logic_error("induced map: image simplex missing from target basis");
        img = axpy(f, img, SparseCol{{static_cast<uint32_t>(tgt), ci->second}}, coeff);
      }
      if (red.add(std::move(img))) ++rank_quotient;
    }
    out.push_back(rank_quotient);
  }
  return out;
}

} // namespace

BettiReport betti(const SimplicialComplex& K, int p_max, uint32_t prime) {
  GF f(prime);
  int top = std::min(p_max + 1, K.dim_cap);
  FieldChainComplex cc = chain_complex(K, top, prime);
  auto ranks = boundary_ranks(f, cc);
  BettiReport rep;
  rep.dim_cap = K.dim_cap;
  rep.reduced_betti = reduced_betti_from(cc, ranks, p_max);
  for (int p = 0; p <= p_max; ++p) {
    size_t np = p <= top ? cc.basis[p].size() : 0;
    rep.simplex_counts.push_back(np);
    rep.betti.push_back(p == 0 ? rep.reduced_betti[0] + (np > 0 ? 1 : 0) : rep.reduced_betti[p]);
  }
  return rep;
}

bool InducedMapReport::all_trivial(int up_to) const {
  for (int p = 0; p <= up_to && p < static_cast<int>(trivial.size()); ++p)
    if (!trivial[p]) return false;
  return true;
}

InducedMapReport induced_map(const SimplicialMap& fmap, int p_max, uint32_t prime) {
  auto chk = is_simplicial(fmap);
  if (!chk.ok) throw std::invalid_argument("induced_map: map is not simplicial");
  GF f(prime);
  const SimplicialComplex& K = *fmap.source;
  const SimplicialComplex& L = *fmap.target;
  FieldChainComplex ck = chain_complex(K, std::min(p_max + 1, K.dim_cap), prime);
  FieldChainComplex cl = chain_complex(L, std::min(p_max + 1, L.dim_cap), prime);

  InducedMapReport rep;
  rep.rank = induced_ranks(f, ck, cl, fmap.verts, p_max);
  rep.betti_source = reduced_betti_from(ck, boundary_ranks(f, ck), p_max);
  rep.betti_target = reduced_betti_from(cl, boundary_ranks(f, cl), p_max);
  for (size_t r : rep.rank) rep.trivial.push_back(r == 0);
  return rep;
}

bool ConnectivityProfile::all_levels_witnessed() const {
  for (const auto& w : witness)
    if (!w) return false;
  return true;
}

ConnectivityProfile connectivity_profile(const ComplexTower& T, int n, uint32_t prime) {
  GF f(prime);
  ConnectivityProfile prof;
  prof.n = n;
  prof.prime = prime;
  if (T.space) {
    for (const auto& d : T.space->table)
      if (d.is_inf()) prof.space_has_inf_distances = true;
  }
  size_t L = T.num_levels();
  prof.ranks.resize(L);
  prof.witness.assign(L, std::nullopt);

  // Per-level caches shared across all scale pairs: chain complex, cycle
  // bases, and the reduced boundary columns used as the quotient seed.
  std::vector<FieldChainComplex> cc;
  cc.reserve(L);
  for (size_t k = 0; k < L; ++k)
    cc.push_back(chain_complex(T.levels[k], std::min(n + 1, T.levels[k].dim_cap), prime));

  std::vector<std::vector<std::vector<SparseCol>>> kernels(L);
  std::vector<std::vector<ColumnReducer>> boundary_seed(L);
  std::vector<std::vector<size_t>> self_betti(L);
  for (size_t k = 0; k < L; ++k) {
    kernels[k].resize(n + 1);
    boundary_seed[k].assign(n + 1, ColumnReducer(f));
    for (int p = 0; p <= n; ++p) {
      if (p <= cc[k].p_top && !cc[k].basis[p].empty())
        kernels[k][p] = sparse_kernel(f, cc[k].boundary[p]);
      if (p + 1 <= cc[k].p_top)
        for (const auto& col : cc[k].boundary[p + 1]) boundary_seed[k][p].add(col);
    }
    // reduced betti = dim of cycle space - rank of the boundary above
    std::vector<size_t> b;
    for (int p = 0; p <= n; ++p) b.push_back(kernels[k][p].size() - boundary_seed[k][p].rank());
    self_betti[k] = std::move(b);
  }

  std::vector<bool> self_trivial(L, false);
  for (size_t k = 0; k < L; ++k)
    self_trivial[k] = std::all_of(self_betti[k].begin(), self_betti[k].end(),
                                  [](size_t x) { return x == 0; });

  for (size_t k = 0; k < L; ++k) {
    for (size_t m = k; m < L; ++m) {
      std::vector<size_t> ranks;
      if (m == k) {
        ranks = self_trivial[k] ? std::vector<size_t>(n + 1, 0) : self_betti[k];
      } else {
        auto verts = T.bond(k, m);
        for (int p = 0; p <= n; ++p) {
          if (kernels[k][p].empty()) {
            ranks.push_back(0);
            continue;
          }
          ColumnReducer red = boundary_seed[m][p]; // copy of the reduced boundaries
          size_t rank_quotient = 0;
          for (const auto& z : kernels[k][p]) {
            SparseCol img;
            for (auto [src_idx, coeff] : z) {
              auto ci = chain_image(f, verts, cc[k].basis[p][src_idx]);
              if (!ci) continue;
              size_t tgt = cc[m].basis_index(p, ci->first);
              if (tgt == SIZE_MAX)
                throw std::logic_error("profile: image simplex missing from target basis");
              img = axpy(f, img, SparseCol{{static_cast<uint32_t>(tgt), ci->second}}, coeff);
            }
            if (red.add(std::move(img))) ++rank_quotient;
          }
          ranks.push_back(rank_quotient);
        }
      }
      bool trivial = std::all_of(ranks.begin(), ranks.end(), [](size_t r) { return r == 0; });
      prof.ranks[k].push_back(std::move(ranks));
      if (trivial && !prof.witness[k]) prof.witness[k] = m;
    }
  }
  return prof;
}

bool is_t_chain_connected(const FiniteMetricSpace& M, const ExtDist& t) {
  size_t n = M.size();
  if (n == 0) return true;
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (M.dist(i, j) <= t) parent[find(i)] = find(j);
  size_t root = find(0);
  for (size_t i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

} // namespace coarse
