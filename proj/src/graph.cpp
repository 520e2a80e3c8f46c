#include "coarse/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace coarse {

void Graph::add_edge(uint32_t u, uint32_t v) {
  if (u == v) throw std::invalid_argument("loop edge");
  if (u > v) std::swap(u, v);
  edges.emplace_back(u, v);
}

void Graph::normalize() {
  for (auto& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("loop edge");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.second >= num_vertices()) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<uint32_t>> Graph::adjacency() const {
  std::vector<std::vector<uint32_t>> adj(num_vertices());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph make_graph(std::vector<std::string> ids, std::vector<std::pair<uint32_t, uint32_t>> edges) {
  Graph g;
  g.vertex_ids = std::move(ids);
  g.edges = std::move(edges);
  g.normalize();
  return g;
}

Graph path_graph(size_t n) {
  Graph g;
  for (size_t i = 0; i < n; ++i) g.vertex_ids.push_back(std::to_string(i));
  for (size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<uint32_t>(i), static_cast<uint32_t>(i + 1));
  g.normalize();
  return g;
}

Graph complete_binary_tree(int depth) {
  Graph g;
  size_t n = (size_t{1} << (depth + 1)) - 1;
  for (size_t i = 0; i < n; ++i) g.vertex_ids.push_back(std::to_string(i));
  for (size_t i = 1; i < n; ++i) g.add_edge(static_cast<uint32_t>((i - 1) / 2), static_cast<uint32_t>(i));
  g.normalize();
  return g;
}

FiniteMetricSpace graph_metric(const Graph& G) {
  size_t n = G.num_vertices();
  auto adj = G.adjacency();
  std::vector<ExtDist> tab(n * n, ExtDist::infinity());
  std::vector<long long> hops(n);
  for (size_t s = 0; s < n; ++s) {
    std::fill(hops.begin(), hops.end(), -1);
    std::queue<uint32_t> q;
    hops[s] = 0;
    q.push(static_cast<uint32_t>(s));
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop();
      for (uint32_t v : adj[u])
        if (hops[v] < 0) {
          hops[v] = hops[u] + 1;
          q.push(v);
        }
    }
    for (size_t y = 0; y < n; ++y)
      if (hops[y] >= 0) tab[s * n + y] = ExtDist(Rat(hops[y]));
  }
  return FiniteMetricSpace(G.vertex_ids, std::move(tab));
}

Graph rips_graph_t(const FiniteMetricSpace& M, const ExtDist& t, bool allow_inf) {
  if (t.is_inf() && !allow_inf)
    throw std::invalid_argument("rips_graph_t: infinite scale needs the explicit flag");
  Graph g;
  g.vertex_ids = M.ids;
  size_t n = M.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const ExtDist& d = M.dist(i, j);
      bool in = t.is_inf() ? !d.is_inf() : (d <= t);
      if (in && d > ExtDist()) g.edges.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
    }
  g.normalize();
  return g;
}

Graph rips_graph_cover(const FiniteMetricSpace& M, const Cover& U) {
  validate_cover(M, U);
  Graph g;
  g.vertex_ids = M.ids;
  for (const auto& m : U.members)
    for (size_t a = 0; a < m.points.size(); ++a)
      for (size_t b = a + 1; b < m.points.size(); ++b)
        g.edges.emplace_back(static_cast<uint32_t>(m.points[a]), static_cast<uint32_t>(m.points[b]));
  g.normalize();
  return g;
}

Graph augment(const Graph& G) {
  size_t n = G.num_vertices();
  auto adj = G.adjacency();
  Graph out;
  out.vertex_ids = G.vertex_ids;
  out.edges = G.edges;
  std::vector<char> mark(n, 0);
  for (uint32_t u = 0; u < n; ++u) {
    std::fill(mark.begin(), mark.end(), 0);
    for (uint32_t v : adj[u]) mark[v] = 1;
    for (uint32_t v : adj[u])
      for (uint32_t w : adj[v])
        if (w > u && !mark[w]) out.edges.emplace_back(u, w);
  }
  out.normalize();
  return out;
}

ShortMapCheck is_short(const std::vector<size_t>& f, const Graph& G, const Graph& H) {
  if (f.size() != G.num_vertices()) throw std::invalid_argument("is_short: map is not total on the source");
  for (size_t v : f)
    if (v >= H.num_vertices()) throw std::invalid_argument("is_short: image vertex out of range");
  for (auto [u, v] : G.edges) {
    uint32_t fu = static_cast<uint32_t>(f[u]);
    uint32_t fv = static_cast<uint32_t>(f[v]);
    if (fu == fv) continue;
    if (!H.has_edge(fu, fv)) return {false, std::make_pair(u, v)};
  }
  return {true, std::nullopt};
}

} // namespace coarse
