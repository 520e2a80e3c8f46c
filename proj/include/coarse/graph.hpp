#pragma once

#include "coarse/metric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Simple undirected graph on an ordered vertex list. Edges are stored
/// sorted with u < v so identical inputs serialize identically.
struct Graph {
  std::vector<std::string> vertex_ids;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  size_t num_vertices() const { return vertex_ids.size(); }
  void add_edge(uint32_t u, uint32_t v);
  void normalize(); // sort edges, drop duplicates, reject loops/range errors
  bool has_edge(uint32_t u, uint32_t v) const;
  std::vector<std::vector<uint32_t>> adjacency() const;
};

Graph make_graph(std::vector<std::string> ids, std::vector<std::pair<uint32_t, uint32_t>> edges);
Graph path_graph(size_t n);
Graph complete_binary_tree(int depth); // vertices ordered by BFS index

/// Shortest-path hop metric; infinity across components (BFS per vertex).
FiniteMetricSpace graph_metric(const Graph& G);

/// Edge iff 0 < d <= t. Infinite t is rejected unless allow_inf is set
/// (then: edge iff the distance is finite and positive).
Graph rips_graph_t(const FiniteMetricSpace& M, const ExtDist& t, bool allow_inf = false);

/// Edge iff some member contains both endpoints.
Graph rips_graph_cover(const FiniteMetricSpace& M, const Cover& U);

/// Adds all pairs at graph distance exactly two.
Graph augment(const Graph& G);

struct ShortMapCheck {
  bool ok = true;
  std::optional<std::pair<uint32_t, uint32_t>> witness_edge;
};

/// Every edge must map to an edge or collapse to a point. Throws on a
/// partial map.
ShortMapCheck is_short(const std::vector<size_t>& f, const Graph& G, const Graph& H);

} // namespace coarse
