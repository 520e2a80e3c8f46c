#pragma once

#include "coarse/asdim.hpp"
#include "coarse/property_a.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace coarse {

using ojson = nlohmann::ordered_json;

/// Parse failure with file/line context; the CLI renders these verbatim.
struct ParseError : std::runtime_error {
  ParseError(const std::string& file, size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

// --- loaders ---------------------------------------------------------------

/// Distance-matrix CSV: header row of point ids, then one row per point
/// ("inf" allowed; rationals and decimals stay exact). A leading id column
/// is accepted and checked.
FiniteMetricSpace load_distance_csv(const std::string& path);

/// Point-cloud CSV: id,coord,coord,... per line.
FiniteMetricSpace load_point_cloud_csv(const std::string& path, PointMetric kind);

/// Edge list: optional "#vertices: a b c ..." header, then "u v" per line.
Graph load_edge_list(const std::string& path);

/// One cover: JSON array of {"name": ..., "members": [ids...]}.
Cover load_cover_json(const std::string& path, const FiniteMetricSpace& M);
/// Several covers: {"covers": [cover, ...]} (a bare array reads as one cover).
std::vector<Cover> load_covers_json(const std::string& path, const FiniteMetricSpace& M);

SimplicialComplex complex_from_json(const ojson& j);
SimplicialComplex load_complex_json(const std::string& path);

XiAssignment load_xi_json(const std::string& path, const FiniteMetricSpace& M);

FactorizationWitness witness_from_json(const ojson& j);
FactorizationWitness load_witness_json(const std::string& path);

// --- serializers ------------------------------------------------------------

ojson extdist_json(const ExtDist& d); // "inf" | "n/d" | number
ojson rat_json(const Rat& r);

ojson complex_json(const SimplicialComplex& K);
ojson graph_json(const Graph& G);
ojson cover_json(const FiniteMetricSpace& M, const Cover& U);
ojson xi_json(const FiniteMetricSpace& M, const XiAssignment& A);
ojson witness_json(const FactorizationWitness& W);

std::string graph_dot(const Graph& G);
std::string skeleton_dot(const SimplicialComplex& K);

/// Scale-pair triviality heatmap of a connectivity profile.
std::string profile_svg(const ConnectivityProfile& prof, const std::vector<std::string>& labels);

/// Writes text exactly as given (no timestamps, no locale).
void write_file(const std::string& path, const std::string& content);
void write_json(const std::string& path, const ojson& j);

} // namespace coarse
