#include "coarse/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coarse {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    size_t b = f.find_first_not_of(" \t");
    size_t e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
  }
  return out;
}

ojson parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, e.byte, std::string("invalid JSON: ") + e.what());
  }
}

} // namespace

FiniteMetricSpace load_distance_csv(const std::string& path) {
  auto lines = read_lines(path);
  size_t row = 0;
  while (row < lines.size() && lines[row].empty()) ++row;
  if (row == lines.size()) throw ParseError(path, 1, "no points");
  auto header = split_csv(lines[row]);
  bool leading_blank = !header.empty() && (header[0].empty() || header[0] == "id");
  std::vector<std::string> ids(header.begin() + (leading_blank ? 1 : 0), header.end());
  if (ids.empty()) throw ParseError(path, row + 1, "no points");
  size_t n = ids.size();
  std::vector<ExtDist> tab(n * n);
  size_t seen = 0;
  for (size_t r = row + 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    auto fields = split_csv(lines[r]);
    bool labeled = fields.size() == n + 1;
    if (!labeled && fields.size() != n)
      throw ParseError(path, r + 1,
                       "expected " + std::to_string(n) + " values, got " + std::to_string(fields.size()));
    if (seen >= n) throw ParseError(path, r + 1, "more rows than points");
    if (labeled && fields[0] != ids[seen])
      throw ParseError(path, r + 1, "row label '" + fields[0] + "' does not match '" + ids[seen] + "'");
    for (size_t c = 0; c < n; ++c) {
      const std::string& tok = fields[c + (labeled ? 1 : 0)];
      try {
        tab[seen * n + c] = ExtDist::parse(tok);
      } catch (const std::exception& e) {
        throw ParseError(path, r + 1, e.what());
      }
    }
    ++seen;
  }
  if (seen != n)
    throw ParseError(path, lines.size(), "table is not square: " + std::to_string(seen) + " rows for " +
                                             std::to_string(n) + " points");
  return FiniteMetricSpace(std::move(ids), std::move(tab));
}

FiniteMetricSpace load_point_cloud_csv(const std::string& path, PointMetric kind) {
  auto lines = read_lines(path);
  std::vector<std::string> ids;
  std::vector<std::vector<double>> coords;
  for (size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].empty() || lines[r][0] == '#') continue;
    auto fields = split_csv(lines[r]);
    if (fields.size() < 2) throw ParseError(path, r + 1, "need an id and at least one coordinate");
    std::vector<double> c;
    for (size_t i = 1; i < fields.size(); ++i) {
      try {
        size_t pos = 0;
        c.push_back(std::stod(fields[i], &pos));
        if (pos != fields[i].size()) throw std::invalid_argument("junk after number");
      } catch (const std::exception&) {
        throw ParseError(path, r + 1, "bad coordinate '" + fields[i] + "'");
      }
    }
    if (!coords.empty() && c.size() != coords[0].size())
      throw ParseError(path, r + 1, "ragged coordinate rows");
    ids.push_back(fields[0]);
    coords.push_back(std::move(c));
  }
  if (ids.empty()) throw ParseError(path, 1, "no points");
  return point_cloud_space(std::move(ids), std::move(coords), kind);
}

Graph load_edge_list(const std::string& path) {
  auto lines = read_lines(path);
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<size_t> edge_lines;
  for (size_t r = 0; r < lines.size(); ++r) {
    const std::string& line = lines[r];
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (line.rfind("#vertices", 0) == 0 && colon != std::string::npos) {
        std::istringstream is(line.substr(colon + 1));
        std::string tok;
        while (is >> tok) ids.push_back(tok);
      }
      continue;
    }
    std::istringstream is(line);
    std::string u, v, extra;
    if (!(is >> u >> v) || (is >> extra))
      throw ParseError(path, r + 1, "expected 'u v'");
    raw_edges.emplace_back(u, v);
    edge_lines.push_back(r + 1);
  }
  if (ids.empty()) {
    std::vector<std::string> seen;
    for (const auto& [u, v] : raw_edges) {
      seen.push_back(u);
      seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    ids = std::move(seen);
  }
  Graph g;
  g.vertex_ids = ids;
  auto index_of = [&](const std::string& id, size_t line) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw ParseError(path, line, "unknown vertex '" + id + "'");
    return static_cast<uint32_t>(it - ids.begin());
  };
  for (size_t i = 0; i < raw_edges.size(); ++i)
    g.add_edge(index_of(raw_edges[i].first, edge_lines[i]), index_of(raw_edges[i].second, edge_lines[i]));
  g.normalize();
  return g;
}

static Cover cover_from_json_members(const ojson& arr, const FiniteMetricSpace& M,
                                     const std::string& path) {
  Cover c;
  if (!arr.is_array()) throw ParseError(path, 1, "cover must be an array of members");
  for (const auto& m : arr) {
    CoverMember mem;
    mem.name = m.value("name", "U" + std::to_string(c.members.size()));
    if (!m.contains("members") || !m["members"].is_array())
      throw ParseError(path, 1, "cover member '" + mem.name + "' has no members array");
    for (const auto& id : m["members"]) mem.points.push_back(M.index_of(id.get<std::string>()));
    std::sort(mem.points.begin(), mem.points.end());
    mem.points.erase(std::unique(mem.points.begin(), mem.points.end()), mem.points.end());
    c.members.push_back(std::move(mem));
  }
  validate_cover(M, c);
  return c;
}

Cover load_cover_json(const std::string& path, const FiniteMetricSpace& M) {
  return cover_from_json_members(parse_json_file(path), M, path);
}

std::vector<Cover> load_covers_json(const std::string& path, const FiniteMetricSpace& M) {
  ojson j = parse_json_file(path);
  std::vector<Cover> out;
  if (j.is_object() && j.contains("covers")) {
    for (const auto& c : j["covers"]) out.push_back(cover_from_json_members(c, M, path));
  } else {
    out.push_back(cover_from_json_members(j, M, path));
  }
  return out;
}

SimplicialComplex complex_from_json(const ojson& j) {
  std::vector<std::string> ids;
  for (const auto& v : j.at("vertices")) ids.push_back(v.get<std::string>());
  std::vector<std::vector<uint32_t>> maximal;
  for (const auto& s : j.at("maximal_simplices")) {
    std::vector<uint32_t> simplex;
    for (const auto& v : s) simplex.push_back(v.get<uint32_t>());
    maximal.push_back(std::move(simplex));
  }
  int cap = j.value("dim_cap", 3);
  return complex_from_maximal(std::move(ids), std::move(maximal), cap);
}

SimplicialComplex load_complex_json(const std::string& path) {
  return complex_from_json(parse_json_file(path));
}

XiAssignment load_xi_json(const std::string& path, const FiniteMetricSpace& M) {
  ojson j = parse_json_file(path);
  const ojson& body = j.is_object() && j.contains("xi") ? j["xi"] : j;
  XiAssignment A;
  A.xi.resize(M.size());
  std::vector<char> seen(M.size(), 0);
  for (auto it = body.begin(); it != body.end(); ++it) {
    size_t x = M.index_of(it.key());
    SparseProbVector v;
    for (const auto& entry : it.value()) {
      size_t p = M.index_of(entry.at("support_point").get<std::string>());
      long long num = entry.at("weight_numerator").get<long long>();
      long long den = entry.at("weight_denominator").get<long long>();
      v.weights.emplace_back(p, Rat(num, den));
    }
    v.normalize_order();
    A.xi[x] = std::move(v);
    seen[x] = 1;
  }
  for (size_t x = 0; x < M.size(); ++x)
    if (!seen[x]) throw ParseError(path, 1, "xi missing for point '" + M.ids[x] + "'");
  return A;
}

ojson extdist_json(const ExtDist& d) {
  if (d.is_inf()) return "inf";
  if (d.is_exact()) return d.rat().str();
  return d.value();
}

ojson rat_json(const Rat& r) { return r.str(); }

ojson complex_json(const SimplicialComplex& K) {
  ojson j;
  j["vertices"] = K.vertex_ids;
  ojson gens = ojson::array();
  for (const auto& g : K.generators) gens.push_back(g);
  j["maximal_simplices"] = std::move(gens);
  j["dim_cap"] = K.dim_cap;
  return j;
}

ojson graph_json(const Graph& G) {
  ojson j;
  j["vertices"] = G.vertex_ids;
  ojson edges = ojson::array();
  for (auto [u, v] : G.edges) edges.push_back(ojson::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

ojson cover_json(const FiniteMetricSpace& M, const Cover& U) {
  ojson arr = ojson::array();
  for (const auto& mem : U.members) {
    ojson m;
    m["name"] = mem.name;
    ojson pts = ojson::array();
    for (size_t p : mem.points) pts.push_back(M.ids[p]);
    m["members"] = std::move(pts);
    arr.push_back(std::move(m));
  }
  return arr;
}

ojson xi_json(const FiniteMetricSpace& M, const XiAssignment& A) {
  ojson body = ojson::object();
  for (size_t x = 0; x < A.size(); ++x) {
    ojson arr = ojson::array();
    for (const auto& [p, w] : A.xi[x].weights) {
      ojson e;
      e["support_point"] = M.ids[p];
      e["weight_numerator"] = w.num();
      e["weight_denominator"] = w.den();
      arr.push_back(std::move(e));
    }
    body[M.ids[x]] = std::move(arr);
  }
  ojson j;
  j["xi"] = std::move(body);
  return j;
}

ojson witness_json(const FactorizationWitness& W) {
  ojson j;
  j["t"] = extdist_json(W.t);
  j["s"] = extdist_json(W.s);
  j["family"] = W.family;
  j["verified"] = W.verified;
  j["mid_dim"] = W.mid_dim;
  j["source"] = complex_json(*W.source);
  j["mid"] = complex_json(*W.mid);
  j["target"] = complex_json(*W.target);
  j["g"] = W.g;
  j["h"] = W.h;
  return j;
}

FactorizationWitness witness_from_json(const ojson& j) {
  FactorizationWitness W;
  W.t = ExtDist::parse(j.at("t").is_string() ? j.at("t").get<std::string>()
                                             : std::to_string(j.at("t").get<double>()));
  W.s = ExtDist::parse(j.at("s").is_string() ? j.at("s").get<std::string>()
                                             : std::to_string(j.at("s").get<double>()));
  W.family = j.value("family", "loaded");
  W.source = std::make_shared<SimplicialComplex>(complex_from_json(j.at("source")));
  W.mid = std::make_shared<SimplicialComplex>(complex_from_json(j.at("mid")));
  W.target = std::make_shared<SimplicialComplex>(complex_from_json(j.at("target")));
  W.g = j.at("g").get<std::vector<size_t>>();
  W.h = j.at("h").get<std::vector<size_t>>();
  return W;
}

FactorizationWitness load_witness_json(const std::string& path) {
  return witness_from_json(parse_json_file(path));
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
} // namespace

std::string graph_dot(const Graph& G) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& id : G.vertex_ids) os << "  \"" << dot_escape(id) << "\";\n";
  for (auto [u, v] : G.edges)
    os << "  \"" << dot_escape(G.vertex_ids[u]) << "\" -- \"" << dot_escape(G.vertex_ids[v]) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string skeleton_dot(const SimplicialComplex& K) { return graph_dot(K.one_skeleton()); }

std::string profile_svg(const ConnectivityProfile& prof, const std::vector<std::string>& labels) {
  size_t L = prof.ranks.size();
  const int cell = 56, pad = 110, top = 40;
  int width = pad + cell * static_cast<int>(L) + 20;
  int height = top + cell * static_cast<int>(L) + 30;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"monospace\" font-size=\"11\">\n";
  os << "<text x=\"" << pad << "\" y=\"18\">reduced-homology triviality of bonds (rows: from, cols: to)"
     << "</text>\n";
  for (size_t k = 0; k < L; ++k) {
    int y = top + static_cast<int>(k) * cell;
    os << "<text x=\"4\" y=\"" << y + cell / 2 << "\">" << labels[k] << "</text>\n";
    for (size_t m = 0; m < L; ++m) {
      int x = pad + static_cast<int>(m) * cell;
      if (k == 0)
        os << "<text x=\"" << x + 4 << "\" y=\"" << top - 8 << "\">" << labels[m] << "</text>\n";
      std::string fill = "#eeeeee";
      std::string text;
      if (m >= k) {
        const auto& ranks = prof.ranks[k][m - k];
        bool trivial = true;
        for (size_t r : ranks) trivial = trivial && r == 0;
        fill = trivial ? "#7cb97c" : "#d9706a";
        for (size_t p = 0; p < ranks.size(); ++p) {
          if (p) text += ",";
          text += std::to_string(ranks[p]);
        }
      }
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 2 << "\" height=\""
         << cell - 2 << "\" fill=\"" << fill << "\"/>\n";
      if (!text.empty())
        os << "<text x=\"" << x + 4 << "\" y=\"" << y + cell / 2 + 4 << "\">" << text << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

void write_json(const std::string& path, const ojson& j) { write_file(path, j.dump(2) + "\n"); }

} // namespace coarse
