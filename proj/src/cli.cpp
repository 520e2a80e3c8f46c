#include "coarse/cli.hpp"

#include "coarse/cayley.hpp"
#include "coarse/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace coarse {

namespace {

namespace fs = std::filesystem;

struct CommonOpts {
  std::string input;
  std::string format = "csv-matrix"; // csv-matrix | csv-points | edgelist
  std::string pc_metric = "euclidean";
  std::string out = "out";
  std::string scales_text;
  int dim_cap = 3;
  uint32_t prime = 2;
  int pmax = 1;
  int nmax = 2;
  size_t budget = 4000;
  double tolerance = 1e-9;
};

void add_common_input(CLI::App* cmd, CommonOpts& o, bool need_scales) {
  cmd->add_option("--input", o.input, "input file")->required();
  cmd->add_option("--format", o.format, "csv-matrix | csv-points | edgelist")
      ->check(CLI::IsMember({"csv-matrix", "csv-points", "edgelist"}));
  cmd->add_option("--pc-metric", o.pc_metric, "point-cloud metric: euclidean | chebyshev")
      ->check(CLI::IsMember({"euclidean", "chebyshev"}));
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--tol", o.tolerance, "comparison tolerance for binary64 distances");
  auto* s = cmd->add_option("--scales", o.scales_text, "ascending comma-separated scale ladder");
  if (need_scales) s->required();
}

FiniteMetricSpace load_space(const CommonOpts& o) {
  if (o.format == "csv-matrix") {
    FiniteMetricSpace M = load_distance_csv(o.input);
    auto v = validate_metric(M);
    if (!v.ok) throw std::runtime_error(o.input + ": " + v.axiom + " violation: " + v.message);
    return M;
  }
  if (o.format == "csv-points")
    return load_point_cloud_csv(o.input,
                                o.pc_metric == "chebyshev" ? PointMetric::Chebyshev : PointMetric::Euclidean);
  Graph g = load_edge_list(o.input);
  return graph_metric(g);
}

std::vector<ExtDist> parse_scales(const std::string& text) {
  std::vector<ExtDist> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    out.push_back(ExtDist::parse(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty scale ladder");
  for (size_t i = 1; i < out.size(); ++i)
    if (!(out[i - 1] < out[i])) throw std::invalid_argument("scale ladder must be strictly ascending");
  return out;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out);
  return (fs::path(o.out) / name).string();
}

ojson space_summary(const FiniteMetricSpace& M) {
  ojson j;
  j["points"] = M.size();
  j["diameter"] = extdist_json(M.diameter());
  return j;
}

// --- rips -------------------------------------------------------------------

int cmd_rips(const CommonOpts& o, bool graph_only) {
  FiniteMetricSpace M = load_space(o);
  if (M.size() == 0) throw std::runtime_error("no points");
  auto scales = parse_scales(o.scales_text);
  ojson summary;
  summary["tool"] = "rips";
  summary["space"] = space_summary(M);
  summary["dim_cap"] = o.dim_cap;
  ojson items = ojson::array();
  for (size_t i = 0; i < scales.size(); ++i) {
    std::string stem = "rips_" + std::to_string(i);
    ojson item;
    item["scale"] = extdist_json(scales[i]);
    if (graph_only) {
      Graph g = rips_graph_t(M, scales[i]);
      write_json(out_path(o, stem + "_graph.json"), graph_json(g));
      write_file(out_path(o, stem + ".dot"), graph_dot(g));
      item["edges"] = g.edges.size();
    } else {
      SimplicialComplex K = rips_complex(M, scales[i], o.dim_cap);
      write_json(out_path(o, stem + "_complex.json"), complex_json(K));
      write_file(out_path(o, stem + ".dot"), skeleton_dot(K));
      item["vertices"] = K.num_vertices();
      item["maximal_simplices"] = K.generators.size();
      item["dim"] = K.dim();
      item["true_dim"] = K.true_dim();
    }
    items.push_back(std::move(item));
  }
  summary["levels"] = std::move(items);
  write_json(out_path(o, "rips_summary.json"), summary);
  std::cout << "rips: wrote " << scales.size() << " level(s) to " << o.out << "\n";
  return 0;
}

// --- cech -------------------------------------------------------------------

ojson tower_json(const ComplexTower& T) {
  ojson j;
  j["labels"] = T.labels;
  ojson levels = ojson::array();
  for (const auto& K : T.levels) levels.push_back(complex_json(K));
  j["levels"] = std::move(levels);
  ojson bonds = ojson::array();
  for (const auto& b : T.bonds) bonds.push_back(b);
  j["bonds"] = std::move(bonds);
  ojson projections = ojson::array();
  for (const auto& p : T.projections) projections.push_back(p);
  j["projections"] = std::move(projections);
  return j;
}

ojson verify_report_json(const TowerVerifyReport& rep) {
  ojson j;
  j["bonds_structure_preserving"] = rep.bonds_ok;
  j["identity_law"] = rep.identity_ok;
  j["composition_law"] = rep.composition_ok;
  ojson fails = ojson::array();
  for (const auto& [level, wit] : rep.bond_failures) {
    ojson f;
    f["level"] = level;
    f["witness_simplex"] = wit;
    fails.push_back(std::move(f));
  }
  j["bond_failures"] = std::move(fails);
  ojson aug = ojson::array();
  for (const auto& w : rep.augmentation) {
    ojson a;
    a["level"] = w.level;
    if (w.witness_m)
      a["witness_m"] = *w.witness_m;
    else
      a["witness_m"] = "unwitnessed within truncation";
    aug.push_back(std::move(a));
  }
  j["augmentation_witnesses"] = std::move(aug);
  j["ok"] = rep.ok();
  return j;
}

int cmd_cech(const CommonOpts& o, const std::string& covers_path) {
  FiniteMetricSpace M = load_space(o);
  auto covers = load_covers_json(covers_path, M);
  ComplexTower T = cech_tower(M, covers, o.dim_cap);
  write_json(out_path(o, "cech_tower.json"), tower_json(T));
  ojson rep;
  rep["tool"] = "cech";
  rep["space"] = space_summary(M);
  rep["covers"] = covers.size();
  ojson meshes = ojson::array();
  for (const auto& c : covers) meshes.push_back(extdist_json(mesh(M, c)));
  rep["mesh"] = std::move(meshes);
  rep["verify"] = verify_report_json(verify_coarse_complex(T));
  auto proj = verify_projections(T);
  ojson pj;
  pj["ok"] = proj.ok;
  ojson steps = ojson::array();
  for (const auto& d : proj.ls_step) steps.push_back(extdist_json(d));
  pj["ls_step"] = std::move(steps);
  ojson diams = ojson::array();
  for (const auto& d : proj.simplex_diameter) diams.push_back(extdist_json(d));
  pj["simplex_diameter"] = std::move(diams);
  rep["projections"] = std::move(pj);
  write_json(out_path(o, "cech_verify.json"), rep);
  std::cout << "cech: tower with " << T.num_levels() << " level(s), verify ok="
            << (rep["verify"]["ok"].get<bool>() ? "true" : "false") << "\n";
  return 0;
}

// --- profile ------------------------------------------------------------------

ojson profile_json(const ConnectivityProfile& prof, const std::vector<std::string>& labels) {
  ojson j;
  j["n"] = prof.n;
  j["prime"] = prof.prime;
  j["labels"] = labels;
  ojson rows = ojson::array();
  for (size_t k = 0; k < prof.ranks.size(); ++k) {
    ojson row = ojson::array();
    for (size_t off = 0; off < prof.ranks[k].size(); ++off) row.push_back(prof.ranks[k][off]);
    rows.push_back(std::move(row));
  }
  j["rank_matrix"] = std::move(rows);
  ojson wit = ojson::array();
  for (const auto& w : prof.witness) {
    if (w)
      wit.push_back(*w);
    else
      wit.push_back("unwitnessed within truncation");
  }
  j["witnesses"] = std::move(wit);
  j["all_levels_witnessed"] = prof.all_levels_witnessed();
  j["connectivity_kind"] = "homology"; // reduced-homology surrogate, not homotopy
  if (prof.space_has_inf_distances)
    j["note"] = "space attains infinite distances; degree-0 statements use map triviality, not injectivity";
  return j;
}

int cmd_profile(const CommonOpts& o) {
  FiniteMetricSpace M = load_space(o);
  auto scales = parse_scales(o.scales_text);
  if (o.dim_cap < o.pmax) throw std::invalid_argument("dim_cap must be at least pmax");
  ComplexTower T = rips_tower(M, scales, o.dim_cap);
  auto prof = connectivity_profile(T, o.pmax, o.prime);
  ojson j = profile_json(prof, T.labels);
  j["tool"] = "profile";
  j["dim_cap"] = o.dim_cap;
  write_json(out_path(o, "profile.json"), j);
  write_file(out_path(o, "profile.svg"), profile_svg(prof, T.labels));
  std::cout << "profile: " << (prof.all_levels_witnessed() ? "all levels witnessed" : "unwitnessed levels remain")
            << "\n";
  return 0;
}

// --- asdim ------------------------------------------------------------------

ojson asdim_json(const AsdimReport& rep, const std::vector<std::string>& labels) {
  ojson j;
  j["n_max"] = rep.n_max;
  if (rep.headline)
    j["headline"] = *rep.headline;
  else
    j["headline"] = "unknown within truncation";
  j["budget_exhausted"] = rep.budget_exhausted;
  ojson cells = ojson::array();
  for (const auto& c : rep.cells) {
    ojson cj;
    cj["n"] = c.n;
    cj["level"] = c.level;
    cj["label"] = labels[c.level];
    cj["witnessed"] = c.witnessed;
    if (c.witnessed) {
      cj["family"] = c.family;
      cj["mid_dim"] = c.mid_dim;
      if (c.target_level) cj["target_level"] = *c.target_level;
    }
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  j["note"] = "headline is relative to the stored truncation, never an asymptotic claim";
  return j;
}

int cmd_asdim(const CommonOpts& o, const std::string& reverify_path) {
  if (!reverify_path.empty()) {
    FactorizationWitness W = load_witness_json(reverify_path);
    auto chk = reverify(W);
    ojson j;
    j["tool"] = "asdim-reverify";
    j["witness"] = reverify_path;
    j["verified"] = chk.ok;
    j["mid_dim"] = chk.mid_true_dim;
    j["g_simplicial"] = chk.g_simplicial.ok;
    j["h_simplicial"] = chk.h_simplicial.ok;
    j["contiguous"] = chk.contiguity.ok;
    write_json(out_path(o, "reverify.json"), j);
    std::cout << "asdim: witness " << (chk.ok ? "verified" : "REJECTED") << "\n";
    return 0;
  }
  FiniteMetricSpace M = load_space(o);
  auto scales = parse_scales(o.scales_text);
  ComplexTower T = rips_tower(M, scales, o.dim_cap);
  SearchBudget budget;
  budget.candidates = o.budget;
  AsdimReport rep = asdim_report(T, o.nmax, budget);
  ojson j = asdim_json(rep, T.labels);
  j["tool"] = "asdim";
  j["space"] = space_summary(M);
  ojson files = ojson::array();
  for (const auto& W : rep.witnesses) {
    std::string name = "witness_level" + std::to_string(W.source_level.value_or(0)) + ".json";
    write_json(out_path(o, name), witness_json(W));
    files.push_back(name);
  }
  j["witness_files"] = std::move(files);
  write_json(out_path(o, "asdim.json"), j);
  std::cout << "asdim: headline = "
            << (rep.headline ? std::to_string(*rep.headline) : std::string("unknown within truncation"))
            << "\n";
  return 0;
}

// --- tree probe ----------------------------------------------------------------

int cmd_tree_probe(const CommonOpts& o) {
  FiniteMetricSpace M = load_space(o);
  auto scales = parse_scales(o.scales_text);
  SearchBudget budget;
  budget.candidates = o.budget;
  TreeProbeReport rep = coarse_tree_probe(M, scales, o.dim_cap, o.prime, budget);
  ojson j;
  j["tool"] = "tree-probe";
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  j["label"] = rep.label;
  if (rep.asdim_headline)
    j["asdim_headline"] = *rep.asdim_headline;
  else
    j["asdim_headline"] = "unknown within truncation";
  j["connectivity_ok"] = rep.connectivity_ok;
  if (!rep.blocking.empty()) j["blocking"] = rep.blocking;
  std::vector<std::string> labels;
  for (const auto& s : scales) labels.push_back("t=" + s.str());
  j["asdim"] = asdim_json(rep.asdim, labels);
  j["profile"] = profile_json(rep.profile, labels);
  write_json(out_path(o, "tree_probe.json"), j);
  std::cout << "tree-probe: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return 0;
}

// --- propa ------------------------------------------------------------------

ojson xi_verify_json(const FiniteMetricSpace& M, const XiVerifyReport& rep) {
  ojson j;
  j["ok"] = rep.ok;
  j["norms_ok"] = rep.norms_ok;
  j["support_ok"] = rep.support_ok;
  j["closeness_ok"] = rep.closeness_ok;
  j["max_support_radius"] = extdist_json(rep.max_support_radius);
  j["worst_pair_norm"] = rat_json(rep.worst_pair_norm);
  if (rep.worst_pair)
    j["worst_pair"] = ojson::array({M.ids[rep.worst_pair->first], M.ids[rep.worst_pair->second]});
  if (rep.support_witness) j["support_witness"] = M.ids[*rep.support_witness];
  j["note"] = rep.note;
  return j;
}

int cmd_propa_verify(const CommonOpts& o, const std::string& xi_path, const std::string& R,
                     const std::string& eps, const std::string& S) {
  FiniteMetricSpace M = load_space(o);
  XiAssignment A = load_xi_json(xi_path, M);
  auto epsr = Rat::parse(eps);
  if (!epsr) throw std::invalid_argument("bad eps '" + eps + "'");
  auto rep = verify_xi(M, A, ExtDist::parse(R), *epsr, ExtDist::parse(S));
  ojson j;
  j["tool"] = "propa-verify";
  j["R"] = R;
  j["eps"] = epsr->str();
  j["S"] = S;
  j["report"] = xi_verify_json(M, rep);
  write_json(out_path(o, "propa_verify.json"), j);
  std::cout << "propa verify: " << (rep.ok ? "pass" : "fail") << ", worst pair norm "
            << rep.worst_pair_norm.str() << "\n";
  return 0;
}

int cmd_propa_build_uniform(const CommonOpts& o, const std::string& S) {
  FiniteMetricSpace M = load_space(o);
  XiAssignment A = uniform_ball_xi(M, ExtDist::parse(S));
  write_json(out_path(o, "xi_uniform.json"), xi_json(M, A));
  ojson j;
  j["tool"] = "propa-build-uniform";
  j["S"] = S;
  j["points"] = M.size();
  write_json(out_path(o, "propa_build_uniform.json"), j);
  std::cout << "propa build-uniform: wrote xi for " << M.size() << " points\n";
  return 0;
}

int cmd_propa_bridge(const CommonOpts& o, const std::string& xi_path, const std::string& R,
                     const std::string& eps, const std::string& S) {
  FiniteMetricSpace M = load_space(o);
  XiAssignment A = load_xi_json(xi_path, M);
  auto epsr = Rat::parse(eps);
  if (!epsr) throw std::invalid_argument("bad eps '" + eps + "'");
  ExtDist Rd = ExtDist::parse(R), Sd = ExtDist::parse(S);

  ojson j;
  j["tool"] = "propa-bridge";
  j["R"] = R;
  j["eps"] = epsr->str();
  j["S"] = S;
  j["certificate"] = xi_verify_json(M, verify_xi(M, A, Rd, *epsr, Sd));

  auto bridge = xi_to_realization_map(M, A, Rd, *epsr, Sd, o.dim_cap);
  ojson rj;
  rj["ok"] = bridge.report.ok;
  rj["contiguous_ok"] = bridge.report.contiguous_ok;
  rj["supports_span_ok"] = bridge.report.supports_span_ok;
  rj["diameter_ok"] = bridge.report.diameter_ok;
  rj["max_simplex_diameter"] = rat_json(bridge.report.max_simplex_diameter);
  rj["target_scale"] = extdist_json(Sd + Sd + Rd);
  j["realization"] = std::move(rj);

  auto back = realization_map_to_xi(M, bridge.map, Rd, *epsr, Sd + Sd + Rd);
  ojson bj;
  bj["support_clause_ok"] = back.support_clause_ok;
  bj["closeness_clause_ok"] = back.closeness_clause_ok;
  bj["worst_pair_norm"] = rat_json(back.worst_pair_norm);
  bool exact_roundtrip = back.mu.xi == A.xi;
  bj["roundtrip_exact"] = exact_roundtrip;
  j["pullback"] = std::move(bj);
  write_json(out_path(o, "propa_bridge.json"), j);
  std::cout << "propa bridge: realization " << (bridge.report.ok ? "ok" : "fail") << ", roundtrip "
            << (exact_roundtrip ? "exact" : "INEXACT") << "\n";
  return 0;
}

// --- cayley -------------------------------------------------------------------

int cmd_cayley(const CommonOpts& o, const std::string& group, const std::string& gens_text, int radius) {
  auto oracle = make_group_oracle(group);
  spot_check_oracle(*oracle);
  std::vector<std::string> gens;
  std::string cur;
  for (char c : gens_text) {
    if (c == ';') {
      if (!cur.empty()) gens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) gens.push_back(cur);
  CayleyBall ball = cayley_graph(*oracle, gens, radius);

  std::ostringstream edges;
  edges << "#vertices:";
  for (const auto& id : ball.graph.vertex_ids) edges << " " << id;
  edges << "\n";
  for (auto [u, v] : ball.graph.edges)
    edges << ball.graph.vertex_ids[u] << " " << ball.graph.vertex_ids[v] << "\n";
  write_file(out_path(o, "cayley_edges.txt"), edges.str());
  write_file(out_path(o, "cayley.dot"), graph_dot(ball.graph));

  std::ostringstream csv;
  for (size_t i = 0; i < ball.metric.size(); ++i) {
    csv << (i ? "\n" : "");
    if (i == 0) {
      for (size_t j = 0; j < ball.metric.size(); ++j) csv << (j ? "," : "") << ball.metric.ids[j];
      csv << "\n";
    }
    for (size_t j = 0; j < ball.metric.size(); ++j) csv << (j ? "," : "") << ball.metric.dist(i, j).str();
  }
  csv << "\n";
  write_file(out_path(o, "cayley_metric.csv"), csv.str());

  ojson j;
  j["tool"] = "cayley";
  j["group"] = group;
  j["generators"] = gens;
  j["radius"] = radius;
  j["vertices"] = ball.graph.num_vertices();
  j["edges"] = ball.graph.edges.size();
  j["truncation"] = "all levels share the radius-" + std::to_string(radius) +
                    " ball of the ambient word metric; bonding maps are identities";
  write_json(out_path(o, "cayley_summary.json"), j);
  std::cout << "cayley: " << ball.graph.num_vertices() << " vertices, " << ball.graph.edges.size()
            << " edges\n";
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"coarsekit: combinatorial probes for large-scale geometry on finite inputs"};
  app.require_subcommand(1);

  CommonOpts o;
  bool graph_only = false;
  std::string covers_path, xi_path, R = "1", eps = "1", S = "1";
  std::string group = "z", gens_text = "1;-1", reverify_path;
  int radius = 3;

  auto* rips = app.add_subcommand("rips", "Rips graphs/complexes along a scale ladder");
  add_common_input(rips, o, true);
  rips->add_option("--dim-cap", o.dim_cap, "max stored simplex dimension");
  rips->add_flag("--graph-only", graph_only, "emit Rips graphs instead of flag complexes");

  auto* cech = app.add_subcommand("cech", "nerve tower over star-refining covers");
  add_common_input(cech, o, false);
  cech->add_option("--covers", covers_path, "covers JSON ({\"covers\": [...]})")->required();
  cech->add_option("--dim-cap", o.dim_cap, "max stored simplex dimension");

  auto* profile = app.add_subcommand("profile", "homology connectivity profile of the Rips tower");
  add_common_input(profile, o, true);
  profile->add_option("--pmax", o.pmax, "top homology degree");
  profile->add_option("--prime", o.prime, "coefficient field order");
  profile->add_option("--dim-cap", o.dim_cap, "max stored simplex dimension");

  auto* asdim = app.add_subcommand("asdim", "asymptotic-dimension witnesses along the tower");
  add_common_input(asdim, o, true);
  asdim->get_option("--scales")->required(false);
  asdim->get_option("--input")->required(false);
  asdim->add_option("--nmax", o.nmax, "largest dimension tried");
  asdim->add_option("--dim-cap", o.dim_cap, "max stored simplex dimension");
  asdim->add_option("--budget", o.budget, "candidate budget for the search");
  asdim->add_option("--reverify", reverify_path, "re-verify a saved witness JSON instead of searching");

  auto* probe = app.add_subcommand("tree-probe", "asdim<=1 plus homology 1-connectivity probe");
  add_common_input(probe, o, true);
  probe->add_option("--prime", o.prime, "coefficient field order");
  probe->add_option("--dim-cap", o.dim_cap, "max stored simplex dimension");
  probe->add_option("--budget", o.budget, "candidate budget for the search");

  auto* propa = app.add_subcommand("propa", "Property A certificates and the realization bridge");
  propa->require_subcommand(1);
  auto* pverify = propa->add_subcommand("verify", "check a xi certificate");
  add_common_input(pverify, o, false);
  pverify->add_option("--xi", xi_path, "xi JSON")->required();
  pverify->add_option("--R", R, "pair distance bound")->required();
  pverify->add_option("--eps", eps, "l1 variation bound")->required();
  pverify->add_option("--S", S, "support radius")->required();
  auto* pbuild = propa->add_subcommand("build-uniform", "uniform-ball certificate");
  add_common_input(pbuild, o, false);
  pbuild->add_option("--S", S, "support radius")->required();
  auto* pbridge = propa->add_subcommand("bridge", "xi -> realization map -> xi round trip");
  add_common_input(pbridge, o, false);
  pbridge->add_option("--xi", xi_path, "xi JSON")->required();
  pbridge->add_option("--R", R, "pair distance bound")->required();
  pbridge->add_option("--eps", eps, "l1 variation bound")->required();
  pbridge->add_option("--S", S, "support radius")->required();
  pbridge->add_option("--dim-cap", o.dim_cap, "max stored simplex dimension");

  auto* cayley = app.add_subcommand("cayley", "truncated Cayley ball with its word metric");
  cayley->add_option("--group", group, "z | z2 | z3 | cyclic:n | free2")->required();
  cayley->add_option("--gens", gens_text, "semicolon-separated generators (symmetric, no identity)")
      ->required();
  cayley->add_option("--radius", radius, "ball radius in the ambient word metric")->required();
  cayley->add_option("--out", o.out, "output directory");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    ExtDist::set_tolerance(o.tolerance);
    if (rips->parsed()) return cmd_rips(o, graph_only);
    if (cech->parsed()) return cmd_cech(o, covers_path);
    if (profile->parsed()) return cmd_profile(o);
    if (asdim->parsed()) {
      if (reverify_path.empty() && (o.input.empty() || o.scales_text.empty()))
        throw std::invalid_argument("asdim needs --input and --scales (or --reverify)");
      return cmd_asdim(o, reverify_path);
    }
    if (probe->parsed()) return cmd_tree_probe(o);
    if (propa->parsed()) {
      if (pverify->parsed()) return cmd_propa_verify(o, xi_path, R, eps, S);
      if (pbuild->parsed()) return cmd_propa_build_uniform(o, S);
      if (pbridge->parsed()) return cmd_propa_bridge(o, xi_path, R, eps, S);
    }
    if (cayley->parsed()) return cmd_cayley(o, group, gens_text, radius);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}

} // namespace coarse
