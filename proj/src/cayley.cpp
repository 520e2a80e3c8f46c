#include "coarse/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coarse {

namespace {

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer element '" + s + "'");
  return v;
}

class ZOracle final : public GroupOracle {
public:
  std::string name() const override { return "z"; }
  std::string identity() const override { return "0"; }
  std::string mul(const std::string& a, const std::string& b) const override {
    return std::to_string(parse_ll(a) + parse_ll(b));
  }
  std::string inv(const std::string& a) const override { return std::to_string(-parse_ll(a)); }
  std::string canon(const std::string& a) const override { return std::to_string(parse_ll(a)); }
  std::vector<std::string> super_generators() const override { return {"1", "-1"}; }
};

class ZdOracle final : public GroupOracle {
public:
  explicit ZdOracle(int d) : d_(d) {}
  std::string name() const override { return "z" + std::to_string(d_); }
  std::string identity() const override { return render(std::vector<long long>(d_, 0)); }
  std::string mul(const std::string& a, const std::string& b) const override {
    auto x = parse(a), y = parse(b);
    for (int i = 0; i < d_; ++i) x[i] += y[i];
    return render(x);
  }
  std::string inv(const std::string& a) const override {
    auto x = parse(a);
    for (auto& v : x) v = -v;
    return render(x);
  }
  std::string canon(const std::string& a) const override { return render(parse(a)); }
  std::vector<std::string> super_generators() const override {
    std::vector<std::string> gens;
    for (int i = 0; i < d_; ++i) {
      std::vector<long long> e(d_, 0);
      e[i] = 1;
      gens.push_back(render(e));
      e[i] = -1;
      gens.push_back(render(e));
    }
    return gens;
  }

private:
  int d_;
  std::vector<long long> parse(const std::string& s) const {
    std::vector<long long> out;
    size_t start = 0;
    while (start <= s.size()) {
      size_t comma = s.find(',', start);
      std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      out.push_back(parse_ll(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(out.size()) != d_)
      throw std::invalid_argument("element '" + s + "' has wrong rank for " + name());
    return out;
  }
  std::string render(const std::vector<long long>& v) const {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  }
};

class CyclicOracle final : public GroupOracle {
public:
  explicit CyclicOracle(long long n) : n_(n) {
    if (n_ < 1) throw std::invalid_argument("cyclic order must be positive");
  }
  std::string name() const override { return "cyclic:" + std::to_string(n_); }
  std::string identity() const override { return "0"; }
  std::string mul(const std::string& a, const std::string& b) const override {
    return std::to_string(((parse_ll(a) + parse_ll(b)) % n_ + n_) % n_);
  }
  std::string inv(const std::string& a) const override {
    return std::to_string(((-parse_ll(a)) % n_ + n_) % n_);
  }
  std::string canon(const std::string& a) const override {
    return std::to_string((parse_ll(a) % n_ + n_) % n_);
  }
  std::vector<std::string> super_generators() const override {
    if (n_ == 1) return {};
    if (n_ == 2) return {"1"};
    return {"1", std::to_string(n_ - 1)};
  }

private:
  long long n_;
};

// Free group on a,b; elements are reduced words over a,b,A,B (capitals are
// inverses); "1" is the empty word.
class Free2Oracle final : public GroupOracle {
public:
  std::string name() const override { return "free2"; }
  std::string identity() const override { return "1"; }
  std::string mul(const std::string& a, const std::string& b) const override {
    return render(reduce(letters(a) + letters(b)));
  }
  std::string inv(const std::string& a) const override {
    std::string w = letters(a);
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(flip(*it));
    return render(out);
  }
  std::string canon(const std::string& a) const override { return render(reduce(letters(a))); }
  std::vector<std::string> super_generators() const override { return {"a", "A", "b", "B"}; }

private:
  static char flip(char c) {
    if (c >= 'a' && c <= 'z') return static_cast<char>(c - 'a' + 'A');
    return static_cast<char>(c - 'A' + 'a');
  }
  static std::string letters(const std::string& s) {
    if (s == "1" || s.empty()) return "";
    for (char c : s)
      if (c != 'a' && c != 'b' && c != 'A' && c != 'B')
        throw std::invalid_argument("bad free-group word '" + s + "'");
    return s;
  }
  static std::string reduce(const std::string& w) {
    std::string st;
    for (char c : w) {
      if (!st.empty() && st.back() == flip(c))
        st.pop_back();
      else
        st.push_back(c);
    }
    return st;
  }
  static std::string render(const std::string& w) { return w.empty() ? "1" : w; }
};

} // namespace

std::unique_ptr<GroupOracle> make_group_oracle(const std::string& spec) {
  if (spec == "z") return std::make_unique<ZOracle>();
  if (spec == "z2") return std::make_unique<ZdOracle>(2);
  if (spec == "z3") return std::make_unique<ZdOracle>(3);
  if (spec == "free2") return std::make_unique<Free2Oracle>();
  if (spec.rfind("cyclic:", 0) == 0) return std::make_unique<CyclicOracle>(parse_ll(spec.substr(7)));
  throw std::invalid_argument("unknown group spec '" + spec + "'");
}

namespace {

/// Word-length table of the super-generator metric out to `radius`.
std::map<std::string, int> word_ball(const GroupOracle& O, int radius) {
  std::map<std::string, int> len;
  std::vector<std::string> frontier{O.canon(O.identity())};
  len[frontier[0]] = 0;
  auto gens = O.super_generators();
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::string> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        std::string h = O.canon(O.mul(g, s));
        if (len.emplace(h, r).second) next.push_back(h);
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return len;
}

} // namespace

void spot_check_oracle(const GroupOracle& O, int radius) {
  auto ball = word_ball(O, radius);
  std::vector<std::string> elems;
  for (const auto& [g, _] : ball) elems.push_back(g);
  std::string e = O.canon(O.identity());
  for (const auto& g : elems) {
    if (O.canon(O.mul(g, e)) != g || O.canon(O.mul(e, g)) != g)
      throw std::runtime_error("identity law fails at '" + g + "'");
    if (O.canon(O.mul(g, O.inv(g))) != e)
      throw std::runtime_error("inverse law fails at '" + g + "'");
  }
  size_t n = elems.size();
  for (size_t i = 0; i < n; i += std::max<size_t>(1, n / 8))
    for (size_t j = 0; j < n; j += std::max<size_t>(1, n / 8))
      for (size_t k = 0; k < n; k += std::max<size_t>(1, n / 8)) {
        const auto &a = elems[i], &b = elems[j], &c = elems[k];
        if (O.canon(O.mul(O.mul(a, b), c)) != O.canon(O.mul(a, O.mul(b, c))))
          throw std::runtime_error("associativity fails at ('" + a + "','" + b + "','" + c + "')");
      }
}

CayleyBall cayley_graph(const GroupOracle& O, const std::vector<std::string>& S, int radius) {
  if (radius < 1) throw std::invalid_argument("cayley_graph: radius must be >= 1");
  std::string e = O.canon(O.identity());
  std::set<std::string> gen_set;
  for (const auto& s : S) gen_set.insert(O.canon(s));
  if (gen_set.count(e)) throw std::invalid_argument("generator set contains the identity");
  for (const auto& s : gen_set)
    if (!gen_set.count(O.canon(O.inv(s))))
      throw std::invalid_argument("generator set is not symmetric: missing inverse of '" + s + "'");

  auto ball_len = word_ball(O, radius);
  // Vertex order: by word length, then canonical string.
  std::vector<std::pair<int, std::string>> order;
  for (const auto& [g, l] : ball_len) order.emplace_back(l, g);
  std::sort(order.begin(), order.end());

  std::map<std::string, uint32_t> index;
  Graph graph;
  for (const auto& [l, g] : order) {
    index[g] = static_cast<uint32_t>(graph.vertex_ids.size());
    graph.vertex_ids.push_back(g);
  }
  for (const auto& [g, idx] : index)
    for (const auto& s : gen_set) {
      std::string h = O.canon(O.mul(g, s));
      auto it = index.find(h);
      if (it != index.end() && it->second != idx)
        graph.edges.emplace_back(std::min(idx, it->second), std::max(idx, it->second));
    }
  graph.normalize();

  // Word metric via lengths out to 2*radius (g^{-1}h always lands there).
  auto far = word_ball(O, 2 * radius);
  size_t n = graph.num_vertices();
  std::vector<ExtDist> tab(n * n, ExtDist::infinity());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::string diff = O.canon(O.mul(O.inv(graph.vertex_ids[i]), graph.vertex_ids[j]));
      auto it = far.find(diff);
      if (it != far.end()) tab[i * n + j] = ExtDist(Rat(it->second));
    }
  FiniteMetricSpace metric(graph.vertex_ids, std::move(tab));
  return {std::move(graph), std::move(metric)};
}

} // namespace coarse
