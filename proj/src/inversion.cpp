#include "orthograph/inversion.hpp"

#include <algorithm>
#include <cmath>

namespace orthograph {

std::vector<GramBlock> build_blocks(const std::vector<Graph>& graphs) {
  std::vector<GramBlock> blocks;
  std::vector<std::map<Vertex, int>> keys;
  for (const auto& g : graphs) {
    if (!graphs.empty() && (g.setting() != graphs[0].setting() || g.vertices() != graphs[0].vertices()))
      throw GraphError("block graphs must share setting and vertex set");
    auto dm = g.degree_map();
    size_t i = 0;
    while (i < keys.size() && keys[i] != dm) ++i;
    if (i == keys.size()) {
      keys.push_back(dm);
      blocks.emplace_back();
    }
    blocks[i].graphs.push_back(g);
  }
  for (auto& b : blocks) {
    size_t k = b.graphs.size();
    b.q.assign(k, std::vector<RatFuncN>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i; j < k; ++j) b.q[i][j] = b.q[j][i] = inner_product(b.graphs[i], b.graphs[j]);
  }
  return blocks;
}

std::vector<std::vector<Rational>> eval_block(const GramBlock& b, long n) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : b.q) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(x.eval(Rational(n)));
  }
  return out;
}

namespace {

// Exact solve by Gauss-Jordan over Q; throws on a singular matrix.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, const GramBlock& blk,
                            long n) {
  size_t k = a.size();
  for (size_t col = 0; col < k; ++col) {
    size_t p = col;
    while (p < k && a[p][col] == 0) ++p;
    if (p == k)
      throw SingularBlockError("Gram block is singular at n = " + std::to_string(n), blk.graphs, n);
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t j = col; j < k; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  for (size_t i = 0; i < k; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

Reconstruction invert_and_reconstruct(const std::vector<GramBlock>& blocks, const FourierTarget& target) {
  if (blocks.empty()) throw GraphError("no blocks to invert");
  const Graph& g0 = blocks[0].graphs[0];
  Reconstruction out{InvariantPoly(g0.setting(), g0.vertices()), {}, true};
  for (const auto& [key, v] : target.targets) {
    bool found = false;
    for (const auto& b : blocks)
      for (const auto& g : b.graphs) found = found || g.key() == key;
    if (!found && v != 0) throw GraphError("target graph " + key + " is not in any block");
  }
  for (const auto& b : blocks) {
    std::vector<Rational> rhs;
    bool any = false;
    for (const auto& g : b.graphs) {
      auto it = target.targets.find(g.key());
      rhs.push_back(it == target.targets.end() ? Rational(0) : it->second);
      any = any || rhs.back() != 0;
    }
    if (!any) continue;
    std::vector<std::vector<Rational>> q;
    try {
      q = eval_block(b, target.n);
    } catch (const PoleError&) {
      throw SingularBlockError("Gram block has a pole at n = " + std::to_string(target.n), b.graphs, target.n);
    }
    auto c = solve(q, rhs, b, target.n);
    for (size_t i = 0; i < c.size(); ++i) {
      Rational back = 0;
      for (size_t j = 0; j < c.size(); ++j) back += q[i][j] * c[j];
      if (back != rhs[i]) out.residual_zero = false;
      out.coeff[b.graphs[i].key()] = c[i];
      InvariantPoly p = orthopoly(b.graphs[i]);
      for (const auto& [k, f] : p.terms()) out.f.add_key(k, RatFuncN(f.eval(Rational(target.n)) * c[i]));
    }
  }
  return out;
}

std::vector<DiagonalityRow> diagonality_report(const GramBlock& block, const std::vector<long>& ns) {
  std::vector<DiagonalityRow> out;
  for (long n : ns) {
    auto q = eval_block(block, n);
    Rational off = 0, diag = -1;
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) {
        Rational a = abs(q[i][j]);
        if (i == j) diag = diag < 0 ? a : std::min(diag, a);
        else off = std::max(off, a);
      }
    double r = diag == 0 ? INFINITY : Rational(off / diag).get_d();
    out.push_back({n, r});
  }
  return out;
}

FourierTarget target_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("targets") || !j.contains("n"))
    throw GraphError("Fourier target must be an object with n and targets");
  FourierTarget t;
  t.n = j.at("n").get<long>();
  Setting s = parse_setting(j.value("setting", std::string("gaussian")));
  std::vector<Vertex> vs;
  if (j.contains("vertices")) vs = j.at("vertices").get<std::vector<Vertex>>();
  std::vector<std::vector<Edge>> edge_lists;
  for (const auto& x : j.at("targets")) {
    edge_lists.push_back(edges_from_json(x.at("graph")));
    if (!j.contains("vertices"))
      for (const auto& e : edge_lists.back()) vs.insert(vs.end(), e.begin(), e.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  size_t i = 0;
  for (const auto& x : j.at("targets")) {
    Graph g(s, vs, edge_lists[i++]);
    const auto& v = x.at("value");
    Rational q;
    if (v.is_number_integer()) q = Rational(static_cast<long>(v.get<long long>()));
    else if (v.is_string()) {
      try {
        q = Rational(v.get<std::string>());
        if (q.get_den() == 0) throw GraphError("zero denominator");
        q.canonicalize();
      } catch (const std::exception&) {
        throw GraphError("bad rational value '" + v.get<std::string>() + "'");
      }
    } else throw GraphError("target values must be integers or \"p/q\" strings");
    t.graphs.push_back(g);
    t.targets[g.key()] = q;
  }
  return t;
}

}  // namespace orthograph
