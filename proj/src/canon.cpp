// Canonical labeling by colour refinement plus individualization. Every leaf of
// the search tree is visited (no automorphism pruning); graphs here are tiny.

#include <algorithm>
#include <map>

#include "orthograph/graphs.hpp"

namespace orthograph {

namespace {

struct Incidence {
  int edge;
  int mult;  // occurrences of the vertex in the edge
};

class Canonizer {
 public:
  explicit Canonizer(const CanonInput& in) : in_(in), inc_(in.nv) {
    for (int e = 0; e < static_cast<int>(in.edges.size()); ++e) {
      std::map<int, int> cnt;
      for (int v : in.edges[e].first) ++cnt[v];
      for (auto [v, m] : cnt) inc_[v].push_back({e, m});
    }
  }

  CanonResult run() {
    std::vector<int> c(in_.nv, 0);
    search(c);
    return best_;
  }

 private:
  // Splits colour classes until stable; colours become ranks 0..k-1.
  void refine(std::vector<int>& c) const {
    int classes = -1;
    while (true) {
      std::vector<std::vector<int>> sig(in_.nv);
      for (int v = 0; v < in_.nv; ++v) {
        std::vector<std::vector<int>> parts;
        for (auto [e, m] : inc_[v]) {
          std::vector<int> p{in_.edges[e].second, m};
          std::vector<int> cs;
          for (int w : in_.edges[e].first) cs.push_back(c[w]);
          std::sort(cs.begin(), cs.end());
          p.insert(p.end(), cs.begin(), cs.end());
          parts.push_back(std::move(p));
        }
        std::sort(parts.begin(), parts.end());
        sig[v].push_back(c[v]);
        for (auto& p : parts) {
          sig[v].push_back(-1 - static_cast<int>(p.size()));
          sig[v].insert(sig[v].end(), p.begin(), p.end());
        }
      }
      std::vector<std::vector<int>> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (int v = 0; v < in_.nv; ++v)
        c[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      int k = static_cast<int>(uniq.size());
      if (k == classes) return;
      classes = k;
    }
  }

  void search(std::vector<int> c) {
    refine(c);
    std::vector<int> count(in_.nv, 0);
    for (int x : c) ++count[x];
    int cell = -1;
    for (int k = 0; k < in_.nv; ++k)
      if (count[k] > 1) {
        cell = k;
        break;
      }
    if (cell < 0) {
      leaf(c);
      return;
    }
    for (int v = 0; v < in_.nv; ++v) {
      if (c[v] != cell) continue;
      std::vector<int> c2(in_.nv);
      for (int w = 0; w < in_.nv; ++w) c2[w] = 2 * c[w] + ((c[w] == cell && w != v) ? 1 : 0);
      search(c2);
    }
  }

  void leaf(const std::vector<int>& c) {
    std::vector<std::pair<std::vector<int>, int>> es;
    for (const auto& [e, col] : in_.edges) {
      std::vector<int> x;
      for (int v : e) x.push_back(c[v]);
      std::sort(x.begin(), x.end());
      es.push_back({x, col});
    }
    std::sort(es.begin(), es.end());
    std::string key;
    key.push_back(static_cast<char>(in_.nv));
    for (const auto& [x, col] : es) {
      key.push_back(static_cast<char>(col));
      for (int v : x) key.push_back(static_cast<char>(v));
      key.push_back(static_cast<char>(0xFF));
    }
    if (best_.key.empty() || key < best_.key) {
      best_.key = key;
      best_.relabel = c;
    }
  }

  const CanonInput& in_;
  std::vector<std::vector<Incidence>> inc_;
  CanonResult best_;
};

// Vertices that carry at least one edge, in label order.
std::vector<Vertex> used_vertices(const std::vector<const Graph*>& gs) {
  std::vector<Vertex> used;
  for (auto* g : gs)
    for (const auto& e : g->edges()) used.insert(used.end(), e.begin(), e.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

CanonInput build_input(const std::vector<const Graph*>& gs, const std::vector<Vertex>& used) {
  CanonInput in;
  in.nv = static_cast<int>(used.size());
  for (size_t col = 0; col < gs.size(); ++col)
    for (const auto& e : gs[col]->edges()) {
      std::vector<int> x;
      for (Vertex v : e)
        x.push_back(static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin()));
      in.edges.push_back({x, static_cast<int>(col)});
    }
  return in;
}

}  // namespace

CanonResult canonical_labeling(const CanonInput& in) { return Canonizer(in).run(); }

std::string iso_key(const Graph& g) {
  auto used = used_vertices({&g});
  return canonical_labeling(build_input({&g}, used)).key;
}

Graph canonical_form(const Graph& g) {
  auto used = used_vertices({&g});
  auto r = canonical_labeling(build_input({&g}, used));
  std::vector<Vertex> vs;
  for (size_t i = 0; i < used.size(); ++i) vs.push_back(static_cast<Vertex>(i + 1));
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    Edge x;
    for (Vertex v : e) {
      int idx = static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
      x.push_back(r.relabel[idx] + 1);
    }
    es.push_back(x);
  }
  return Graph(g.setting(), vs, es);
}

std::string colored_iso_key(const Graph& g, const Graph& h, bool swap_symmetric) {
  auto used = used_vertices({&g, &h});
  std::string a = canonical_labeling(build_input({&g, &h}, used)).key;
  if (!swap_symmetric) return a;
  std::string b = canonical_labeling(build_input({&h, &g}, used)).key;
  return std::min(a, b);
}

std::pair<Graph, Graph> canonical_pair(const Graph& g, const Graph& h) {
  auto used = used_vertices({&g, &h});
  auto r = canonical_labeling(build_input({&g, &h}, used));
  std::vector<Vertex> vs;
  for (size_t i = 0; i < used.size(); ++i) vs.push_back(static_cast<Vertex>(i + 1));
  auto map_edges = [&](const Graph& x) {
    std::vector<Edge> es;
    for (const auto& e : x.edges()) {
      Edge y;
      for (Vertex v : e) {
        int idx = static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
        y.push_back(r.relabel[idx] + 1);
      }
      es.push_back(y);
    }
    return es;
  };
  return {Graph(g.setting(), vs, map_edges(g)), Graph(h.setting(), vs, map_edges(h))};
}

}  // namespace orthograph
