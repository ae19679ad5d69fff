#include <algorithm>

#include "orthograph/matchings.hpp"

namespace orthograph {

namespace {

HyperView build(const std::vector<Vertex>& labels, const std::vector<const Graph*>& parts) {
  HyperView hv;
  hv.labels = labels;
  for (size_t c = 0; c < parts.size(); ++c)
    for (const auto& e : parts[c]->edges()) {
      std::vector<int> x;
      for (Vertex v : e)
        x.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
      hv.edges.push_back(x);
      hv.color.push_back(static_cast<int>(c));
    }
  if (hv.edges.size() > 30) throw BudgetError("partition views are limited to 30 edges");
  return hv;
}

void rgs(int m, int i, int k, EdgePartition& p, const std::function<void(const EdgePartition&)>& fn) {
  if (i == m) {
    fn(p);
    return;
  }
  for (int b = 0; b <= k; ++b) {
    p[i] = b;
    rgs(m, i + 1, std::max(k, b + 1), p, fn);
  }
}

}  // namespace

HyperView make_hyper(const Graph& g) { return build(g.vertices(), {&g}); }

HyperView make_hyper(const Graph& g, const Graph& h) {
  if (g.vertices() != h.vertices()) throw GraphError("graphs are declared on different vertex sets");
  return build(g.vertices(), {&g, &h});
}

int block_count(const EdgePartition& p) {
  int k = 0;
  for (int b : p) k = std::max(k, b + 1);
  return k;
}

std::vector<uint32_t> block_masks(const EdgePartition& p) {
  std::vector<uint32_t> masks(block_count(p), 0);
  for (size_t e = 0; e < p.size(); ++e) masks[p[e]] |= 1u << e;
  return masks;
}

void for_each_partition(int m, const std::function<void(const EdgePartition&)>& fn) {
  EdgePartition p(m, 0);
  rgs(m, 0, 0, p, fn);
}

std::vector<EdgePartition> enumerate_partitions(const Graph& g) {
  std::vector<EdgePartition> out;
  for_each_partition(static_cast<int>(g.edge_count()), [&](const EdgePartition& p) { out.push_back(p); });
  return out;
}

bool refines(const EdgePartition& fine, const EdgePartition& coarse) {
  std::vector<int> image(fine.size(), -1);
  for (size_t e = 0; e < fine.size(); ++e) {
    int& x = image[fine[e]];
    if (x == -1) x = coarse[e];
    else if (x != coarse[e]) return false;
  }
  return true;
}

static std::vector<int> incidence(const HyperView& hv, uint32_t block) {
  std::vector<int> cnt(hv.vertex_count(), 0);
  for (int e = 0; e < hv.edge_count(); ++e)
    if (block >> e & 1)
      for (int v : hv.edges[e]) ++cnt[v];
  return cnt;
}

bool is_closed_block(const HyperView& hv, uint32_t block) {
  for (int c : incidence(hv, block))
    if (c % 2) return false;
  return true;
}

HyperRouting route_partition(const HyperView& hv, const EdgePartition& p) {
  HyperRouting r;
  for (uint32_t b : block_masks(p)) {
    auto cnt = incidence(hv, b);
    std::vector<int> odd;
    for (int v = 0; v < hv.vertex_count(); ++v)
      if (cnt[v] % 2) odd.push_back(v);
    if (odd.empty()) ++r.cycles;
    else r.routed.push_back(odd);
  }
  std::sort(r.routed.begin(), r.routed.end());
  return r;
}

std::vector<Edge> routed_edges(const HyperView& hv, const HyperRouting& r) {
  std::vector<Edge> es;
  for (const auto& x : r.routed) {
    Edge e;
    for (int v : x) e.push_back(hv.labels[v]);
    es.push_back(e);
  }
  return es;
}

bool in_lambda_c(const HyperView& hv, const EdgePartition& p) {
  if (block_count(p) == static_cast<int>(p.size())) return true;
  for (uint32_t b : block_masks(p))
    for (int c : incidence(hv, b))
      if (c >= 2) return true;
  return false;
}

std::vector<MobiusEntry> mobius_lambda_c(const HyperView& hv) {
  std::vector<MobiusEntry> poset;
  for_each_partition(hv.edge_count(), [&](const EdgePartition& p) {
    if (in_lambda_c(hv, p)) poset.push_back({p, 0});
  });
  // strictly finer partitions have more blocks, so process by block count descending
  std::stable_sort(poset.begin(), poset.end(), [](const MobiusEntry& a, const MobiusEntry& b) {
    return block_count(a.partition) > block_count(b.partition);
  });
  std::vector<int> blocks;
  for (const auto& x : poset) blocks.push_back(block_count(x.partition));
  for (size_t i = 0; i < poset.size(); ++i) {
    if (i == 0) {
      poset[i].mu = 1;  // the discrete partition
      continue;
    }
    BigInt s = 0;
    for (size_t j = 0; j < i; ++j)
      if (blocks[j] > blocks[i] && refines(poset[j].partition, poset[i].partition)) s += poset[j].mu;
    poset[i].mu = -s;
  }
  return poset;
}

BigInt mobius_lambda_c(const HyperView& hv, const EdgePartition& p) {
  if (static_cast<int>(p.size()) != hv.edge_count() || !in_lambda_c(hv, p))
    throw GraphError("partition is not an element of the poset");
  for (const auto& x : mobius_lambda_c(hv))
    if (x.partition == p) return x.mu;
  throw GraphError("partition must be in restricted-growth form");
}

std::vector<EdgePartition> pm_bool_cross(const Graph& g, const Graph& h) {
  HyperView hv = make_hyper(g, h);
  if (hv.edge_count() > 12) throw BudgetError("Boolean cross partitions are limited to 12 edges");
  std::vector<EdgePartition> out;
  if (g.degrees() != h.degrees()) return out;
  int nv = hv.vertex_count();
  for_each_partition(hv.edge_count(), [&](const EdgePartition& p) {
    int k = block_count(p);
    std::vector<int> bal(static_cast<size_t>(k) * nv, 0);
    for (int e = 0; e < hv.edge_count(); ++e)
      for (int v : hv.edges[e]) bal[p[e] * nv + v] += hv.color[e] == 0 ? 1 : -1;
    if (std::all_of(bal.begin(), bal.end(), [](int x) { return x == 0; })) out.push_back(p);
  });
  return out;
}

bool is_simple_partition(const HyperView& hv, const EdgePartition& p) {
  for (uint32_t b : block_masks(p))
    for (int c : incidence(hv, b))
      if (c > 2) return false;
  return true;
}

}  // namespace orthograph
