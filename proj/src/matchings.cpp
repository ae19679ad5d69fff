#include <algorithm>
#include <sstream>

#include "orthograph/matchings.hpp"
#include "orthograph/symnum.hpp"

namespace orthograph {

namespace {

DartGraph build(const std::vector<Vertex>& labels, const std::vector<const Graph*>& parts) {
  DartGraph dg;
  dg.labels = labels;
  dg.at.resize(labels.size());
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  };
  for (size_t c = 0; c < parts.size(); ++c)
    for (const auto& e : parts[c]->edges()) {
      if (e.size() != 2) throw GraphError("dart view needs two-endpoint edges");
      int d = dg.dart_count();
      dg.vertex.push_back(index(e[0]));
      dg.vertex.push_back(index(e[1]));
      dg.at[index(e[0])].push_back(d);
      dg.at[index(e[1])].push_back(d + 1);
      dg.color.push_back(static_cast<int>(c));
    }
  return dg;
}

using Pairing = std::vector<std::pair<int, int>>;

void local_matchings(const std::vector<int>& darts, std::vector<bool>& used, MatchKind kind,
                     const DartGraph& dg, Pairing& cur, std::vector<Pairing>& out) {
  int first = -1;
  for (size_t i = 0; i < darts.size(); ++i)
    if (!used[i]) {
      first = static_cast<int>(i);
      break;
    }
  if (first < 0) {
    out.push_back(cur);
    return;
  }
  used[first] = true;
  if (kind == MatchKind::Partial) local_matchings(darts, used, kind, dg, cur, out);
  for (size_t j = first + 1; j < darts.size(); ++j) {
    if (used[j]) continue;
    if (kind == MatchKind::Cross && dg.dart_color(darts[first]) == dg.dart_color(darts[j])) continue;
    used[j] = true;
    cur.push_back({darts[first], darts[j]});
    local_matchings(darts, used, kind, dg, cur, out);
    cur.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

std::vector<Pairing> matchings_at(const DartGraph& dg, int v, MatchKind kind) {
  std::vector<Pairing> out;
  const auto& darts = dg.at[v];
  if (kind != MatchKind::Partial && darts.size() % 2) return out;
  std::vector<bool> used(darts.size(), false);
  Pairing cur;
  local_matchings(darts, used, kind, dg, cur, out);
  return out;
}

}  // namespace

DartGraph make_darts(const Graph& g) { return build(g.vertices(), {&g}); }

DartGraph make_darts(const Graph& g, const Graph& h) {
  if (g.vertices() != h.vertices()) throw GraphError("graphs are declared on different vertex sets");
  return build(g.vertices(), {&g, &h});
}

std::vector<std::pair<int, int>> MatchingCollection::pairs_at(const DartGraph& dg, int v) const {
  std::vector<std::pair<int, int>> out;
  for (int d : dg.at[v])
    if (mate[d] > d) out.push_back({d, mate[d]});
  return out;
}

std::string MatchingCollection::dump(const DartGraph& dg) const {
  std::ostringstream os;
  for (int v = 0; v < dg.vertex_count(); ++v) {
    if (v) os << ' ';
    os << dg.labels[v] << ':';
    for (auto [a, b] : pairs_at(dg, v)) os << '(' << a << ' ' << b << ')';
  }
  return os.str();
}

void for_each_matching(const DartGraph& dg, MatchKind kind,
                       const std::function<void(const MatchingCollection&)>& fn) {
  int nv = dg.vertex_count();
  std::vector<std::vector<Pairing>> local(nv);
  for (int v = 0; v < nv; ++v) {
    local[v] = matchings_at(dg, v, kind);
    if (local[v].empty()) return;
  }
  MatchingCollection m;
  m.mate.assign(dg.dart_count(), -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      fn(m);
      return;
    }
    for (const auto& p : local[v]) {
      for (auto [a, b] : p) {
        m.mate[a] = b;
        m.mate[b] = a;
      }
      m.pairs += static_cast<int>(p.size());
      rec(v + 1);
      m.pairs -= static_cast<int>(p.size());
      for (auto [a, b] : p) m.mate[a] = m.mate[b] = -1;
    }
  };
  rec(0);
}

static std::vector<MatchingCollection> collect(const DartGraph& dg, MatchKind kind) {
  std::vector<MatchingCollection> out;
  for_each_matching(dg, kind, [&](const MatchingCollection& m) { out.push_back(m); });
  return out;
}

std::vector<MatchingCollection> enumerate_pm(const Graph& g) { return collect(make_darts(g), MatchKind::Perfect); }
std::vector<MatchingCollection> enumerate_partial(const Graph& g) {
  return collect(make_darts(g), MatchKind::Partial);
}
std::vector<MatchingCollection> enumerate_pm_cross(const Graph& g, const Graph& h) {
  return collect(make_darts(g, h), MatchKind::Cross);
}

BigInt count_matchings(const DartGraph& dg, MatchKind kind) {
  BigInt total = 1;
  for (int v = 0; v < dg.vertex_count(); ++v) {
    long k = static_cast<long>(dg.at[v].size());
    switch (kind) {
      case MatchKind::Perfect:
        if (k % 2) return 0;
        total *= double_factorial(k - 1);
        break;
      case MatchKind::Partial: {
        // involutions: a(k) = a(k-1) + (k-1) a(k-2)
        BigInt a0 = 1, a1 = 1;
        for (long i = 2; i <= k; ++i) {
          BigInt a2 = a1 + (i - 1) * a0;
          a0 = a1;
          a1 = a2;
        }
        total *= a1;
        break;
      }
      case MatchKind::Cross: {
        long g = 0;
        for (int d : dg.at[v]) g += dg.dart_color(d) == 0;
        if (2 * g != k) return 0;
        total *= factorial(g);
        break;
      }
    }
  }
  return total;
}

RoutingResult route(const DartGraph& dg, const MatchingCollection& m, bool want_traces) {
  RoutingResult r;
  int nd = dg.dart_count();
  std::vector<bool> seen(nd, false);
  for (int d = 0; d < nd; ++d) {
    if (seen[d] || m.mate[d] != -1) continue;
    int cur = d;
    while (true) {
      seen[cur] = true;
      int o = cur ^ 1;
      seen[o] = true;
      if (m.mate[o] == -1) {
        int a = dg.vertex[d], b = dg.vertex[o];
        r.routed.push_back({std::min(a, b), std::max(a, b)});
        break;
      }
      cur = m.mate[o];
    }
  }
  for (int d = 0; d < nd; ++d) {
    if (seen[d]) continue;
    ++r.cycles;
    std::vector<Visit> trace;
    int cur = d;
    do {
      seen[cur] = true;
      int o = cur ^ 1;
      seen[o] = true;
      if (want_traces) trace.push_back({dg.vertex[o], o, m.mate[o]});
      cur = m.mate[o];
    } while (cur != d);
    if (want_traces) r.traces.push_back(std::move(trace));
  }
  std::sort(r.routed.begin(), r.routed.end());
  return r;
}

int count_cycles(const DartGraph& dg, const MatchingCollection& m) {
  int nd = dg.dart_count();
  std::vector<bool> seen(nd, false);
  // open paths first so only closed cycles remain
  for (int d = 0; d < nd; ++d) {
    if (seen[d] || m.mate[d] != -1) continue;
    int cur = d;
    while (true) {
      seen[cur] = seen[cur ^ 1] = true;
      if (m.mate[cur ^ 1] == -1) break;
      cur = m.mate[cur ^ 1];
    }
  }
  int cycles = 0;
  for (int d = 0; d < nd; ++d) {
    if (seen[d]) continue;
    ++cycles;
    int cur = d;
    do {
      seen[cur] = seen[cur ^ 1] = true;
      cur = m.mate[cur ^ 1];
    } while (cur != d);
  }
  return cycles;
}

std::vector<Edge> routed_edges(const DartGraph& dg, const RoutingResult& r) {
  std::vector<Edge> es;
  for (auto [a, b] : r.routed) es.push_back({dg.labels[a], dg.labels[b]});
  return es;
}

std::vector<int> g_pairs(const DartGraph& dg, const MatchingCollection& m) {
  std::vector<int> out(dg.vertex_count(), 0);
  for (int d = 0; d < dg.dart_count(); ++d) {
    int e = m.mate[d];
    if (e > d && dg.dart_color(d) == 0 && dg.dart_color(e) == 0) ++out[dg.vertex[d]];
  }
  return out;
}

// ---------------------------------------------------------------- degree-4 analysis

void require_max_degree_two(const Graph& g, const Graph& h) {
  for (const Graph* x : {&g, &h})
    for (int d : x->degrees())
      if (d > 2) throw DegreeError("degree-4 analysis needs max degree 2 in both graphs");
}

std::vector<int> v4(const DartGraph& dg) {
  std::vector<int> out;
  for (int v = 0; v < dg.vertex_count(); ++v) {
    int g = 0, h = 0;
    for (int d : dg.at[v]) (dg.dart_color(d) == 0 ? g : h)++;
    if (g == 2 && h == 2) out.push_back(v);
  }
  return out;
}

namespace {

// Visits per vertex inside one cycle; -1 when v is spread over two cycles.
std::vector<int> twice_in_one_cycle(const DartGraph& dg, const RoutingResult& r) {
  std::vector<int> cycle_of(dg.vertex_count(), -2), count(dg.vertex_count(), 0);
  for (size_t c = 0; c < r.traces.size(); ++c)
    for (const auto& vis : r.traces[c]) {
      if (cycle_of[vis.vertex] == -2) cycle_of[vis.vertex] = static_cast<int>(c);
      else if (cycle_of[vis.vertex] != static_cast<int>(c)) cycle_of[vis.vertex] = -1;
      ++count[vis.vertex];
    }
  std::vector<int> out(dg.vertex_count(), 0);
  for (int v = 0; v < dg.vertex_count(); ++v) out[v] = cycle_of[v] >= 0 ? count[v] : -1;
  return out;
}

// With v's darts unmatched, the far end of the path that leaves v through dart a.
int induced_partner(const std::vector<int>& mate, int a) {
  int cur = a;
  while (true) {
    int o = cur ^ 1;
    if (mate[o] == -1) return o;
    cur = mate[o];
  }
}

std::vector<int> loops_of_color(const DartGraph& dg, const MatchingCollection& m, int color) {
  auto r = route(dg, m, true);
  auto twice = twice_in_one_cycle(dg, r);
  std::vector<int> out;
  for (int v : v4(dg)) {
    if (twice[v] != 2) continue;
    std::vector<int> mate = m.mate;
    for (int d : dg.at[v]) mate[d] = -1;
    for (int d : dg.at[v]) {
      if (dg.dart_color(d) != color) continue;
      int e = induced_partner(mate, d);
      if (dg.dart_color(e) == color) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<int> gloop(const DartGraph& dg, const MatchingCollection& m) { return loops_of_color(dg, m, 0); }
std::vector<int> hloop(const DartGraph& dg, const MatchingCollection& m) { return loops_of_color(dg, m, 1); }

MatchingCollection rematch(const DartGraph& dg, const MatchingCollection& m, const std::vector<int>& s) {
  auto quad = v4(dg);
  MatchingCollection out = m;
  for (int v : s) {
    if (!std::binary_search(quad.begin(), quad.end(), v))
      throw DegreeError("rematch vertex " + std::to_string(dg.labels[v]) + " is not in V4");
    std::vector<int> gd, hd;
    for (int d : dg.at[v]) (dg.dart_color(d) == 0 ? gd : hd).push_back(d);
    int before = 0;
    for (int d : dg.at[v])
      if (out.mate[d] > d) ++before;
    for (int d : dg.at[v]) out.mate[d] = -1;
    out.mate[gd[0]] = gd[1];
    out.mate[gd[1]] = gd[0];
    out.mate[hd[0]] = hd[1];
    out.mate[hd[1]] = hd[0];
    out.pairs += 2 - before;
  }
  return out;
}

bool is_dominant(const DartGraph& dg, const MatchingCollection& m, const std::vector<int>& s) {
  return count_cycles(dg, rematch(dg, m, s)) == count_cycles(dg, m) + static_cast<int>(s.size());
}

bool is_noncrossing(const DartGraph& dg, const MatchingCollection& m, const std::vector<int>& s) {
  auto r = route(dg, m, true);
  std::vector<bool> in_s(dg.vertex_count(), false);
  for (int v : s) in_s[v] = true;
  for (const auto& trace : r.traces) {
    std::vector<std::vector<int>> pos(dg.vertex_count());
    for (size_t i = 0; i < trace.size(); ++i)
      if (in_s[trace[i].vertex]) pos[trace[i].vertex].push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> chords;
    for (int v = 0; v < dg.vertex_count(); ++v)
      if (pos[v].size() == 2) chords.push_back({pos[v][0], pos[v][1]});
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = 0; j < chords.size(); ++j) {
        auto [a, b] = chords[i];
        auto [c, d] = chords[j];
        if (a < c && c < b && b < d) return false;
      }
  }
  return true;
}

std::vector<std::vector<int>> noncrossing_subsets(const DartGraph& dg, const MatchingCollection& m,
                                                  const std::vector<int>& candidates) {
  std::vector<std::vector<int>> out;
  int k = static_cast<int>(candidates.size());
  if (k > 20) throw BudgetError("too many candidate vertices for subset enumeration");
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(candidates[i]);
    std::sort(s.begin(), s.end());
    if (is_noncrossing(dg, m, s)) out.push_back(s);
  }
  return out;
}

long s_coefficient(const DartGraph& dg, const MatchingCollection& m) {
  long s = 0;
  for (const auto& sub : noncrossing_subsets(dg, m, gloop(dg, m))) s += sub.size() % 2 ? -1 : 1;
  return s;
}

bool is_simple(const DartGraph& dg, const MatchingCollection& m) {
  auto r = route(dg, m, true);
  for (const auto& trace : r.traces) {
    std::vector<int> vs;
    for (const auto& vis : trace) vs.push_back(vis.vertex);
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  }
  return true;
}

}  // namespace orthograph
