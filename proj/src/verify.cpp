#include "orthograph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>

#include "orthograph/inversion.hpp"
#include "orthograph/montecarlo.hpp"
#include "orthograph/oracle.hpp"
#include "orthograph/pairs.hpp"
#include "orthograph/parallel.hpp"
#include "orthograph/scan.hpp"
#include "orthograph/tables.hpp"

#ifndef ORTHOGRAPH_GOLDEN_DIR
#define ORTHOGRAPH_GOLDEN_DIR "tests/golden"
#endif

namespace orthograph {

namespace O = oracle;

bool SuiteReport::ok() const { return failures() == 0; }

size_t SuiteReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json j{{"name", c.name}, {"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"n", c.n}, {"seed", c.seed}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.suite}, {"ok", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

namespace {

using Out = std::vector<Check>;
const Setting kSettings[] = {Setting::Gaussian, Setting::Spherical, Setting::Boolean};

Check make_check(std::string name, bool ok, std::string lhs, std::string rhs, long n = 0, uint64_t seed = 0,
                 std::string note = "") {
  return {std::move(name), ok, std::move(lhs), std::move(rhs), n, seed, std::move(note)};
}

// Many cases folded into one check; keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void pass() {
    std::lock_guard<std::mutex> lock(mu_);
    ++count_;
  }
  void fail(const std::string& where, const std::string& lhs, const std::string& rhs) {
    std::lock_guard<std::mutex> lock(mu_);
    ++count_;
    if (bad_++ == 0) {
      where_ = where;
      lhs_ = lhs;
      rhs_ = rhs;
    }
  }
  void record(bool ok, const std::string& where, const std::function<std::pair<std::string, std::string>()>& show) {
    if (ok) {
      pass();
    } else {
      auto [l, r] = show();
      fail(where, l, r);
    }
  }
  long count() const { return count_; }
  Check done(std::string note = "") const {
    Check c;
    c.name = name_;
    c.ok = bad_ == 0;
    if (c.ok) {
      c.lhs = c.rhs = std::to_string(count_) + " cases";
    } else {
      c.lhs = lhs_;
      c.rhs = rhs_;
      note = where_ + "; " + std::to_string(bad_) + " of " + std::to_string(count_) + " cases failed" +
             (note.empty() ? "" : "; " + note);
    }
    c.note = note;
    return c;
  }

 private:
  std::string name_;
  std::mutex mu_;
  long count_ = 0, bad_ = 0;
  std::string where_, lhs_, rhs_;
};

std::string pair_text(const Graph& g, const Graph& h) { return monomial_text(g) + " | " + monomial_text(h); }

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<Graph> table_graphs(Setting s, int edges) {
  EnumSpec spec;
  spec.setting = s;
  spec.max_edges = edges;
  spec.max_vertices = edges + 1;
  if (s == Setting::Boolean) {
    spec.max_degree = 2 * edges;
    spec.max_vertices = 2 * edges;
  }
  return enumerate_graphs(spec);
}

PairSpec cross_spec(Setting s) {
  PairSpec p;
  p.setting = s;
  p.max_union_edges = 6;
  if (s == Setting::Boolean) {
    p.max_vertices = 6;
    p.max_union_degree = 12;
  }
  return p;
}

// ------------------------------------------------------------------ tables

std::string adjudicate(const Graph& g, const InvariantPoly& computed, const InvariantPoly& printed) {
  std::string out;
  for (int n : {5, 6}) {
    try {
      O::ConcretePoly t = O::truncation_at_n(g, n);
      if (g.setting() == Setting::Spherical) t = O::erase_loops(t);
      bool ours = O::eval_at(computed, n) == t, theirs = O::eval_at(printed, n) == t;
      out += (out.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": oracle " +
             (ours ? "matches computed row" : theirs ? "matches printed row" : "matches neither");
    } catch (const std::exception& e) {
      out += (out.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + e.what();
    }
  }
  return out;
}

void suite_tables(const VerifyConfig& cfg, Out& out) {
  std::string dir = cfg.golden_dir.empty() ? ORTHOGRAPH_GOLDEN_DIR : cfg.golden_dir;
  for (Setting s : kSettings) {
    std::string path = dir + "/" + to_string(s) + ".txt";
    std::ifstream in(path);
    if (!in) {
      out.push_back(make_check("table/" + to_string(s) + "/golden", false, "missing", path));
      continue;
    }
    auto rows = read_golden(s, in);
    auto built = build_table(s, default_table_budget(s));
    std::set<std::string> built_keys;
    for (const auto& r : built) built_keys.insert(iso_key(r.g));
    for (const auto& row : rows) {
      InvariantPoly got = orthopoly(row.g);
      bool same = got == row.p;
      bool covered = built_keys.count(iso_key(row.g)) > 0;
      std::string note;
      if (!covered) note = "graph missing from the regenerated table";
      if (!same) note += (note.empty() ? "" : "; ") + adjudicate(row.g, got, row.p);
      out.push_back(make_check("table/" + to_string(s) + "/" + trim(row.monomial), same && covered, to_text(got),
                               trim(row.poly), 0, 0, note));
    }
    Tally rt("table/" + to_string(s) + "/round-trip");
    for (const auto& r : built) {
      bool ok = poly_from_json(to_json(r.p)) == r.p && parse_poly(s, to_text(r.p), r.p.vertices()) == r.p;
      rt.record(ok, monomial_text(r.g), [&] { return std::pair{to_text(r.p), to_json(r.p).dump()}; });
    }
    out.push_back(rt.done(std::to_string(built.size()) + " regenerated rows"));
  }
}

// ------------------------------------------------------------------ exact values

void suite_exact_values(const VerifyConfig&, Out& out) {
  auto pair_value = [&](const std::string& name, const std::string& a, const std::string& b,
                        const std::string& want, bool via_expectation) {
    Graph g = *named_graph(a), h = *named_graph(b);
    RatFuncN got = inner_product(g, h);
    RatFuncN expected = parse_ratfunc(want);
    out.push_back(make_check("exact/" + name, got == expected, to_text(got), to_text(expected)));
    if (via_expectation) {
      RatFuncN alt = inner_product_via_expectation(g, h);
      out.push_back(make_check("exact/" + name + "/via-expectation", alt == expected, to_text(alt), to_text(expected)));
    }
  };
  pair_value("k5", "k5-inner", "k5-outer", "-8(n-1)(n-2)(n-4)/(n^8(n+2)^4)", true);
  pair_value("fig4", "fig4-g", "fig4-h", "8(n-1)/(n^4(n+2)^3)", true);
  pair_value("fig3a", "fig3a-red", "fig3a-blue", "-16(n-1)(n-2)(n-4)/(n^11(n+2)^5)", false);
  pair_value("fig3b", "fig3b-red", "fig3b-blue", "-16(n-1)(n-2)^2(n-4)/(n^11(n+2)^6)", false);
  pair_value("cut-vertex", "cut-g", "cut-h", "0", true);
  {
    Graph g = *named_graph("cut-g"), h = *named_graph("cut-h");
    out.push_back(make_check("exact/cut-vertex/cancellation", cancellation_applies(g, h), "applies", "applies"));
  }
  {
    Graph x = Graph::from_edges(Setting::Boolean, {{1, 2}, {1, 2}, {1, 2}});
    InvariantPoly want = parse_poly(Setting::Boolean, "x12^3 - (3n-2)x12", x.vertices());
    InvariantPoly got = orthopoly(x);
    out.push_back(make_check("exact/boolean-x12^3", got == want, to_text(got), to_text(want)));
  }
  {
    Graph c4 = Graph::from_edges(Setting::Gaussian, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    RatFuncN got = expectation(c4);
    out.push_back(make_check("exact/gaussian-E[C4]", got == RatFuncN::n(), to_text(got), "n"));
  }
}

// ------------------------------------------------------------------ oracle agreement

void suite_oracle(const VerifyConfig& cfg, Out& out) {
  for (Setting s : kSettings) {
    EnumSpec spec;
    spec.setting = s;
    spec.max_edges = 3;
    if (s == Setting::Boolean) spec.max_degree = 6;
    auto graphs = enumerate_graphs(spec);
    std::vector<Check> local(graphs.size() * 3);
    parallel_for(local.size(), cfg.jobs, [&](size_t idx) {
      const Graph& g = graphs[idx / 3];
      int n = 4 + static_cast<int>(idx % 3);
      InvariantPoly p = orthopoly(g);
      O::ConcretePoly sym = O::eval_at(p, n);
      std::vector<std::string> bad;
      Rational exact = O::exact_expectation_at_n(g, n);
      if (expectation(g).eval(Rational(n)) != exact) bad.push_back("expectation");
      if (O::literal_expectation_at_n(g, n) != exact) bad.push_back("literal sum");
      if (s == Setting::Boolean && g.vertex_count() * n <= 20 && O::hypercube_expectation(g, n) != exact)
        bad.push_back("hypercube");
      O::GsResult gs = O::gram_schmidt_at_n(g, n);
      bool gs_ok = gs.singular ? O::equal_as_functions(gs.poly, sym, n) : gs.poly == sym;
      if (!gs_ok) bad.push_back("gram-schmidt");
      O::ConcretePoly tr = O::truncation_at_n(g, n);
      bool tr_ok = s == Setting::Spherical
                       ? tr.terms == O::eval_at(orthopoly(g, true), n).terms && O::erase_loops(tr) == sym
                       : tr == sym;
      if (!tr_ok) bad.push_back("truncation");
      std::string lhs = bad.empty() ? "agree" : "";
      for (const auto& b : bad) lhs += (lhs.empty() ? "" : ", ") + b + " differs";
      local[idx] = make_check("oracle/" + to_string(s) + "/" + monomial_text(g), bad.empty(), lhs, "agree", n, 0,
                              gs.singular ? "Gram-Schmidt degenerate at this n; compared as functions" : "");
    });
    out.insert(out.end(), local.begin(), local.end());
  }
}

// ------------------------------------------------------------------ cross-validation

void suite_cross(const VerifyConfig& cfg, Out& out) {
  for (Setting s : kSettings) {
    auto pairs = enumerate_pairs(cross_spec(s));
    Tally t("cross/" + to_string(s) + "/inner-vs-expectation");
    parallel_for(pairs.size(), cfg.jobs, [&](size_t i) {
      const auto& pr = pairs[i];
      RatFuncN a = inner_product(pr.g, pr.h), b = inner_product_via_expectation(pr.g, pr.h);
      t.record(a == b, pair_text(pr.g, pr.h), [&] { return std::pair{to_text(a), to_text(b)}; });
    });
    out.push_back(t.done());
  }
  PairSpec d4;
  d4.setting = Setting::Spherical;
  d4.max_union_edges = 8;
  d4.max_degree_two = true;
  d4.loopless = true;
  auto pairs = enumerate_pairs(d4);
  Tally t("cross/spherical/degree4-vs-inner"), c("cross/spherical/cancellation-zero");
  parallel_for(pairs.size(), cfg.jobs, [&](size_t i) {
    const auto& pr = pairs[i];
    RatFuncN a = degree4_inner_product(pr.g, pr.h), b = inner_product(pr.g, pr.h);
    t.record(a == b, pair_text(pr.g, pr.h), [&] { return std::pair{to_text(a), to_text(b)}; });
    if (cancellation_applies(pr.g, pr.h))
      c.record(b.is_zero(), pair_text(pr.g, pr.h), [&] { return std::pair{to_text(b), std::string("0")}; });
  });
  out.push_back(t.done());
  out.push_back(c.done());
}

// ------------------------------------------------------------------ signs

// Cauchy bound on the positive real roots of p.
Rational root_bound(const IntPolyN& p) {
  if (p.degree() < 1) return 0;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = Rational(abs(p.coeff(i))) / Rational(abs(p.lead()));
    if (r > m) m = r;
  }
  return m + 1;
}

bool all_nonnegative(const IntPolyN& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c >= 0; });
}

// f(n) >= 0 for every integer n >= from: coefficient certificate, otherwise
// evaluation up to the root bound and the sign at infinity beyond it.
bool nonnegative_from(const RatFuncN& f, long from, std::string& how) {
  if (f.is_zero()) {
    how = "zero";
    return true;
  }
  if (all_nonnegative(f.num()) && all_nonnegative(f.den())) {
    how = "coefficients";
    return true;
  }
  Rational bound = root_bound(f.num()), bd = root_bound(f.den());
  if (bd > bound) bound = bd;
  long last = std::max(from, static_cast<long>(std::ceil(bound.get_d())) + 1);
  if (last - from > 100000) {
    how = "root bound too large";
    return false;
  }
  for (long n = from; n <= last; ++n) {
    if (f.den().eval(Rational(n)) == 0) continue;
    if (f.eval(Rational(n)) < 0) {
      how = "negative at n=" + std::to_string(n);
      return false;
    }
  }
  how = "evaluation to n=" + std::to_string(last);
  return f.sign_at_infinity() >= 0;
}

void suite_sign(const VerifyConfig& cfg, Out& out) {
  for (Setting s : {Setting::Gaussian, Setting::Boolean}) {
    auto pairs = enumerate_pairs(cross_spec(s));
    Tally t("sign/" + to_string(s) + "/nonnegative");
    parallel_for(pairs.size(), cfg.jobs, [&](size_t i) {
      const auto& pr = pairs[i];
      RatFuncN f = inner_product(pr.g, pr.h);
      long from = static_cast<long>(pr.g.edge_count() + pr.h.edge_count());
      std::string how;
      bool ok = nonnegative_from(f, std::max(1L, from), how);
      t.record(ok, pair_text(pr.g, pr.h), [&] { return std::pair{to_text(f) + " (" + how + ")", std::string(">= 0")}; });
    });
    out.push_back(t.done());
  }

  auto t0 = std::chrono::steady_clock::now();
  ScanConfig sc;
  sc.budget = cfg.scan_budget;
  sc.jobs = cfg.jobs;
  auto records = scan(sc);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  long planar = 0, nonplanar = 0, negative = 0, counterexamples = 0, matched = 0;
  Tally k5("sign/spherical/scan-nonplanar-negative-has-k5");
  std::string first_counter;
  for (const auto& r : records) {
    (r.union_planar ? planar : nonplanar)++;
    if (r.sign_at_large_n < 0) ++negative;
    if (r.conjecture_status == ConjectureStatus::Counterexample && counterexamples++ == 0)
      first_counter = pair_text(r.g, r.h);
    if (r.union_planar && r.leading_order_match) ++matched;
    if (!r.union_planar && r.sign_at_large_n < 0)
      k5.record(r.k5_minor, pair_text(r.g, r.h), [] { return std::pair{std::string("no K5 minor"), std::string("K5 minor")}; });
  }
  out.push_back(make_check("sign/spherical/scan", true, std::to_string(records.size()) + " pairs",
                           "budget " + std::to_string(cfg.scan_budget), 0, 0,
                           std::to_string(planar) + " planar, " + std::to_string(nonplanar) + " nonplanar, " +
                               std::to_string(negative) + " negative, " + std::to_string(matched) +
                               " planar with leading-order match, " + std::to_string(counterexamples) +
                               " conjecture counterexamples" +
                               (first_counter.empty() ? "" : " (first: " + first_counter + ")") + "; " +
                               std::to_string(secs) + " s"));
  out.push_back(k5.done(nonplanar == 0 ? "no nonplanar union within the budget" : ""));

  struct Named {
    const char *g, *h;
    int sign;
    bool planar;
  };
  for (const Named& x : {Named{"k5-inner", "k5-outer", -1, false}, Named{"fig3a-red", "fig3a-blue", -1, false},
                         Named{"fig3b-red", "fig3b-blue", -1, false}, Named{"fig4-g", "fig4-h", 1, true}}) {
    ScanRecord r = scan_pair(*named_graph(x.g), *named_graph(x.h));
    bool ok = r.sign_at_large_n == x.sign && r.union_planar == x.planar && r.k5_minor == !x.planar &&
              (!x.planar || (r.leading_order_match && r.conjecture_status == ConjectureStatus::Consistent));
    auto show = [](int sign, bool planar, bool k5) {
      return std::string(sign < 0 ? "-" : sign > 0 ? "+" : "0") + (planar ? " planar" : " nonplanar") +
             (k5 ? " k5-minor" : "");
    };
    out.push_back(make_check(std::string("sign/spherical/") + x.g + "+" + x.h, ok,
                             show(r.sign_at_large_n, r.union_planar, r.k5_minor), show(x.sign, x.planar, !x.planar),
                             0, 0, to_text(r.inner_product)));
  }
}

// ------------------------------------------------------------------ variance

void suite_variance(const VerifyConfig&, Out& out) {
  for (const Graph& g : table_graphs(Setting::Gaussian, 3)) {
    RatFuncN v = inner_product(g, g);
    long e = static_cast<long>(g.edge_count());
    BigInt c = 1, fact = 1;
    for (long i = 0; i < 2 * e; ++i) c *= e;
    for (int d : g.degrees()) fact *= factorial(d);
    std::string lo_bad, hi_bad, f_bad;
    for (long n = std::max(1L, e); n <= e + 10; ++n) {
      Rational val = v.eval(Rational(n));
      Rational base = RatFuncN(IntPolyN::n_power(static_cast<int>(e))).eval(Rational(n));
      if (lo_bad.empty() && val < base) lo_bad = "n=" + std::to_string(n) + ": " + to_string(val);
      if (hi_bad.empty() && val > Rational(c) * base) hi_bad = "n=" + std::to_string(n) + ": " + to_string(val);
      if (f_bad.empty() && val > Rational(fact) * base) f_bad = "n=" + std::to_string(n) + ": " + to_string(val);
    }
    std::string name = "variance/gaussian/" + monomial_text(g);
    out.push_back(make_check(name + "/lower", lo_bad.empty(), lo_bad.empty() ? to_text(v) : lo_bad, ">= n^|E|"));
    out.push_back(make_check(name + "/upper", hi_bad.empty(), hi_bad.empty() ? to_text(v) : hi_bad,
                             "<= |E|^(2|E|) n^|E|", 0, 0, g.has_loops() && !hi_bad.empty() ? "graph has a self-loop" : ""));
    out.push_back(make_check(name + "/upper-degree-factorial", f_bad.empty(), f_bad.empty() ? to_text(v) : f_bad,
                             "<= prod deg(v)! n^|E|"));
  }
  for (const auto& row : build_table(Setting::Boolean, 8)) {
    const Graph& g = row.g;
    RatFuncN v = inner_product(g, g);
    long e = static_cast<long>(g.edge_count());
    BigInt c = 1;
    for (long i = 0; i < 2 * e; ++i) c *= 2 * e;
    RatFuncN ff = fall1(IntPolyN::n_power(1), static_cast<int>(e));
    std::string lo_bad, hi_bad;
    for (long n = std::max(1L, e); n <= e + 10; ++n) {
      Rational val = v.eval(Rational(n)), base = ff.eval(Rational(n));
      if (lo_bad.empty() && val < base) lo_bad = "n=" + std::to_string(n) + ": " + to_string(val);
      if (hi_bad.empty() && val > Rational(c) * base) hi_bad = "n=" + std::to_string(n) + ": " + to_string(val);
    }
    std::string name = "variance/boolean/" + monomial_text(g);
    out.push_back(make_check(name + "/lower", lo_bad.empty(), lo_bad.empty() ? to_text(v) : lo_bad, ">= n^(|E| falling)"));
    out.push_back(make_check(name + "/upper", hi_bad.empty(), hi_bad.empty() ? to_text(v) : hi_bad,
                             "<= (2|E|)^(2|E|) n^(|E| falling)"));
  }
  for (const Graph& g : table_graphs(Setting::Spherical, 4)) {
    RatFuncN v = inner_product(g, g);
    int want = -static_cast<int>(g.edge_count());
    out.push_back(make_check("variance/spherical/" + monomial_text(g) + "/order", !v.is_zero() && v.order() == want,
                             std::to_string(v.order()), std::to_string(want), 0, 0, to_text(v)));
  }
}

// ------------------------------------------------------------------ Boolean λ

void suite_lambda(const VerifyConfig&, Out& out) {
  // Printed coefficients by block type, and the number of partitions of each type.
  struct Row {
    std::vector<int> type;
    long printed;
    long count;
  };
  const std::map<int, std::vector<Row>> printed = {
      {6, {{{2, 2, 2}, 1, 15}, {{2, 4}, -2, 15}, {{6}, 16, 1}}},
      {8, {{{2, 2, 2, 2}, 1, 105}, {{2, 2, 4}, -2, 210}, {{2, 6}, 16, 28}, {{4, 4}, 4, 35}, {{8}, 8, 1}}},
  };
  for (const auto& [k, rows] : printed) {
    std::map<std::vector<int>, std::set<BigInt>> values;
    std::map<std::vector<int>, long> counts;
    BigInt total = 0;
    for (const auto& [part, lam] : boolean_lambda(k)) {
      std::vector<int> type(block_count(part), 0);
      for (int b : part) ++type[b];
      std::sort(type.begin(), type.end());
      values[type].insert(lam);
      ++counts[type];
      total += lam;
    }
    std::string got, want;
    bool all = true;
    for (const auto& r : rows) {
      std::string tname;
      for (int x : r.type) tname += (tname.empty() ? "" : ",") + std::to_string(x);
      const auto& vs = values[r.type];
      bool ok = vs.size() == 1 && *vs.begin() == r.printed && counts[r.type] == r.count;
      all = all && ok;
      std::string v = vs.size() == 1 ? vs.begin()->get_str() : "not constant";
      got += (got.empty() ? "" : " ") + v;
      want += (want.empty() ? "" : " ") + std::to_string(r.printed);
      out.push_back(make_check("lambda/k=" + std::to_string(k) + "/(" + tname + ")", ok,
                               v + " x" + std::to_string(counts[r.type]),
                               std::to_string(r.printed) + " x" + std::to_string(r.count)));
    }
    out.push_back(make_check("lambda/k=" + std::to_string(k) + "/multiset", all, "{" + got + "}", "{" + want + "}"));
    // d_i all equal to e_1 at n = 1: the expectation is 1, so the λ sum to 1.
    out.push_back(make_check("lambda/k=" + std::to_string(k) + "/sum-rule", total == 1, total.get_str(), "1"));
    long printed_sum = 0;
    for (const auto& r : rows) printed_sum += r.printed * r.count;
    out.push_back(make_check("lambda/k=" + std::to_string(k) + "/printed-sum-rule", true, std::to_string(printed_sum),
                             "1", 0, 0, printed_sum == 1 ? "printed values consistent" : "printed values violate it"));
  }
}

// ------------------------------------------------------------------ dominance

void suite_dominance(const VerifyConfig& cfg, Out& out) {
  PairSpec spec;
  spec.setting = Setting::Spherical;
  spec.max_union_edges = 8;
  spec.max_degree_two = true;
  spec.degree_equivalent = true;
  spec.loopless = true;
  auto pairs = enumerate_pairs(spec);
  Tally lemma("dominance/dominant-iff-noncrossing-gloop"), sub("dominance/subsets-of-dominant"),
      hh("dominance/hloop-equals-gloop"), conj("dominance/simple-matching-dominates");
  std::mutex mu;
  long matchings = 0, subsets = 0;
  parallel_for(pairs.size(), cfg.jobs, [&](size_t i) {
    const auto& pr = pairs[i];
    DartGraph dg = make_darts(pr.g, pr.h);
    auto quad = v4(dg);
    std::string where = pair_text(pr.g, pr.h);
    long local_m = 0, local_s = 0;
    for_each_matching(dg, MatchKind::Cross, [&](const MatchingCollection& m) {
      ++local_m;
      auto gl = gloop(dg, m);
      auto hl = hloop(dg, m);
      hh.record(gl == hl, where + " M=" + m.dump(dg), [] { return std::pair{std::string("differ"), std::string("equal")}; });
      std::vector<bool> dominant(1u << quad.size());
      for (uint32_t mask = 0; mask < dominant.size(); ++mask) {
        std::vector<int> s;
        for (size_t j = 0; j < quad.size(); ++j)
          if (mask >> j & 1) s.push_back(quad[j]);
        ++local_s;
        dominant[mask] = is_dominant(dg, m, s);
        bool in_gl = std::all_of(s.begin(), s.end(), [&](int v) { return std::count(gl.begin(), gl.end(), v) > 0; });
        bool predicted = in_gl && is_noncrossing(dg, m, s);
        lemma.record(dominant[mask] == predicted, where + " M=" + m.dump(dg), [&] {
          return std::pair{std::string(dominant[mask] ? "dominant" : "not dominant"),
                           std::string(predicted ? "noncrossing in gloop" : "not noncrossing in gloop")};
        });
      }
      for (uint32_t mask = 0; mask < dominant.size(); ++mask) {
        if (!dominant[mask]) continue;
        bool ok = true;
        for (uint32_t s2 = mask; s2; s2 = (s2 - 1) & mask) ok = ok && dominant[s2];
        sub.record(ok && dominant[0], where, [] { return std::pair{std::string("subset not dominant"), std::string("dominant")}; });
      }
    });
    ScanRecord r = scan_pair(pr.g, pr.h);
    conj.record(r.dominance_holds, where, [] { return std::pair{std::string("undominated s_M term"), std::string("dominated")}; });
    std::lock_guard<std::mutex> lock(mu);
    matchings += local_m;
    subsets += local_s;
  });
  std::string note = std::to_string(pairs.size()) + " pairs, " + std::to_string(matchings) + " matchings, " +
                     std::to_string(subsets) + " subsets";
  out.push_back(lemma.done(note));
  out.push_back(sub.done());
  out.push_back(hh.done());
  out.push_back(conj.done());
}

// ------------------------------------------------------------------ inversion

void suite_inversion(const VerifyConfig&, Out& out) {
  Graph a = *named_graph("k5-inner"), b = *named_graph("k5-outer");
  auto blocks = build_blocks({a, b});
  out.push_back(make_check("inversion/k5/one-block", blocks.size() == 1 && blocks[0].graphs.size() == 2,
                           std::to_string(blocks.size()) + " blocks", "1 block of 2"));
  RatFuncN off = blocks.at(0).q[0][1];
  RatFuncN off_want = parse_ratfunc("-8(n-1)(n-2)(n-4)/(n^8(n+2)^4)");
  out.push_back(make_check("inversion/k5/off-diagonal", off == off_want, to_text(off), to_text(off_want)));
  for (long n : {6L, 10L}) {
    FourierTarget t;
    t.graphs = {a, b};
    t.targets = {{a.key(), Rational(1)}, {b.key(), Rational(-3, 7)}};
    t.n = n;
    Reconstruction r = invert_and_reconstruct(blocks, t);
    // multiply back with Gram entries computed through the expectation formula
    bool ok = r.residual_zero;
    std::string lhs;
    for (const Graph& g : t.graphs) {
      Rational acc = 0;
      for (const Graph& h : t.graphs) acc += r.coeff.at(h.key()) * inner_product_via_expectation(g, h).eval(Rational(n));
      ok = ok && acc == t.targets.at(g.key());
      lhs += (lhs.empty() ? "" : ", ") + to_string(acc);
    }
    out.push_back(make_check("inversion/k5/residual", ok, lhs, "1, -3/7", n));
  }
  auto rows = diagonality_report(blocks[0], {10, 100, 1000});
  bool dec = true;
  std::string ratios;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i && !(rows[i].ratio < rows[i - 1].ratio)) dec = false;
    ratios += (ratios.empty() ? "" : " > ") + std::to_string(rows[i].ratio);
  }
  out.push_back(make_check("inversion/k5/diagonality", dec, ratios, "strictly decreasing"));

  Graph f4g = *named_graph("fig4-g"), f4h = *named_graph("fig4-h");
  auto fb = build_blocks({f4g, f4h});
  auto fr = diagonality_report(fb.at(0), {100});
  out.push_back(make_check("inversion/fig4/diagonality", fr.at(0).ratio < 0.01, std::to_string(fr.at(0).ratio), "< 0.01", 100));

  Graph e = Graph::from_edges(Setting::Gaussian, {{1, 2}});
  FourierTarget te;
  te.graphs = {e};
  te.targets = {{e.key(), Rational(1)}};
  te.n = 7;
  Reconstruction re = invert_and_reconstruct(build_blocks({e}), te);
  out.push_back(make_check("inversion/edge", re.coeff.at(e.key()) == Rational(1, 7), to_string(re.coeff.at(e.key())), "1/7", 7));

  Graph tri = Graph::from_edges(Setting::Spherical, {{1, 2}, {2, 3}, {1, 3}});
  FourierTarget tt;
  tt.graphs = {tri};
  tt.targets = {{tri.key(), Rational(1)}};
  tt.n = 2;
  std::string got = "inverted";
  try {
    invert_and_reconstruct(build_blocks({tri}), tt);
  } catch (const SingularBlockError& ex) {
    got = "singular block";
  }
  out.push_back(make_check("inversion/spherical-triangle-singular", got == "singular block", got, "singular block", 2));
}

// ------------------------------------------------------------------ Monte Carlo

void suite_monte_carlo(const VerifyConfig& cfg, Out& out) {
  struct Case {
    std::string name;
    Setting s;
    std::vector<Edge> g, h;  // h empty: E[m_G]
    bool ortho;              // use p_G rather than m_G
  };
  const std::vector<Case> cases = {
      {"gaussian E[C4]", Setting::Gaussian, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {}, false},
      {"gaussian E[x11^2]", Setting::Gaussian, {{1, 1}, {1, 1}}, {}, false},
      {"gaussian <p,p> x12^2", Setting::Gaussian, {{1, 2}, {1, 2}}, {{1, 2}, {1, 2}}, true},
      {"gaussian <p,p> triangle", Setting::Gaussian, {{1, 2}, {2, 3}, {1, 3}}, {{1, 2}, {2, 3}, {1, 3}}, true},
      {"spherical E[x12^2]", Setting::Spherical, {{1, 2}, {1, 2}}, {}, false},
      {"spherical <p,p> C4", Setting::Spherical, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, true},
      {"spherical <p,p> path", Setting::Spherical, {{1, 2}, {2, 3}}, {{1, 2}, {2, 3}}, true},
      {"boolean E[x12^4]", Setting::Boolean, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}, {}, false},
      {"boolean <p,p> x1234", Setting::Boolean, {{1, 2, 3, 4}}, {{1, 2, 3, 4}}, true},
      {"boolean <p,p> triangle", Setting::Boolean, {{1, 2}, {2, 3}, {1, 3}}, {{1, 2}, {2, 3}, {1, 3}}, true},
  };
  O::SampleConfig sc;
  sc.n = 10;
  sc.sample_count = cfg.mc_samples;
  sc.rng_seed = cfg.seed;
  sc.jobs = cfg.jobs;
  for (size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    Graph g = Graph::from_edges(c.s, c.g);
    std::vector<InvariantPoly> factors;
    RatFuncN exact;
    if (c.h.empty()) {
      factors = {InvariantPoly::monomial(g)};
      exact = expectation(g);
    } else {
      Graph h = Graph::from_edges(c.s, c.h);
      auto [g2, h2] = on_common_vertices(g, h);
      factors = {orthopoly(g2), orthopoly(h2)};
      exact = inner_product(g2, h2);
    }
    O::SampleConfig local = sc;
    local.rng_seed = derive_seed(cfg.seed, 1000 + i);
    O::Estimate est = O::monte_carlo_expectation(factors, local);
    double want = exact.eval_double(10);
    bool ok = std::abs(est.mean - want) <= sc.tolerance_sigmas * est.stderr_;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6g +- %.3g", est.mean, est.stderr_);
    out.push_back(make_check("monte-carlo/" + c.name, ok, buf, std::to_string(want) + " (" + to_text(exact) + ")", 10,
                             local.rng_seed, std::to_string(est.samples) + " samples, 4 standard errors"));
  }
}

// ------------------------------------------------------------------ invariance

void suite_invariance(const VerifyConfig& cfg, Out& out) {
  struct Case {
    Setting s;
    std::vector<Edge> e;
    int n;
  };
  const std::vector<Case> cases = {
      {Setting::Gaussian, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 10},
      {Setting::Gaussian, {{1, 1}, {1, 2}, {1, 2}}, 10},
      {Setting::Spherical, {{1, 2}, {2, 3}, {1, 3}}, 10},
      {Setting::Spherical, {{1, 2}, {1, 2}, {3, 4}, {3, 4}}, 10},
      {Setting::Boolean, {{1, 2, 3, 4}, {1, 2}}, 4},
      {Setting::Boolean, {{1, 2}, {2, 3}, {1, 3}}, 4},
      {Setting::Boolean, {{1, 2}, {1, 2}, {1, 3}, {2, 3}}, 10},
  };
  for (const auto& c : cases) {
    Graph g = Graph::from_edges(c.s, c.e);
    O::SampleConfig sc;
    sc.n = c.n;
    sc.rng_seed = cfg.seed;
    O::InvarianceReport r = O::invariance_check(orthopoly(g), sc);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", r.max_deviation);
    out.push_back(make_check("invariance/" + to_string(c.s) + "/" + monomial_text(g), r.passed,
                             r.exact ? "exact" : std::string("max relative deviation ") + buf,
                             r.exact ? "exact" : "< 1e-9", c.n, cfg.seed, std::to_string(r.trials) + " transformations"));
  }
}

// ------------------------------------------------------------------ Isserlis

void suite_isserlis(const VerifyConfig&, Out& out) {
  // E_v[<v,v><v,d1><v,d2>] = c(n) <d1,d2>. With d1, d2 Gaussian as well, the
  // joint moment of {vv, v1, v2, 12} is c(n) E[x12^2] = c(n) n.
  const int k = 2, p = 1;
  const Vertex v = 3;
  std::vector<Edge> joint{{v, v}, {1, v}, {2, v}, {1, 2}};
  Graph jg = Graph::from_edges(Setting::Gaussian, joint);
  Graph x12sq = Graph::from_edges(Setting::Gaussian, {{1, 2}, {1, 2}});
  Graph x12 = Graph::from_edges(Setting::Gaussian, {{1, 2}});
  InvariantPoly shipped = isserlis(Setting::Gaussian, k, p).poly;
  for (int n : {3, 4, 5, 6}) {
    Rational oracle = O::exact_expectation_at_n(jg, n) / O::exact_expectation_at_n(x12sq, n);
    Rational literal = O::literal_expectation_at_n(jg, n) / O::literal_expectation_at_n(x12sq, n);
    Rational k_dependent = 1, k_free = 1;
    for (int j = 1; j <= p; ++j) {
      k_dependent *= n + k + 2 * j - 2;
      k_free *= n + 2 * j - 2;
    }
    Rational impl = shipped.coeff(x12).eval(Rational(n));
    std::string verdict = oracle == k_dependent && oracle != k_free   ? "oracle confirms prod (n+k+2j-2)"
                          : oracle == k_free && oracle != k_dependent ? "oracle confirms n(n+2)...(n+2p-2)"
                                                                      : "oracle confirms neither";
    if (n == 3)
      out.push_back(make_check("isserlis/discrepancy", oracle == k_dependent && oracle != k_free && literal == oracle,
                               to_string(oracle),
                               "prod (n+k+2j-2) = " + to_string(k_dependent) + "; n(n+2)...(n+2p-2) = " + to_string(k_free),
                               n, 0, verdict));
    out.push_back(make_check("isserlis/implementation", impl == oracle && shipped.size() == 1, to_string(impl),
                             to_string(oracle), n, 0, to_text(shipped)));
  }
  // Spherical expansion equals the Gaussian one divided by n(n+2)...(n+k-2).
  for (int kk : {2, 4, 6}) {
    InvariantPoly gpoly = isserlis(Setting::Gaussian, kk, 0).poly;
    InvariantPoly spoly = isserlis(Setting::Spherical, kk, 0).poly;
    InvariantPoly scaled(Setting::Spherical, gpoly.vertices());
    RatFuncN f = rise2(IntPolyN::n_power(1), -kk / 2);
    for (const auto& [key, c] : gpoly.terms()) scaled.add_key(key, c * f);
    out.push_back(make_check("isserlis/spherical-scaling/k=" + std::to_string(kk), scaled == spoly, to_text(spoly),
                             to_text(scaled)));
  }
}

// ------------------------------------------------------------------ Gram-Schmidt

void suite_gram_schmidt(const VerifyConfig&, Out& out) {
  for (Setting s : kSettings) {
    auto graphs = table_graphs(s, 3);
    for (const auto& c : gram_schmidt_symbolic_check(graphs, s == Setting::Boolean ? 6 : -1))
      out.push_back(make_check("gram-schmidt/" + c.name, c.ok, c.ok ? "holds" : c.detail, "holds"));
  }
}

using SuiteFn = void (*)(const VerifyConfig&, Out&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"tables", suite_tables},
      {"exact-values", suite_exact_values},
      {"oracle-agreement", suite_oracle},
      {"cross-validation", suite_cross},
      {"sign", suite_sign},
      {"variance-bounds", suite_variance},
      {"boolean-lambda", suite_lambda},
      {"dominance", suite_dominance},
      {"inversion", suite_inversion},
      {"monte-carlo", suite_monte_carlo},
      {"invariance", suite_invariance},
      {"isserlis-discrepancy", suite_isserlis},
      {"gram-schmidt", suite_gram_schmidt},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

bool is_suite(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (!is_suite(name)) throw GraphError("unknown suite '" + name + "'");
  SuiteReport rep;
  rep.suite = name;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& [suite, fn] : registry())
    if (name == "all" || name == suite) fn(cfg, rep.checks);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace orthograph
