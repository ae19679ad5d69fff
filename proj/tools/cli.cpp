#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "orthograph/inversion.hpp"
#include "orthograph/oracle.hpp"
#include "orthograph/polyspace.hpp"
#include "orthograph/scan.hpp"
#include "orthograph/tables.hpp"
#include "orthograph/verify.hpp"

namespace orthograph::cli {

namespace {

struct Options {
  std::string setting;
  std::string edges;
  std::string g, h;
  std::string format = "text";
  long n = 0;
  uint64_t seed = 0x5eed;
  int budget = -1;
  int jobs = 1;
  std::string suite = "all";
  std::string target;
  std::string golden_dir;
  long samples = 100000;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<Setting> setting_of(const Options& o) {
  if (o.setting.empty()) return std::nullopt;
  return parse_setting(o.setting);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

// A built-in name, inline JSON, or a JSON file.
Graph load_graph(const std::string& spec, std::optional<Setting> s) {
  if (auto g = named_graph(spec, s.value_or(Setting::Spherical))) return *g;
  bool inline_json = !spec.empty() && (spec[0] == '[' || spec[0] == '{');
  return graph_from_json(parse_json(inline_json ? spec : read_file(spec), spec), s);
}

Graph input_graph(const Options& o) {
  if (!o.edges.empty()) {
    auto s = setting_of(o);
    if (!s) throw UsageError("--edges needs --setting");
    return Graph::from_edges(*s, edges_from_json(parse_json(o.edges, "--edges")));
  }
  if (!o.g.empty()) return load_graph(o.g, setting_of(o));
  throw UsageError("give --edges or --g");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' not supported here");
}

void print_value(const Options& o, const RatFuncN& f, std::ostream& out) {
  require_format(o, {"text", "json", "latex"});
  if (o.n) {
    Rational v = f.eval(Rational(o.n));
    if (o.format == "json")
      out << nlohmann::json{{"n", o.n}, {"value", to_string(v)}}.dump() << "\n";
    else
      out << to_string(v) << "\n";
    return;
  }
  if (o.format == "json")
    out << to_json(f).dump() << "\n";
  else if (o.format == "latex")
    out << to_latex(f) << "\n";
  else
    out << to_text(f) << "\n";
}

int cmd_expect(const Options& o, std::ostream& out) {
  print_value(o, expectation(input_graph(o)), out);
  return kOk;
}

int cmd_orthopoly(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "latex"});
  InvariantPoly p = orthopoly(input_graph(o));
  if (o.n) {
    oracle::ConcretePoly c = oracle::eval_at(p, o.n);
    if (o.format == "json") {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, v] : c.terms) terms.push_back({{"edges", decode_edges(k)}, {"coeff", to_string(v)}});
      out << nlohmann::json{{"setting", to_string(c.setting)}, {"n", o.n}, {"vertices", c.vertices}, {"terms", terms}}
                 .dump()
          << "\n";
    } else {
      out << oracle::to_text(c) << "\n";
    }
    return kOk;
  }
  if (o.format == "json")
    out << to_json(p).dump() << "\n";
  else if (o.format == "latex")
    out << to_latex(p) << "\n";
  else
    out << to_text(p) << "\n";
  return kOk;
}

int cmd_inner(const Options& o, std::ostream& out) {
  if (o.g.empty() || o.h.empty()) throw UsageError("inner needs --g and --h");
  auto s = setting_of(o);
  auto [g, h] = on_common_vertices(load_graph(o.g, s), load_graph(o.h, s));
  print_value(o, inner_product(g, h), out);
  return kOk;
}

int cmd_invert(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"text", "json"});
  if (o.target.empty()) throw UsageError("invert needs a target JSON file");
  std::string text = !o.target.empty() && o.target[0] == '{' ? o.target : read_file(o.target);
  FourierTarget t = target_from_json(parse_json(text, o.target));
  if (o.n) t.n = o.n;
  try {
    Reconstruction r = invert_and_reconstruct(build_blocks(t.graphs), t);
    if (o.format == "json") {
      nlohmann::json coeff = nlohmann::json::array();
      for (const Graph& g : t.graphs)
        if (r.coeff.count(g.key())) coeff.push_back({{"graph", to_json(g)["edges"]}, {"coeff", to_string(r.coeff.at(g.key()))}});
      out << nlohmann::json{{"n", t.n}, {"f", to_json(r.f)}, {"coefficients", coeff}, {"residual_zero", r.residual_zero}}
                 .dump()
          << "\n";
    } else {
      out << to_text(r.f) << "\n";
    }
    return r.residual_zero ? kOk : kCheckFailed;
  } catch (const SingularBlockError& e) {
    err << "singular block at n=" << e.n << ":";
    for (const Graph& g : e.block) err << " " << monomial_text(g);
    err << "\n";
    return kCheckFailed;
  }
}

int cmd_table(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv", "latex"});
  auto s = setting_of(o);
  if (!s) throw UsageError("table needs --setting");
  int budget = o.budget < 0 ? default_table_budget(*s) : o.budget;
  out << render_table(build_table(*s, budget), o.format);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (!is_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.golden_dir = o.golden_dir;
  cfg.mc_samples = o.samples;
  if (o.budget >= 0) cfg.scan_budget = o.budget;
  SuiteReport r = run_suite(o.suite, cfg);
  if (o.format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    for (const auto& c : r.checks) {
      out << (c.ok ? "ok   " : "FAIL ") << c.name;
      if (c.n) out << " [n=" << c.n << "]";
      out << "\n";
      if (!c.ok) out << "     got:      " << c.lhs << "\n     expected: " << c.rhs << "\n";
      if (!c.ok && !c.note.empty()) out << "     " << c.note << "\n";
    }
    out << r.suite << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " passed\n";
  }
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_scan(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (!o.setting.empty() && parse_setting(o.setting) != Setting::Spherical)
    throw UsageError("scan covers the spherical setting only");
  ScanConfig cfg;
  cfg.budget = o.budget < 0 ? 8 : o.budget;
  cfg.jobs = o.jobs;
  for (const auto& r : scan(cfg)) {
    if (o.format == "json") {
      out << to_json(r).dump() << "\n";
    } else {
      out << monomial_text(r.g) << " | " << monomial_text(r.h) << "  " << (r.union_planar ? "planar" : "nonplanar")
          << (r.k5_minor ? " k5" : "") << "  sign " << r.sign_at_large_n << "  " << to_string(r.conjecture_status)
          << "  " << to_text(r.inner_product) << "\n";
    }
  }
  return kOk;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("ORTHOGRAPH_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw UsageError("ORTHOGRAPH_SEED is not an integer");
    }
  }
  return 0x5eed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Degree-orthogonal polynomials on graph-indexed monomials", "orthograph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto settings = CLI::IsMember({"gaussian", "spherical", "boolean"});
  auto add_common = [&](CLI::App* c) {
    c->add_option("--setting", o.setting, "gaussian, spherical or boolean")->check(settings);
    c->add_option("--format", o.format, "text, json, csv or latex");
    c->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  };
  auto add_graph = [&](CLI::App* c) {
    c->add_option("--edges", o.edges, "inline JSON edge list, e.g. [[1,2],[2,3]]");
    c->add_option("--g", o.g, "graph: built-in name, JSON file or inline JSON");
    c->add_option("--n", o.n, "evaluate at this dimension")->check(CLI::Range(1L, 1000000000L));
  };

  auto* expect = app.add_subcommand("expect", "E[m_G] as a rational function of n");
  add_common(expect);
  add_graph(expect);
  auto* ortho = app.add_subcommand("orthopoly", "the polynomial p_G");
  add_common(ortho);
  add_graph(ortho);
  auto* inner = app.add_subcommand("inner", "<p_G, p_H>");
  inner->set_help_flag("--help", "print this help message and exit");
  add_common(inner);
  inner->add_option("--g", o.g, "graph G")->required();
  inner->add_option("--h", o.h, "graph H")->required();
  inner->add_option("--n", o.n, "evaluate at this dimension")->check(CLI::Range(1L, 1000000000L));
  auto* invert = app.add_subcommand("invert", "reconstruct f from its coefficients <f, p_G>");
  add_common(invert);
  invert->add_option("target", o.target, "target JSON: a file path or an inline object")->required();
  invert->add_option("--n", o.n, "override the dimension in the target")->check(CLI::Range(1L, 1000000000L));
  auto* table = app.add_subcommand("table", "regenerate the polynomial table of a setting");
  add_common(table);
  table->add_option("--budget", o.budget, "edges (Gaussian, spherical) or total degree (Boolean)");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "RNG seed (default: $ORTHOGRAPH_SEED or 0x5eed)");
  verify->add_option("--budget", o.budget, "union-edge budget of the sign scan");
  verify->add_option("--samples", o.samples, "Monte Carlo samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--golden-dir", o.golden_dir, "directory with the checked-in tables");
  std::string suites;
  for (const auto& n : suite_names()) suites += (suites.empty() ? "" : ", ") + n;
  verify->footer("Suites: " + suites);
  auto* scanc = app.add_subcommand("scan", "spherical sign scan over pairs (G, H)");
  add_common(scanc);
  scanc->add_option("--budget", o.budget, "union edges, at most 10 (default 8)");
  scanc->add_option("--seed", o.seed, "accepted for uniformity; the scan is deterministic");

  try {
    o.seed = default_seed();
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*expect) return cmd_expect(o, out);
    if (*ortho) return cmd_orthopoly(o, out);
    if (*inner) return cmd_inner(o, out);
    if (*invert) return cmd_invert(o, out, err);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*scanc) return cmd_scan(o, out);
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace orthograph::cli
