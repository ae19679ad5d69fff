#include "orthograph/tables.hpp"

#include <algorithm>
#include <sstream>

namespace orthograph {

int default_table_budget(Setting s) {
  switch (s) {
    case Setting::Gaussian: return 3;
    case Setting::Spherical: return 4;
    case Setting::Boolean: return 8;
  }
  return 3;
}

int table_degree(const Graph& g) {
  return g.setting() == Setting::Boolean ? g.total_degree() : static_cast<int>(g.edge_count());
}

std::vector<TableRow> build_table(Setting s, int budget) {
  if (budget < 0) throw GraphError("negative table budget");
  EnumSpec spec;
  spec.setting = s;
  if (s == Setting::Boolean) {
    if (budget > 10) throw BudgetError("Boolean tables limited to degree 10");
    spec.max_degree = budget;
    spec.max_edges = budget / 2;
    spec.max_vertices = budget;
  } else {
    if (budget > 6) throw BudgetError("tables limited to 6 edges");
    spec.max_edges = budget;
    spec.max_vertices = budget + 1;
  }
  std::vector<TableRow> rows;
  for (const Graph& g : enumerate_graphs(spec)) rows.push_back({table_degree(g), g, orthopoly(g)});
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.degree < b.degree; });
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string latex_monomial(const Graph& g) {
  if (g.edge_count() == 0) return "1";
  return to_latex(InvariantPoly::monomial(g));
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back({{"degree", r.degree}, {"graph", to_json(r.g)}, {"poly", to_json(r.p)}});
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "degree,m_G,p_G\n";
    for (const auto& r : rows)
      os << r.degree << "," << csv_field(monomial_text(r.g)) << "," << csv_field(to_text(r.p)) << "\n";
  } else if (format == "latex") {
    os << "\\begin{tabular}{|l|c|c|}\n\\hline\nDegree & $m_G$ & $p_G$\\\\\n\\hline\n";
    for (const auto& r : rows)
      os << r.degree << " & $" << latex_monomial(r.g) << "$ & $" << to_latex(r.p) << "$\\\\\n\\hline\n";
    os << "\\end{tabular}\n";
  } else if (format == "text") {
    size_t w = 3;
    for (const auto& r : rows) w = std::max(w, monomial_text(r.g).size());
    for (const auto& r : rows) {
      std::string m = monomial_text(r.g);
      os << r.degree << "  " << m << std::string(w - m.size() + 2, ' ') << to_text(r.p) << "\n";
    }
  } else {
    throw GraphError("unknown table format '" + format + "'");
  }
  return os.str();
}

std::vector<GoldenRow> read_golden(Setting s, std::istream& in) {
  std::vector<GoldenRow> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto a = line.find('|'), b = a == std::string::npos ? a : line.find('|', a + 1);
    if (b == std::string::npos) throw GraphError("golden line " + std::to_string(lineno) + ": expected 'degree | m_G | p_G'");
    GoldenRow r;
    r.degree = std::stoi(line.substr(0, a));
    r.monomial = line.substr(a + 1, b - a - 1);
    r.poly = line.substr(b + 1);
    InvariantPoly m = parse_poly(s, r.monomial);
    if (m.size() != 1 || m.terms().begin()->second != RatFuncN(1))
      throw GraphError("golden line " + std::to_string(lineno) + ": m_G must be a single monic monomial");
    r.g = Graph(s, m.vertices(), decode_edges(m.terms().begin()->first));
    r.p = parse_poly(s, r.poly, r.g.vertices());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace orthograph
