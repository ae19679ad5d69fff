#pragma once

#include <istream>
#include <string>
#include <vector>

#include "orthograph/polyspace.hpp"

namespace orthograph {

struct TableRow {
  int degree = 0;  // |E| in the x_uv (Gaussian, spherical); degree in the vectors (Boolean)
  Graph g;
  InvariantPoly p;
};

// All connected graphs up to isomorphism: Gaussian and spherical by edge count
// (default 3 and 4), Boolean by total degree (default 8).
int default_table_budget(Setting s);
int table_degree(const Graph& g);
std::vector<TableRow> build_table(Setting s, int budget);

// format: text, csv, latex, json
std::string render_table(const std::vector<TableRow>& rows, const std::string& format);

// Checked-in tables: lines "degree | m_G | p_G" in the text syntax of
// parse_poly; '#' starts a comment.
struct GoldenRow {
  int degree = 0;
  std::string monomial, poly;
  Graph g;
  InvariantPoly p;
};
std::vector<GoldenRow> read_golden(Setting s, std::istream& in);

}  // namespace orthograph
