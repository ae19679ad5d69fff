#include <algorithm>
#include <cctype>
#include <limits>

#include "orthograph/polyspace.hpp"

namespace orthograph {

namespace {

// Edges grouped with multiplicities, in key order.
std::vector<std::pair<Edge, int>> grouped(const std::vector<Edge>& edges) {
  std::vector<std::pair<Edge, int>> out;
  for (const auto& e : edges) {
    if (!out.empty() && out.back().first == e) ++out.back().second;
    else out.push_back({e, 1});
  }
  return out;
}

std::string monomial_of(const std::vector<Edge>& edges, bool latex) {
  std::string s;
  for (const auto& [e, k] : grouped(edges)) {
    if (!s.empty() && !latex) s += "*";
    s += latex ? "x_{" + edge_label(e) + "}" : "x" + edge_label(e);
    if (k > 1) s += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
  }
  return s;
}

// Needs parentheses when juxtaposed with a monomial.
bool compound(const std::string& t) {
  int depth = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && (c == '/' || ((c == '+' || c == '-') && i > 0))) return true;
  }
  return false;
}

int term_degree(const std::string& key) {
  int d = 0;
  for (const auto& e : decode_edges(key)) d += static_cast<int>(e.size());
  return d;
}

std::vector<std::string> ordered_keys(const InvariantPoly& p) {
  std::vector<std::string> keys;
  for (const auto& [k, c] : p.terms()) keys.push_back(k);
  std::stable_sort(keys.begin(), keys.end(),
                   [](const std::string& a, const std::string& b) { return term_degree(a) > term_degree(b); });
  return keys;
}

std::string render_poly(const InvariantPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& key : ordered_keys(p)) {
    RatFuncN c = p.terms().at(key);
    bool neg = c.num().lead() < 0;
    if (neg) c = -c;
    std::string mono = monomial_of(decode_edges(key), latex);
    std::string ct = latex ? to_latex(c) : to_text(c);
    std::string body;
    if (mono.empty()) body = ct;
    else if (c == RatFuncN(1)) body = mono;
    else if (latex) body = (compound(ct) && ct.rfind("\\frac", 0) != 0 ? "\\left(" + ct + "\\right)" : ct) + mono;
    else body = (compound(ct) ? "(" + ct + ")" : ct) + "*" + mono;
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

nlohmann::json coeff_array(const IntPolyN& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) a.push_back(c.get_si());
    else a.push_back(c.get_str());
  }
  return a;
}

IntPolyN poly_from_array(const nlohmann::json& a) {
  if (!a.is_array()) throw GraphError("coefficient list must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& x : a) {
    if (x.is_number_integer()) c.emplace_back(static_cast<long>(x.get<long long>()));
    else if (x.is_string()) c.emplace_back(x.get<std::string>());
    else throw GraphError("coefficients must be integers or decimal strings");
  }
  return IntPolyN(c);
}

}  // namespace

std::string monomial_text(const Graph& g) {
  std::string s = monomial_of(g.edges(), false);
  return s.empty() ? "1" : s;
}

std::string to_text(const InvariantPoly& p) { return render_poly(p, false); }
std::string to_latex(const InvariantPoly& p) { return render_poly(p, true); }

nlohmann::json to_json(const RatFuncN& f) { return {{"num", coeff_array(f.num())}, {"den", coeff_array(f.den())}}; }

RatFuncN ratfunc_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw GraphError("coefficient must be an object with num and den");
  IntPolyN den = poly_from_array(j.at("den"));
  if (den.is_zero()) throw GraphError("zero denominator in coefficient");
  return RatFuncN(poly_from_array(j.at("num")), den);
}

nlohmann::json to_json(const InvariantPoly& p) {
  nlohmann::json j;
  j["setting"] = to_string(p.setting());
  j["vertices"] = p.vertices();
  j["terms"] = nlohmann::json::array();
  for (const auto& key : ordered_keys(p)) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& e : decode_edges(key)) g.push_back(e);
    j["terms"].push_back({{"graph", g}, {"coeff", to_json(p.terms().at(key))}});
  }
  return j;
}

InvariantPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphError("polynomial JSON must be an object");
  auto vs = j.at("vertices").get<std::vector<Vertex>>();
  std::sort(vs.begin(), vs.end());
  InvariantPoly p(parse_setting(j.at("setting").get<std::string>()), vs);
  for (const auto& t : j.at("terms")) p.add_term(edges_from_json(t.at("graph")), ratfunc_from_json(t.at("coeff")));
  return p;
}

}  // namespace orthograph

namespace orthograph {

namespace {

class PolyParser {
 public:
  PolyParser(Setting s, const std::string& text) : s_(s), t_(text) {}

  // First pass: edges of every variable, in order of appearance.
  std::vector<Edge> scan_edges() {
    std::vector<Edge> out;
    for (i_ = 0; i_ < t_.size(); ++i_)
      if (t_[i_] == 'x') {
        ++i_;
        out.push_back(variable());
        --i_;
      }
    return out;
  }

  InvariantPoly parse(std::vector<Vertex> vs) {
    vs_ = std::move(vs);
    i_ = 0;
    InvariantPoly r = expr();
    skip();
    if (i_ != t_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw GraphError("cannot parse polynomial '" + t_ + "' at position " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < t_.size() && t_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= t_.size()) return false;
    char c = t_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == 'x' || c == '(';
  }
  InvariantPoly scalar(const RatFuncN& c) { return InvariantPoly::constant(s_, vs_, c); }

  // After the 'x': "12", "1234" (Boolean) or "{10,11}".
  Edge variable() {
    Edge e;
    if (i_ < t_.size() && t_[i_] == '{') {
      size_t close = t_.find('}', i_);
      if (close == std::string::npos) fail("unterminated variable");
      std::string body = t_.substr(i_ + 1, close - i_ - 1);
      size_t pos = 0;
      while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        try {
          e.push_back(std::stoi(body.substr(pos, comma - pos)));
        } catch (const std::exception&) {
          fail("bad vertex in variable");
        }
        pos = comma + 1;
      }
      i_ = close + 1;
    } else {
      size_t st = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) e.push_back(t_[i_++] - '0');
      if (s_ != Setting::Boolean && i_ - st != 2) fail("variable needs two single-digit vertices");
      if (e.empty()) fail("empty variable");
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  InvariantPoly expr() {
    InvariantPoly r = term();
    while (true) {
      if (peek('+')) {
        ++i_;
        r += term();
      } else if (peek('-')) {
        ++i_;
        r -= term();
      } else {
        return r;
      }
    }
  }
  InvariantPoly term() {
    InvariantPoly r = unary();
    while (true) {
      if (peek('*')) {
        ++i_;
        r = multiply(r, unary());
      } else if (peek('/')) {
        ++i_;
        InvariantPoly d = unary();
        if (d.size() != 1 || d.terms().begin()->first != encode_edges({})) fail("can only divide by a scalar");
        r *= RatFuncN(1) / d.terms().begin()->second;
      } else if (starts_factor()) {
        r = multiply(r, power());
      } else {
        return r;
      }
    }
  }
  InvariantPoly unary() {
    if (peek('-')) {
      ++i_;
      InvariantPoly r = unary();
      r *= RatFuncN(-1);
      return r;
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }
  InvariantPoly power() {
    InvariantPoly base = atom();
    if (!peek('^')) return base;
    ++i_;
    skip();
    size_t st = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (st == i_) fail("expected exponent");
    int e = std::stoi(t_.substr(st, i_ - st));
    InvariantPoly r = scalar(RatFuncN(1));
    for (int k = 0; k < e; ++k) r = multiply(r, base);
    return r;
  }
  InvariantPoly atom() {
    skip();
    if (i_ >= t_.size()) fail("unexpected end");
    char c = t_[i_];
    if (c == '(') {
      ++i_;
      InvariantPoly r = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return r;
    }
    if (c == 'n') {
      ++i_;
      return scalar(RatFuncN::n());
    }
    if (c == 'x') {
      ++i_;
      InvariantPoly r(s_, vs_);
      r.add_term({variable()}, RatFuncN(1));
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      return scalar(RatFuncN(BigInt(t_.substr(st, i_ - st))));
    }
    fail("unexpected character");
  }

  Setting s_;
  const std::string& t_;
  std::vector<Vertex> vs_;
  size_t i_ = 0;
};

}  // namespace

InvariantPoly parse_poly(Setting s, const std::string& text, std::vector<Vertex> vertices) {
  PolyParser parser(s, text);
  auto edges = parser.scan_edges();
  if (vertices.empty()) {
    for (const auto& e : edges) vertices.insert(vertices.end(), e.begin(), e.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  }
  for (const auto& e : edges) validate_edge(s, e);
  return parser.parse(std::move(vertices));
}

}  // namespace orthograph
