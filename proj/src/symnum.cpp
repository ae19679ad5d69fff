#include "orthograph/symnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace orthograph {

// ---------------------------------------------------------------- IntPolyN

IntPolyN::IntPolyN(long v) {
  if (v != 0) c_.emplace_back(v);
}

IntPolyN::IntPolyN(const BigInt& v) {
  if (v != 0) c_.push_back(v);
}

IntPolyN::IntPolyN(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolyN IntPolyN::n_power(int k) {
  IntPolyN p;
  p.c_.assign(k + 1, BigInt(0));
  p.c_[k] = 1;
  return p;
}

IntPolyN IntPolyN::affine(long a, long b) {
  IntPolyN p;
  p.c_ = {BigInt(b), BigInt(a)};
  p.trim();
  return p;
}

void IntPolyN::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolyN::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

BigInt IntPolyN::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolyN IntPolyN::primitive_part() const {
  if (is_zero()) return *this;
  IntPolyN p = *this;
  BigInt g = content();
  if (p.lead() < 0) g = -g;
  p.divide_exact(g);
  return p;
}

Rational IntPolyN::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolyN IntPolyN::operator-() const {
  IntPolyN p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

IntPolyN& IntPolyN::operator+=(const IntPolyN& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolyN& IntPolyN::operator-=(const IntPolyN& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolyN operator*(const IntPolyN& a, const IntPolyN& b) {
  if (a.is_zero() || b.is_zero()) return IntPolyN();
  IntPolyN r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

IntPolyN& IntPolyN::operator*=(const IntPolyN& o) {
  *this = *this * o;
  return *this;
}

IntPolyN& IntPolyN::operator*=(const BigInt& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

IntPolyN& IntPolyN::divide_exact(const BigInt& k) {
  if (k == 1) return *this;
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return *this;
}

IntPolyN pseudo_remainder(const IntPolyN& a, const IntPolyN& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  const BigInt& lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    int dr = static_cast<int>(r.size()) - 1;
    BigInt lr = r.back();
    // r = lb*r - lr*n^(dr-db)*b
    for (auto& x : r) x *= lb;
    int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolyN(std::move(r));
}

IntPolyN primitive_gcd(const IntPolyN& a0, const IntPolyN& b0) {
  if (a0.is_zero() && b0.is_zero()) return IntPolyN(1);
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  if (a0.is_constant() || b0.is_constant()) return IntPolyN(1);
  IntPolyN a = a0.primitive_part();
  IntPolyN b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolyN r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
    if (!b.is_zero() && b.is_constant()) return IntPolyN(1);
  }
  return a.primitive_part();
}

IntPolyN exact_quotient(const IntPolyN& a, const IntPolyN& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) throw std::domain_error("exact_quotient: degree mismatch");
  std::vector<BigInt> q(dq + 1, BigInt(0));
  for (int k = dq; k >= 0; --k) {
    BigInt& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw std::domain_error("exact_quotient: not divisible");
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    q[k] = t;
    for (int i = 0; i <= db; ++i) r[i + k] -= t * bc[i];
  }
  for (const auto& x : r)
    if (x != 0) throw std::domain_error("exact_quotient: nonzero remainder");
  return IntPolyN(std::move(q));
}

// ---------------------------------------------------------------- RatFuncN

RatFuncN::RatFuncN(const Rational& v) : num_(v.get_num()), den_(v.get_den()) {}

RatFuncN::RatFuncN(IntPolyN num, IntPolyN den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFuncN with zero denominator");
  normalize();
}

void RatFuncN::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolyN(1);
    return;
  }
  if (!den_.is_constant()) {
    IntPolyN g = primitive_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  BigInt c = den_.content();
  BigInt cn = num_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_.divide_exact(c);
    den_.divide_exact(c);
  }
}

int RatFuncN::sign_at_infinity() const {
  if (is_zero()) return 0;
  return sgn(num_.lead());  // denominator lead is positive
}

Rational RatFuncN::eval(const Rational& n0) const {
  Rational d = den_.eval(n0);
  if (d == 0) {
    std::ostringstream os;
    os << "pole at n = " << n0.get_str();
    // name the vanishing factor when it is linear over the integers
    if (n0.get_den() == 1) {
      BigInt r = n0.get_num();
      os << " (denominator factor ";
      if (r == 0) os << "n";
      else if (r > 0) os << "(n-" << r.get_str() << ")";
      else os << "(n+" << BigInt(-r).get_str() << ")";
      os << " vanishes)";
    }
    throw PoleError(os.str());
  }
  return num_.eval(n0) / d;
}

double RatFuncN::eval_double(double n0) const {
  auto horner = [n0](const IntPolyN& p) {
    double acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * n0 + it->get_d();
    return acc;
  };
  return horner(num_) / horner(den_);
}

RatFuncN RatFuncN::operator-() const {
  RatFuncN r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncN& RatFuncN::operator+=(const RatFuncN& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    BigInt a = den_.coeff(0), b = o.den_.coeff(0);
    num_ *= b;
    IntPolyN t = o.num_;
    t *= a;
    num_ += t;
    den_ *= b;
    normalize();
    return *this;
  }
  IntPolyN g = primitive_gcd(den_, o.den_);
  IntPolyN a_cof = g.degree() > 0 ? exact_quotient(den_, g) : den_;
  IntPolyN b_cof = g.degree() > 0 ? exact_quotient(o.den_, g) : o.den_;
  num_ = num_ * b_cof + o.num_ * a_cof;
  den_ = den_ * b_cof;
  normalize();
  return *this;
}

RatFuncN& RatFuncN::operator-=(const RatFuncN& o) { return *this += -o; }

RatFuncN& RatFuncN::operator*=(const RatFuncN& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFuncN();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFuncN& RatFuncN::operator/=(const RatFuncN& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero function");
  RatFuncN inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_.lead() < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

// ---------------------------------------------------------------- factorials

namespace {

IntPolyN shifted_product(const IntPolyN& x, int k, long step) {
  IntPolyN p(1);
  for (int i = 0; i < k; ++i) p *= x + IntPolyN(step * i);
  return p;
}

RatFuncN signed_product(const IntPolyN& x, int k, long step) {
  if (k >= 0) return RatFuncN(shifted_product(x, k, step));
  return RatFuncN(IntPolyN(1), shifted_product(x, -k, step));
}

}  // namespace

RatFuncN fall2(const IntPolyN& x, int k) { return signed_product(x, k, -2); }
RatFuncN rise2(const IntPolyN& x, int k) { return signed_product(x, k, 2); }
RatFuncN fall1(const IntPolyN& x, int k) { return signed_product(x, k, -1); }
RatFuncN rise1(const IntPolyN& x, int k) { return signed_product(x, k, 1); }

BigInt factorial(long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(std::max(0L, k)));
  return r;
}

BigInt double_factorial(long k) {
  if (k <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- rendering

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string expanded(const IntPolyN& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt a = neg ? BigInt(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? "-" : "+");
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "n";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

struct Factored {
  BigInt unit;                      // signed content
  int n_power = 0;                  // power of n
  std::map<long, int> shifts;       // (n+c)^e, c != 0
  IntPolyN rest;                    // primitive leftover (constant 1 if none)
};

Factored factor(const IntPolyN& p0) {
  Factored f;
  IntPolyN p = p0;
  f.unit = p.content();
  if (p.lead() < 0) f.unit = -f.unit;
  p.divide_exact(f.unit);
  while (p.degree() > 0 && p.coeff(0) == 0) {
    p = exact_quotient(p, IntPolyN::n_power(1));
    ++f.n_power;
  }
  for (long c = 1; c <= 64 && p.degree() > 0; ++c) {
    for (long sgn : {-1L, 1L}) {
      long s = sgn * c;
      IntPolyN lin = IntPolyN::affine(1, s);
      while (p.degree() > 0 && p.eval(Rational(-s)) == 0) {
        p = exact_quotient(p, lin);
        ++f.shifts[s];
      }
    }
  }
  f.rest = p;
  return f;
}

int factor_count(const Factored& f) {
  int k = (f.n_power > 0) + static_cast<int>(f.shifts.size()) + (f.rest.degree() > 0);
  return k;
}

std::string factors_text(const Factored& f, bool latex) {
  std::ostringstream os;
  auto power = [&](int e) {
    if (e > 1) {
      if (latex) os << "^{" << e << "}";
      else os << "^" << e;
    }
  };
  if (f.n_power > 0) {
    os << "n";
    power(f.n_power);
  }
  // (n-1)(n-2)... then (n+1)(n+2)...
  std::vector<std::pair<long, int>> neg, pos;
  for (auto [s, e] : f.shifts) (s < 0 ? neg : pos).push_back({s, e});
  std::sort(neg.begin(), neg.end(), [](auto a, auto b) { return a.first > b.first; });
  for (auto& v : {neg, pos}) {
    for (auto [s, e] : v) {
      os << "(n" << (s < 0 ? "-" : "+") << std::labs(s) << ")";
      power(e);
    }
  }
  if (f.rest.degree() > 0) os << "(" << expanded(f.rest) << ")";
  return os.str();
}

std::string render(const RatFuncN& r, bool latex) {
  if (r.is_zero()) return "0";
  Factored nf = factor(r.num());
  Factored df = factor(r.den());
  // the denominator content is positive; fold it into the display
  bool neg = nf.unit < 0;
  BigInt nu = neg ? BigInt(-nf.unit) : nf.unit;
  std::string ntext = factors_text(nf, latex);
  std::string dtext = factors_text(df, latex);
  std::string numer;
  if (ntext.empty()) numer = nu.get_str();
  else if (nu == 1) numer = ntext;
  else numer = nu.get_str() + ntext;
  bool has_den = !r.den().is_one();
  std::string denom;
  if (has_den) {
    if (dtext.empty()) denom = df.unit.get_str();
    else if (df.unit == 1) denom = dtext;
    else denom = df.unit.get_str() + dtext;
  }
  std::string out = neg ? "-" : "";
  if (latex && has_den) return out + "\\frac{" + numer + "}{" + denom + "}";
  out += numer;
  if (has_den) {
    bool wrap = factor_count(df) + (df.unit != 1 ? 1 : 0) > 1;
    out += "/" + (wrap ? "(" + denom + ")" : denom);
  }
  return out;
}

}  // namespace

std::string to_text(const IntPolyN& p) { return to_text(RatFuncN(p)); }
std::string to_text(const RatFuncN& f) { return render(f, false); }
std::string to_latex(const RatFuncN& f) { return render(f, true); }

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFuncN parse() {
    RatFuncN r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cannot parse '" + s_ + "' at position " + std::to_string(i_) +
                                ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == '(';
  }
  RatFuncN expr() {
    RatFuncN r = term();
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
  RatFuncN term() {
    RatFuncN r = unary();
    while (true) {
      if (peek('*')) {
        ++i_;
        r *= unary();
      } else if (peek('/')) {
        ++i_;
        RatFuncN d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (starts_factor()) {
        r *= power();
      } else {
        return r;
      }
    }
  }
  RatFuncN unary() {
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }
  RatFuncN power() {
    RatFuncN base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected exponent");
      int e = std::stoi(s_.substr(st, i_ - st));
      RatFuncN r(1);
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }
  RatFuncN atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFuncN r = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return r;
    }
    if (c == 'n') {
      ++i_;
      return RatFuncN::n();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RatFuncN(BigInt(s_.substr(st, i_ - st)));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

RatFuncN parse_ratfunc(const std::string& s) { return Parser(s).parse(); }

}  // namespace orthograph
