#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace orthograph {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense polynomial in n with integer coefficients; c[i] multiplies n^i.
class IntPolyN {
 public:
  IntPolyN() = default;
  IntPolyN(long v);
  IntPolyN(const BigInt& v);
  explicit IntPolyN(std::vector<BigInt> coeffs);

  static IntPolyN n_power(int k);
  static IntPolyN affine(long a, long b);  // a*n + b

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const;
  const BigInt& lead() const { return c_.back(); }

  BigInt content() const;  // nonnegative gcd of coefficients
  IntPolyN primitive_part() const;
  Rational eval(const Rational& x) const;

  IntPolyN operator-() const;
  IntPolyN& operator+=(const IntPolyN& o);
  IntPolyN& operator-=(const IntPolyN& o);
  IntPolyN& operator*=(const IntPolyN& o);
  IntPolyN& operator*=(const BigInt& k);
  IntPolyN& divide_exact(const BigInt& k);

  friend IntPolyN operator+(IntPolyN a, const IntPolyN& b) { return a += b; }
  friend IntPolyN operator-(IntPolyN a, const IntPolyN& b) { return a -= b; }
  friend IntPolyN operator*(const IntPolyN& a, const IntPolyN& b);
  friend bool operator==(const IntPolyN& a, const IntPolyN& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolyN& a, const IntPolyN& b) { return !(a == b); }

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPolyN pseudo_remainder(const IntPolyN& a, const IntPolyN& b);
// gcd of primitive parts, leading coefficient positive.
IntPolyN primitive_gcd(const IntPolyN& a, const IntPolyN& b);
// a / b when b divides a in Z[n]; throws otherwise.
IntPolyN exact_quotient(const IntPolyN& a, const IntPolyN& b);

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RatFuncN {
 public:
  RatFuncN() : den_(1) {}
  RatFuncN(long v) : num_(v), den_(1) {}
  RatFuncN(const BigInt& v) : num_(v), den_(1) {}
  RatFuncN(const Rational& v);
  RatFuncN(IntPolyN num) : num_(std::move(num)), den_(1) { normalize(); }
  RatFuncN(IntPolyN num, IntPolyN den);

  static RatFuncN n() { return RatFuncN(IntPolyN::n_power(1)); }

  const IntPolyN& num() const { return num_; }
  const IntPolyN& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  // deg(num) - deg(den); meaningless for zero.
  int order() const { return num_.degree() - den_.degree(); }
  // sign of the function for all sufficiently large n.
  int sign_at_infinity() const;

  Rational eval(const Rational& n0) const;
  double eval_double(double n0) const;

  RatFuncN operator-() const;
  RatFuncN& operator+=(const RatFuncN& o);
  RatFuncN& operator-=(const RatFuncN& o);
  RatFuncN& operator*=(const RatFuncN& o);
  RatFuncN& operator/=(const RatFuncN& o);
  friend RatFuncN operator+(RatFuncN a, const RatFuncN& b) { return a += b; }
  friend RatFuncN operator-(RatFuncN a, const RatFuncN& b) { return a -= b; }
  friend RatFuncN operator*(RatFuncN a, const RatFuncN& b) { return a *= b; }
  friend RatFuncN operator/(RatFuncN a, const RatFuncN& b) { return a /= b; }
  friend bool operator==(const RatFuncN& a, const RatFuncN& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncN& a, const RatFuncN& b) { return !(a == b); }

 private:
  void normalize();
  IntPolyN num_;
  IntPolyN den_;
};

inline Rational eval_at(const RatFuncN& f, const Rational& n0) { return f.eval(n0); }

// x(x-2)...(x-2k+2) for k >= 0, reciprocal of fall2(x, -k) for k < 0.
RatFuncN fall2(const IntPolyN& x, int k);
RatFuncN rise2(const IntPolyN& x, int k);
RatFuncN fall1(const IntPolyN& x, int k);
RatFuncN rise1(const IntPolyN& x, int k);

// Integer factorial helpers.
BigInt factorial(long k);
BigInt double_factorial(long k);  // k!! with (-1)!! = 0!! = 1

// Text rendering, factored over {n, n+c} when it divides cleanly.
std::string to_text(const IntPolyN& p);
std::string to_text(const RatFuncN& f);
std::string to_latex(const RatFuncN& f);
std::string to_string(const Rational& q);

// Parses the text form produced by to_text for polynomials and simple quotients:
// products of integers, n, n^k, (affine or expanded poly), joined by '/'.
RatFuncN parse_ratfunc(const std::string& s);

}  // namespace orthograph
