#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solvspec/error.hpp"

namespace solvspec {

// Gaussian rational re + im*i.
struct Gauss {
  mpq_class re, im;

  Gauss() = default;
  Gauss(long v) : re(v), im(0) {}
  Gauss(const mpq_class& r) : re(r), im(0) { re.canonicalize(); }
  Gauss(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
    re.canonicalize();
    im.canonicalize();
  }

  // Parts already canonical, as produced by mpq arithmetic.
  struct Canonical {};
  Gauss(mpq_class r, mpq_class i, Canonical) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  Gauss conj() const { return Gauss(re, -im); }
  mpq_class norm() const { return re * re + im * im; }
  Gauss inv() const;

  friend Gauss operator+(const Gauss& a, const Gauss& b) { return Gauss(a.re + b.re, a.im + b.im, Canonical{}); }
  friend Gauss operator-(const Gauss& a, const Gauss& b) { return Gauss(a.re - b.re, a.im - b.im, Canonical{}); }
  friend Gauss operator-(const Gauss& a) { return Gauss(-a.re, -a.im, Canonical{}); }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return Gauss(a.re * b.re, mpq_class(0), Canonical{});
    return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, Canonical{});
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inv(); }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

// Order by real part, then imaginary part.
int compare(const Gauss& a, const Gauss& b);
std::string to_string(const Gauss& g);

// Monomial in parameter symbols: (name, exponent) sorted by name, exponents > 0.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

unsigned total_degree(const Monomial& m);
// Graded lex; earlier names are the larger variables.
int compare_monomial(const Monomial& a, const Monomial& b);
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomial(a, b) < 0; }
};
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_div(const Monomial& m, const Monomial& d);

// Polynomial in parameter symbols over Q(i).
class ParamPoly {
 public:
  using Terms = std::map<Monomial, Gauss, MonomialLess>;

  ParamPoly() = default;
  ParamPoly(const Gauss& c);
  static ParamPoly symbol(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Gauss constant_term() const;
  // Leading term under graded lex.
  const Monomial& lead_monomial() const { return terms_.rbegin()->first; }
  const Gauss& lead_coeff() const { return terms_.rbegin()->second; }
  std::set<std::string> symbols() const;
  unsigned degree_in(const std::string& var) const;
  unsigned total_degree() const;

  void add_term(const Monomial& m, const Gauss& c);

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly scaled(const Gauss& c) const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  // Throws InexactDivision when d does not divide *this.
  ParamPoly exact_div(const ParamPoly& d) const;
  // Scaled so that the leading coefficient is 1.
  ParamPoly monic() const;

  // Coefficients with respect to one symbol.
  std::map<unsigned, ParamPoly> coefficients_in(const std::string& var) const;
  static ParamPoly from_coefficients(const std::string& var, const std::map<unsigned, ParamPoly>& coeffs);

  std::string str() const;

 private:
  Terms terms_;
};

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

class Scalar;
using Assignment = std::map<std::string, Scalar>;

// Element of Q ⊂ Q(i) ⊂ Q(i)(symbols), always held in canonical form.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_(v) {}
  Scalar(const mpq_class& q) : c_(q) {}
  Scalar(const Gauss& g) : c_(g) {}
  Scalar(const ParamPoly& num, const ParamPoly& den);
  static Scalar symbol(const std::string& name);
  static Scalar imag_unit() { return Scalar(Gauss(0, 1)); }
  static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }

  bool is_constant() const { return !f_; }
  bool is_zero() const { return !f_ && c_.is_zero(); }
  bool is_one() const { return !f_ && c_.is_one(); }
  bool is_rational() const { return !f_ && c_.is_real(); }
  // Only valid when is_constant().
  const Gauss& constant() const;
  ParamPoly numerator() const;
  ParamPoly denominator() const;
  std::set<std::string> symbols() const;
  // Max degree of `var` over numerator and denominator.
  unsigned degree_in(const std::string& var) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(long e) const;
  Scalar inv() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Frac {
    ParamPoly num, den;
  };
  static Scalar make(ParamPoly num, ParamPoly den);

  Gauss c_;
  std::shared_ptr<const Frac> f_;
};

// Total order: constants before parametric values; constants by (re, im).
int compare(const Scalar& a, const Scalar& b);
struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return compare(a, b) < 0; }
};

Scalar bind_params(const Scalar& s, const Assignment& assignment);
// Substitutes only the listed symbols; others stay symbolic.
Scalar substitute(const Scalar& s, const Assignment& assignment);
Scalar evaluate(const ParamPoly& p, const Assignment& assignment, bool strict);

Scalar parse_scalar(const std::string& text);
inline std::string to_string(const Scalar& s) { return s.str(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace solvspec
