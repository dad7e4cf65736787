#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "solvspec/matrix.hpp"
#include "solvspec/scalar.hpp"

namespace solvspec {

// Up to kMaxVars variables, exponents below 64.
constexpr size_t kMaxVars = 10;

struct ExpKey {
  unsigned degree = 0;
  uint64_t packed = 0;
};
struct ExpKeyGreater {
  bool operator()(const ExpKey& a, const ExpKey& b) const {
    return a.degree != b.degree ? a.degree > b.degree : a.packed > b.packed;
  }
};

// Polynomial in z0..z(nvars-1) over Scalar.
class MultiPoly {
 public:
  using Terms = std::map<ExpKey, Scalar, ExpKeyGreater>;

  MultiPoly() = default;
  explicit MultiPoly(size_t nvars);
  static MultiPoly constant(size_t nvars, const Scalar& c);
  static MultiPoly variable(size_t nvars, size_t index);

  size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree; }
  unsigned degree_in(size_t var) const;
  unsigned exponent(const ExpKey& k, size_t var) const;
  std::vector<unsigned> exponents(const ExpKey& k) const;
  ExpKey make_key(const std::vector<unsigned>& exps) const;
  Scalar coefficient(const std::vector<unsigned>& exps) const;
  std::set<std::string> symbols() const;

  void add_term(const ExpKey& k, const Scalar& c);
  void add_term(const std::vector<unsigned>& exps, const Scalar& c) { add_term(make_key(exps), c); }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Scalar& s) const;
  MultiPoly pow(unsigned e) const;
  // Throws InexactDivision on a nonzero remainder.
  MultiPoly exact_div(const MultiPoly& q) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Scalar evaluate(const std::vector<Scalar>& point) const;
  MultiPoly bind(const Assignment& a) const;
  MultiPoly map_coefficients(Scalar (*fn)(const Scalar&, const Assignment&), const Assignment& a) const;
  MultiPoly derivative(size_t var) const;

 private:
  size_t nvars_ = 0;
  Terms terms_;
};

std::string canonical_string(const MultiPoly& p);
std::string to_json(const MultiPoly& p);

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

// Univariate helpers over the Scalar field, variable 0.
MultiPoly univariate(const std::vector<Scalar>& coeffs_low_to_high);
std::vector<Scalar> univariate_coefficients(const MultiPoly& p);
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);
unsigned squarefree_degree(const MultiPoly& p);
// det(lambda I - m) as a polynomial in variable 0.
MultiPoly characteristic_polynomial(const Matrix& m);

// Roots in Q(i) with multiplicity, sorted.
std::vector<Scalar> gaussian_roots(const MultiPoly& p, bool require_split);

class LinearForm {
 public:
  LinearForm() = default;
  // Rescaled so the first nonzero coefficient is 1.
  explicit LinearForm(std::vector<Scalar> coeffs);

  size_t nvars() const { return c_.size(); }
  const Scalar& operator[](size_t i) const { return c_[i]; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_[0].is_one(); }
  MultiPoly to_poly() const;
  LinearForm bind(const Assignment& a) const;
  std::string str() const;
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }

 private:
  std::vector<Scalar> c_;
};

int compare(const LinearForm& a, const LinearForm& b);

class FactoredSpectrum {
 public:
  using Entry = std::pair<LinearForm, unsigned>;

  FactoredSpectrum() = default;
  explicit FactoredSpectrum(size_t nvars) : nvars_(nvars) {}
  // Equal forms are merged; result is sorted canonically.
  FactoredSpectrum(size_t nvars, const std::vector<Entry>& entries);

  size_t nvars() const { return nvars_; }
  const std::vector<Entry>& entries() const { return entries_; }
  size_t k() const { return entries_.size(); }
  unsigned degree() const;
  unsigned multiplicity(const LinearForm& f) const;
  std::vector<unsigned> multiplicity_signature() const;
  FactoredSpectrum bind(const Assignment& a) const;
  friend bool operator==(const FactoredSpectrum& a, const FactoredSpectrum& b) {
    return a.nvars_ == b.nvars_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const FactoredSpectrum& a, const FactoredSpectrum& b) { return !(a == b); }

 private:
  size_t nvars_ = 0;
  std::vector<Entry> entries_;
};

MultiPoly expand_spectrum(const FactoredSpectrum& fs);
std::string canonical_string(const FactoredSpectrum& fs);
std::string to_json(const FactoredSpectrum& fs);
// Parses products like `z0^2*(z0 + z4)^2`.
FactoredSpectrum parse_spectrum(const std::string& text, size_t nvars);

struct InterpolationSample {
  Assignment point;
  Scalar value;
};

// Unique rational function with per-parameter numerator/denominator degree bounds.
Scalar interpolate_rational(const std::vector<InterpolationSample>& samples, unsigned num_degree,
                            unsigned den_degree);

}  // namespace solvspec
