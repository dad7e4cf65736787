#include "solvspec/liealg.hpp"

#include <algorithm>

namespace solvspec {

LieAlgebra::LieAlgebra(std::vector<std::string> basis, std::vector<std::string> params)
    : basis_(std::move(basis)), params_(std::move(params)), c_(basis_.size() * basis_.size() * basis_.size()) {}

size_t LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) throw Error(ErrorKind::SchemaError, "unknown basis label " + label);
  return static_cast<size_t>(it - basis_.begin());
}

void LieAlgebra::set_bracket(size_t i, size_t j, const Vec& out) {
  size_t n = dim();
  for (size_t k = 0; k < n; ++k) {
    c_[(i * n + j) * n + k] = out[k];
    c_[(j * n + i) * n + k] = -out[k];
  }
}

Vec LieAlgebra::bracket_basis(size_t i, size_t j) const {
  size_t n = dim();
  return Vec(c_.begin() + (i * n + j) * n, c_.begin() + (i * n + j + 1) * n);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  size_t n = dim();
  Vec r(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar w = x[i] * y[j];
      for (size_t k = 0; k < n; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) r[k] += w * c;
      }
    }
  }
  return r;
}

LieAlgebra LieAlgebra::bind(const Assignment& a) const {
  LieAlgebra r = *this;
  for (auto& s : r.c_) s = bind_params(s, a);
  std::vector<std::string> rest;
  for (auto& p : params_)
    if (!a.count(p)) rest.push_back(p);
  r.params_ = rest;
  return r;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& t) const {
  auto tinv = inverse(t);
  if (!tinv) throw Error(ErrorKind::SingularB, "basis change is singular");
  size_t n = dim();
  LieAlgebra r(basis_, params_);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) r.set_bracket(a, b, *tinv * bracket(t.column(a), t.column(b)));
  r.provenance_ = provenance_;
  return r;
}

ValidationReport validate_lie(const LieAlgebra& l) {
  ValidationReport rep;
  size_t n = l.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vec s1 = l.bracket(l.bracket_basis(i, j), ek);
        Vec s2 = l.bracket(l.bracket_basis(j, k), ei);
        Vec s3 = l.bracket(l.bracket_basis(k, i), ej);
        bool zero = true;
        for (size_t m = 0; m < n; ++m)
          if (!(s1[m] + s2[m] + s3[m]).is_zero()) zero = false;
        if (!zero) {
          rep.ok = false;
          rep.violations.push_back("Jacobi identity fails at (" + l.basis()[i] + ", " + l.basis()[j] + ", " +
                                   l.basis()[k] + ")");
        }
      }
  return rep;
}

Vec unit_vector(size_t n, size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

Matrix ad(const LieAlgebra& l, const Vec& x) {
  size_t n = l.dim();
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    Vec col = l.bracket(x, unit_vector(n, j));
    for (size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix ad_basis(const LieAlgebra& l, size_t i) {
  size_t n = l.dim();
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) m(k, j) = l.constant(i, j, k);
  return m;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Echelon e = rref(Matrix::from_rows(vectors));
  for (size_t r = 0; r < e.pivots.size(); ++r) s.rows_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::of_basis_indices(size_t ambient, const std::vector<size_t>& idx) {
  std::vector<Vec> v;
  for (size_t i : idx) v.push_back(unit_vector(ambient, i));
  return span(ambient, v);
}

bool Subspace::contains(const Vec& v) const {
  std::vector<Vec> rows = rows_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows)) == rows_.size();
}

bool Subspace::contains(const Subspace& s) const {
  std::vector<Vec> rows = rows_;
  for (auto& r : s.rows_) rows.push_back(r);
  return rows.empty() || rank(Matrix::from_rows(rows)) == rows_.size();
}

namespace {

Subspace bracket_span(const LieAlgebra& l, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> out;
  for (auto& x : a)
    for (auto& y : b) {
      Vec v = l.bracket(x, y);
      if (std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); })) out.push_back(v);
    }
  return Subspace::span(l.dim(), out);
}

std::vector<Subspace> chain(const LieAlgebra& l, const Subspace& start, SeriesKind kind) {
  std::vector<Subspace> out{start};
  for (;;) {
    const Subspace& cur = out.back();
    if (cur.dim() == 0) break;
    Subspace next = kind == SeriesKind::Derived ? bracket_span(l, cur.basis(), cur.basis())
                                                : bracket_span(l, start.basis(), cur.basis());
    if (next.dim() == cur.dim()) break;
    out.push_back(next);
  }
  return out;
}

}  // namespace

std::vector<Subspace> series(const LieAlgebra& l, SeriesKind kind) {
  std::vector<size_t> all(l.dim());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return chain(l, Subspace::of_basis_indices(l.dim(), all), kind);
}

AlgebraClass classify(const LieAlgebra& l) {
  if (series(l, SeriesKind::LowerCentral).back().dim() == 0) return AlgebraClass::Nilpotent;
  if (series(l, SeriesKind::Derived).back().dim() == 0) return AlgebraClass::SolvableNotNilpotent;
  return AlgebraClass::NotSolvable;
}

const char* class_name(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::Nilpotent: return "nilpotent";
    case AlgebraClass::SolvableNotNilpotent: return "solvable-not-nilpotent";
    case AlgebraClass::NotSolvable: return "not-solvable";
  }
  return "";
}

IdealReport check_nilpotent_ideal(const LieAlgebra& l, const Subspace& s) {
  if (!s.contains(bracket_span(l, s.basis(), s.basis())))
    throw Error(ErrorKind::NotASubalgebra, "[S, S] is not contained in S");
  IdealReport rep;
  std::vector<Vec> all;
  for (size_t i = 0; i < l.dim(); ++i) all.push_back(unit_vector(l.dim(), i));
  rep.is_ideal = s.contains(bracket_span(l, all, s.basis()));
  rep.is_nilpotent = chain(l, s, SeriesKind::LowerCentral).back().dim() == 0;
  return rep;
}

}  // namespace solvspec
