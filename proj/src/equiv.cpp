#include "solvspec/equiv.hpp"

#include <algorithm>
#include <functional>

#include "solvspec/spectra.hpp"

namespace solvspec {

namespace {

SpecData scaled(const SpecData& s, const Scalar& alpha) {
  SpecData out;
  for (auto& [v, mult] : s) out.emplace_back(v * alpha, mult);
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return compare(x.first, y.first) < 0; });
  return out;
}

Vec tail(const LinearForm& f) { return Vec(f.coeffs().begin() + 1, f.coeffs().end()); }

void require_monic(const FactoredSpectrum& fs) {
  for (auto& [form, mult] : fs.entries())
    if (!form.is_monic()) throw Error(ErrorKind::ShapeMismatch, "factor " + form.str() + " is not monic in z0");
}

}  // namespace

SpecData spec_data(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix is not square");
  SpecData out;
  for (auto& r : gaussian_roots(characteristic_polynomial(m), true)) {
    if (!out.empty() && out.back().first == r)
      ++out.back().second;
    else
      out.emplace_back(r, 1);
  }
  return out;
}

std::optional<Scalar> sem_equivalent(const Matrix& m1, const Matrix& m2) {
  if (m1.rows() != m2.rows()) return std::nullopt;
  SpecData s1 = spec_data(m1), s2 = spec_data(m2);
  auto all_zero = [](const SpecData& s) {
    return std::all_of(s.begin(), s.end(), [](auto& e) { return e.first.is_zero(); });
  };
  if (all_zero(s1) && all_zero(s2)) return Scalar(1);
  std::vector<Scalar> candidates{Scalar(1)};
  for (auto& [l1, m1c] : s1)
    for (auto& [l2, m2c] : s2)
      if (!l1.is_zero() && !l2.is_zero()) candidates.push_back(l1 / l2);
  std::sort(candidates.begin() + 1, candidates.end(), [](auto& x, auto& y) { return compare(x, y) < 0; });
  for (auto& alpha : candidates)
    if (scaled(s2, alpha) == s1) return alpha;
  return std::nullopt;
}

bool pencil_identity_holds(const Matrix& m1, const Matrix& m2, const Scalar& alpha) {
  if (m1.rows() != m2.rows()) return false;
  size_t n = m1.rows();
  MultiPoly z0 = MultiPoly::variable(2, 0), z1 = MultiPoly::variable(2, 1);
  auto pencil_det = [&](const Matrix& m, const Scalar& s) {
    std::vector<std::vector<MultiPoly>> p(n, std::vector<MultiPoly>(n, MultiPoly(2)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) p[i][j] = (i == j ? z0 : MultiPoly(2)) + z1.scaled(m(i, j) * s);
    return determinant(p);
  };
  return pencil_det(m1, Scalar(1)) == pencil_det(m2, alpha);
}

FactoredSpectrum apply_change(const FactoredSpectrum& fs, const Matrix& b) {
  size_t n = fs.nvars() - 1;
  if (b.rows() != n || b.cols() != n) throw Error(ErrorKind::ShapeMismatch, "B must be N x N over z1..zN");
  if (determinant(b).is_zero()) throw Error(ErrorKind::SingularB, "B is singular");
  std::vector<FactoredSpectrum::Entry> out;
  for (auto& [form, mult] : fs.entries()) {
    Vec u = b * tail(form);
    Vec c{form[0]};
    c.insert(c.end(), u.begin(), u.end());
    out.emplace_back(LinearForm(c), mult);
  }
  return FactoredSpectrum(fs.nvars(), out);
}

std::optional<ChangeOfVariables> se_equivalent(const FactoredSpectrum& fs1, const FactoredSpectrum& fs2) {
  if (fs1.nvars() != fs2.nvars()) throw Error(ErrorKind::ShapeMismatch, "spectra live in different variable counts");
  require_monic(fs1);
  require_monic(fs2);
  if (fs1.degree() != fs2.degree() || fs1.k() != fs2.k()) return std::nullopt;
  std::vector<unsigned> sig1 = fs1.multiplicity_signature(), sig2 = fs2.multiplicity_signature();
  if (sig1 != sig2) return std::nullopt;

  size_t n = fs1.nvars() - 1, k = fs1.k();
  std::vector<Vec> u1, u2;
  for (auto& e : fs1.entries()) u1.push_back(tail(e.first));
  for (auto& e : fs2.entries()) u2.push_back(tail(e.first));

  // Linear relations among the chosen columns must coincide on both sides.
  std::vector<size_t> sigma;
  std::vector<bool> used(k, false);
  auto consistent = [&]() {
    size_t c = sigma.size();
    Matrix a(n, c), a2(n, c), stacked(2 * n, c);
    for (size_t j = 0; j < c; ++j)
      for (size_t i = 0; i < n; ++i) {
        a(i, j) = stacked(i, j) = u1[j][i];
        a2(i, j) = stacked(n + i, j) = u2[sigma[j]][i];
      }
    size_t r = rank(a);
    return r == rank(a2) && r == rank(stacked);
  };
  std::function<bool()> search = [&]() -> bool {
    size_t j = sigma.size();
    if (j == k) return true;
    for (size_t t = 0; t < k; ++t) {
      if (used[t] || fs1.entries()[j].second != fs2.entries()[t].second) continue;
      sigma.push_back(t);
      used[t] = true;
      if (consistent() && search()) return true;
      used[t] = false;
      sigma.pop_back();
    }
    return false;
  };
  if (!search()) return std::nullopt;

  auto completed = [&](const std::vector<Vec>& cols) {
    std::vector<Vec> basis;
    auto try_add = [&](const Vec& v) {
      std::vector<Vec> cand = basis;
      cand.push_back(v);
      if (rank(Matrix::from_columns(cand)) == cand.size()) basis = cand;
    };
    for (auto& v : cols) try_add(v);
    for (size_t i = 0; i < n && basis.size() < n; ++i) try_add(unit_vector(n, i));
    return Matrix::from_columns(basis);
  };
  std::vector<Vec> c1(k), c2(k);
  for (size_t j = 0; j < k; ++j) c1[j] = u1[j], c2[j] = u2[sigma[j]];
  Matrix m1(n, k);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) m1(i, j) = c1[j][i];
  std::vector<Vec> p1, p2;
  for (size_t p : rref(m1).pivots) p1.push_back(c1[p]), p2.push_back(c2[p]);
  Matrix basis1 = completed(p1), basis2 = completed(p2);
  ChangeOfVariables cov{basis2 * *inverse(basis1), false};
  if (apply_change(fs1, cov.b) != fs2) throw Error(ErrorKind::VerificationFailed, "constructed B does not map fs1 to fs2");
  cov.verified = true;
  return cov;
}

Matrix extension_derivation(const LieAlgebra& l) {
  if (!l.nilradical() || l.nilradical()->size() + 1 != l.dim())
    throw Error(ErrorKind::InvalidSpec, "expected a declared nilradical of codimension one");
  const auto& nil = *l.nilradical();
  size_t f = 0;
  while (std::find(nil.begin(), nil.end(), f) != nil.end()) ++f;
  Matrix full = ad_basis(l, f), d(nil.size(), nil.size());
  for (size_t r = 0; r < nil.size(); ++r)
    for (size_t c = 0; c < nil.size(); ++c) d(r, c) = full(nil[r], nil[c]);
  return d;
}

NotionsReport compare_notions(const LieAlgebra& l1, const LieAlgebra& l2) {
  if (l1.dim() != l2.dim()) throw Error(ErrorKind::ShapeMismatch, "algebras have different dimensions");
  NotionsReport rep;
  rep.derivation1 = extension_derivation(l1);
  rep.derivation2 = extension_derivation(l2);
  rep.sem = sem_equivalent(rep.derivation1, rep.derivation2);
  rep.se = se_equivalent(factor_spectrum(l1), factor_spectrum(l2));
  return rep;
}

}  // namespace solvspec
