#include "solvspec/spectra.hpp"

#include <algorithm>
#include <functional>

namespace solvspec {

Pencil pencil(const LieAlgebra& l) {
  Pencil p;
  p.dim = l.dim();
  for (size_t i = 0; i < l.dim(); ++i) p.mats.push_back(ad_basis(l, i));
  return p;
}

std::vector<std::vector<MultiPoly>> pencil_matrix(const Pencil& p) {
  size_t n = p.dim, nv = p.mats.size() + 1;
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      MultiPoly e(nv);
      if (r == c) e = MultiPoly::variable(nv, 0);
      for (size_t i = 0; i < p.mats.size(); ++i) {
        const Scalar& a = p.mats[i](r, c);
        if (!a.is_zero()) e = e + MultiPoly::variable(nv, i + 1).scaled(a);
      }
      m[r][c] = e;
    }
  return m;
}

MultiPoly char_poly(const Pencil& p) {
  if (p.dim == 0) return MultiPoly::constant(1, Scalar(1));
  return determinant(pencil_matrix(p));
}

MultiPoly cofactor_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  size_t n = m.size();
  size_t nv = n ? m[0][0].nvars() : 1;
  std::vector<MultiPoly> dp(size_t(1) << n, MultiPoly(nv));
  dp[0] = MultiPoly::constant(nv, Scalar(1));
  for (size_t mask = 1; mask < dp.size(); ++mask) {
    size_t r = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
    MultiPoly acc(nv);
    size_t pos = 0;
    for (size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      if (!m[r][c].is_zero() && !dp[mask ^ (size_t(1) << c)].is_zero()) {
        MultiPoly t = m[r][c] * dp[mask ^ (size_t(1) << c)];
        acc = ((r + pos) % 2 == 0) ? acc + t : acc - t;
      }
      ++pos;
    }
    dp[mask] = acc;
  }
  return dp.back();
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten(const Vec& v, size_t d) {
  Matrix m(d, d);
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) m(r, c) = v[r * d + c];
  return m;
}

std::vector<Matrix> span_basis(const std::vector<Matrix>& ms, size_t d) {
  std::vector<Vec> rows;
  for (auto& m : ms)
    if (!m.is_zero()) rows.push_back(flatten(m));
  std::vector<Matrix> out;
  if (rows.empty()) return out;
  Echelon e = rref(Matrix::from_rows(rows));
  for (size_t r = 0; r < e.pivots.size(); ++r) out.push_back(unflatten(e.reduced.row(r), d));
  return out;
}

size_t first_nonzero(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

// Nonzero subspace (as columns) on which every element of g acts by a scalar.
Matrix joint_eigenspace(const std::vector<Matrix>& g, size_t d) {
  if (g.empty()) return Matrix::identity(d);
  std::vector<Matrix> comms;
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = a + 1; b < g.size(); ++b) comms.push_back(commutator(g[a], g[b]));
  std::vector<Matrix> derived = span_basis(comms, d);
  if (derived.size() == g.size()) throw Error(ErrorKind::NotSolvable, "operator algebra equals its derived algebra");

  std::vector<Vec> rows;
  for (auto& m : derived) rows.push_back(flatten(m));
  size_t base_rank = rows.size();
  std::vector<size_t> complement;
  for (size_t j = 0; j < g.size(); ++j) {
    rows.push_back(flatten(g[j]));
    if (rank(Matrix::from_rows(rows)) > base_rank + complement.size()) complement.push_back(j);
    else rows.pop_back();
  }
  const Matrix& x = g[complement[0]];
  std::vector<Matrix> ideal_gens = derived;
  for (size_t t = 1; t < complement.size(); ++t) ideal_gens.push_back(g[complement[t]]);
  std::vector<Matrix> ideal = span_basis(ideal_gens, d);

  Matrix w0 = joint_eigenspace(ideal, d);
  Vec v = w0.column(0);
  size_t k = first_nonzero(v);
  std::vector<Vec> constraint_rows;
  for (auto& a : ideal) {
    Scalar lambda = (a * v)[k] / v[k];
    Matrix shifted = a - Matrix::identity(d).scaled(lambda);
    for (size_t r = 0; r < d; ++r) constraint_rows.push_back(shifted.row(r));
  }
  std::vector<Vec> weight_space;
  if (constraint_rows.empty()) {
    for (size_t i = 0; i < d; ++i) weight_space.push_back(unit_vector(d, i));
  } else {
    weight_space = nullspace(Matrix::from_rows(constraint_rows));
  }
  Matrix wb = Matrix::from_columns(weight_space);
  size_t w = weight_space.size();
  Matrix restricted(w, w);
  for (size_t c = 0; c < w; ++c) {
    auto col = solve(wb, x * weight_space[c]);
    if (!col) throw Error(ErrorKind::VerificationFailed, "weight space is not invariant");
    for (size_t r = 0; r < w; ++r) restricted(r, c) = (*col)[r];
  }
  auto roots = gaussian_roots(characteristic_polynomial(restricted), false);
  if (roots.empty()) throw Error(ErrorKind::DoesNotSplitOverField, "no eigenvalue in Q(i)");
  Matrix shifted = restricted - Matrix::identity(w).scaled(roots[0]);
  std::vector<Vec> cols;
  for (auto& y : nullspace(shifted)) cols.push_back(wb * y);
  return Matrix::from_columns(cols);
}

Matrix conjugate(const Matrix& tinv, const Matrix& a, const Matrix& t) { return tinv * a * t; }

TriangularFlag flag_from_basis(const Pencil& p, const Matrix& t) {
  auto tinv = inverse(t);
  if (!tinv) throw Error(ErrorKind::VerificationFailed, "flag basis is singular");
  size_t n = p.dim;
  TriangularFlag flag;
  flag.basis = t;
  std::vector<std::vector<Scalar>> diag(n, std::vector<Scalar>(n + 1));
  for (size_t j = 0; j < n; ++j) diag[j][0] = Scalar(1);
  for (size_t i = 0; i < p.mats.size(); ++i) {
    Matrix c = conjugate(*tinv, p.mats[i], t);
    if (!c.is_upper_triangular()) throw Error(ErrorKind::VerificationFailed, "conjugated pencil is not triangular");
    for (size_t j = 0; j < n; ++j) diag[j][i + 1] = c(j, j);
  }
  MultiPoly prod = MultiPoly::constant(n + 1, Scalar(1));
  for (auto& d : diag) {
    flag.diagonal.emplace_back(d);
    prod = prod * flag.diagonal.back().to_poly();
  }
  if (prod != char_poly(p)) throw Error(ErrorKind::VerificationFailed, "diagonal forms do not multiply to Q");
  return flag;
}

}  // namespace

Vec common_eigenvector(const std::vector<Matrix>& ops, size_t dim) {
  Matrix w = joint_eigenspace(span_basis(ops, dim), dim);
  std::vector<Vec> rows;
  for (size_t c = 0; c < w.cols(); ++c) rows.push_back(w.column(c));
  return rref(Matrix::from_rows(rows)).reduced.row(0);
}

Matrix triangularizing_basis(const std::vector<Matrix>& ops, size_t dim) {
  if (dim == 0) return Matrix(0, 0);
  Vec v = common_eigenvector(ops, dim);
  size_t p = first_nonzero(v);
  std::vector<Vec> cols{v};
  for (size_t j = 0; j < dim; ++j)
    if (j != p) cols.push_back(unit_vector(dim, j));
  Matrix t = Matrix::from_columns(cols);
  Matrix tinv = *inverse(t);
  std::vector<Matrix> sub;
  for (auto& a : ops) sub.push_back(conjugate(tinv, a, t).block(1, 1, dim - 1, dim - 1));
  Matrix s = triangularizing_basis(sub, dim - 1);
  Matrix r = Matrix::identity(dim);
  for (size_t i = 0; i + 1 < dim; ++i)
    for (size_t j = 0; j + 1 < dim; ++j) r(i + 1, j + 1) = s(i, j);
  return t * r;
}

TriangularFlag triangularize(const LieAlgebra& l) {
  if (classify(l) == AlgebraClass::NotSolvable) throw Error(ErrorKind::NotSolvable, "algebra is not solvable");
  Pencil p = pencil(l);
  return flag_from_basis(p, triangularizing_basis(p.mats, p.dim));
}

TriangularFlag triangularize_adapted(const LieAlgebra& l) {
  if (!l.nilradical()) return triangularize(l);
  if (classify(l) == AlgebraClass::NotSolvable) throw Error(ErrorKind::NotSolvable, "algebra is not solvable");
  const auto& nil = *l.nilradical();
  size_t n = l.dim(), nn = nil.size();
  if (!check_nilpotent_ideal(l, Subspace::of_basis_indices(n, nil)).ok())
    throw Error(ErrorKind::InvalidSpec, "declared nilradical is not a nilpotent ideal");
  std::vector<size_t> order = nil;
  for (size_t i = 0; i < n; ++i)
    if (std::find(nil.begin(), nil.end(), i) == nil.end()) order.push_back(i);
  std::vector<Vec> cols;
  for (size_t i : order) cols.push_back(unit_vector(n, i));
  Matrix t0 = Matrix::from_columns(cols), t0inv = t0.transpose();
  Pencil p = pencil(l);
  std::vector<Matrix> top, bottom;
  for (auto& a : p.mats) {
    Matrix c = conjugate(t0inv, a, t0);
    top.push_back(c.block(0, 0, nn, nn));
    bottom.push_back(c.block(nn, nn, n - nn, n - nn));
  }
  Matrix t1 = triangularizing_basis(top, nn), t2 = triangularizing_basis(bottom, n - nn);
  Matrix r(n, n);
  for (size_t i = 0; i < nn; ++i)
    for (size_t j = 0; j < nn; ++j) r(i, j) = t1(i, j);
  for (size_t i = 0; i < n - nn; ++i)
    for (size_t j = 0; j < n - nn; ++j) r(nn + i, nn + j) = t2(i, j);
  return flag_from_basis(p, t0 * r);
}

namespace {

FactoredSpectrum spectrum_from_forms(size_t nvars, const std::vector<LinearForm>& forms) {
  std::vector<FactoredSpectrum::Entry> entries;
  for (auto& f : forms) entries.emplace_back(f, 1);
  return FactoredSpectrum(nvars, entries);
}

}  // namespace

FactoredSpectrum factor_spectrum(const LieAlgebra& l) {
  TriangularFlag flag = triangularize(l);
  FactoredSpectrum fs = spectrum_from_forms(l.dim() + 1, flag.diagonal);
  if (expand_spectrum(fs) != char_poly(pencil(l)))
    throw Error(ErrorKind::VerificationFailed, "factored spectrum does not expand to Q");
  return fs;
}

size_t k_invariant(const LieAlgebra& l) { return factor_spectrum(l).k(); }

std::vector<LinearForm> WeightTable::delta_forms() const {
  std::vector<LinearForm> out;
  for (auto& w : weights) out.push_back(w.form);
  return out;
}

std::vector<LinearForm> WeightTable::all_forms() const {
  std::vector<LinearForm> out = delta_forms();
  for (auto& q : quotient_forms)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  std::sort(out.begin(), out.end(), [](const LinearForm& a, const LinearForm& b) { return compare(a, b) < 0; });
  return out;
}

bool WeightTable::quotient_in_delta() const {
  auto d = delta_forms();
  return std::all_of(quotient_forms.begin(), quotient_forms.end(),
                     [&](const LinearForm& q) { return std::find(d.begin(), d.end(), q) != d.end(); });
}

WeightTable weight_table(const LieAlgebra& l) {
  if (!l.nilradical()) throw Error(ErrorKind::InvalidSpec, "weight table needs a declared nilradical");
  TriangularFlag flag = triangularize_adapted(l);
  size_t nn = l.nilradical()->size();
  WeightTable wt;
  wt.nvars = l.dim() + 1;
  std::vector<LinearForm> nil_forms(flag.diagonal.begin(), flag.diagonal.begin() + nn);
  FactoredSpectrum nil_fs = spectrum_from_forms(wt.nvars, nil_forms);
  for (auto& [f, m] : nil_fs.entries()) wt.weights.push_back({f, m});
  FactoredSpectrum q_fs =
      spectrum_from_forms(wt.nvars, std::vector<LinearForm>(flag.diagonal.begin() + nn, flag.diagonal.end()));
  for (auto& e : q_fs.entries()) wt.quotient_forms.push_back(e.first);
  return wt;
}

std::string weight_string(const LinearForm& form) {
  MultiPoly p = form.to_poly() - MultiPoly::variable(form.nvars(), 0).scaled(form[0]);
  return canonical_string(p);
}

namespace {

struct GridPoint {
  std::vector<size_t> index;
  Assignment values;
  FactoredSpectrum fs;
};

unsigned derived_degree_bound(const LieAlgebra& l, const std::string& param) {
  unsigned d = 1;
  size_t n = l.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k) d = std::max(d, l.constant(i, j, k).degree_in(param));
  return d;
}

bool in_list(const std::vector<Scalar>& v, const Scalar& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// Forms along a line of points; chains[j][m] = entry index at point m of factor j.
bool track_line(const std::vector<const GridPoint*>& line, const std::vector<Scalar>& coords, unsigned degree,
                const std::vector<size_t>& start, std::vector<std::vector<size_t>>& chains) {
  size_t m_count = line.size();
  chains.assign(start.size(), std::vector<size_t>(m_count));
  std::vector<std::vector<bool>> used(m_count);
  for (size_t m = 0; m < m_count; ++m) used[m].assign(line[m]->fs.k(), false);
  for (size_t j = 0; j < start.size(); ++j) {
    const auto& e0 = line[0]->fs.entries()[start[j]];
    std::vector<std::vector<size_t>> found;
    std::vector<size_t> partial{start[j]};
    std::function<void(size_t)> rec = [&](size_t m) {
      if (m <= degree && m < m_count) {
        const auto& es = line[m]->fs.entries();
        for (size_t t = 0; t < es.size(); ++t) {
          if (es[t].second != e0.second) continue;
          partial.push_back(t);
          rec(m + 1);
          partial.pop_back();
        }
        return;
      }
      std::vector<size_t> full = partial;
      size_t nv = e0.first.nvars();
      for (size_t q = degree + 1; q < m_count; ++q) {
        std::vector<Scalar> pred(nv);
        for (size_t a = 0; a <= degree; ++a) {
          Scalar basis(1);
          for (size_t b = 0; b <= degree; ++b)
            if (b != a) basis *= (coords[q] - coords[b]) / (coords[a] - coords[b]);
          const LinearForm& f = line[a]->fs.entries()[full[a]].first;
          for (size_t v = 0; v < nv; ++v) pred[v] += basis * f[v];
        }
        const auto& es = line[q]->fs.entries();
        size_t hit = es.size();
        for (size_t t = 0; t < es.size(); ++t)
          if (es[t].second == e0.second && es[t].first.coeffs() == pred) hit = t;
        if (hit == es.size()) return;
        full.push_back(hit);
      }
      found.push_back(full);
    };
    rec(1);
    if (found.size() != 1) return false;
    for (size_t m = 0; m < m_count; ++m) {
      if (used[m][found[0][m]]) return false;
      used[m][found[0][m]] = true;
    }
    chains[j] = found[0];
  }
  return true;
}

std::optional<FactoredSpectrum> try_grid(const LieAlgebra& l, const std::vector<std::string>& params,
                                         const std::vector<unsigned>& degrees, const SamplePlan& plan,
                                         bool refined) {
  size_t np = params.size();
  std::vector<std::vector<Scalar>> axis(np);
  for (size_t t = 0; t < np; ++t) {
    Scalar offset = refined ? Scalar(mpq_class(static_cast<long>(t + 1), 7)) : Scalar(0);
    auto it = plan.skip.find(params[t]);
    for (long v = 2; axis[t].size() < degrees[t] + 3; ++v) {
      Scalar s = Scalar(v) + offset;
      if (it != plan.skip.end() && in_list(it->second, s)) continue;
      axis[t].push_back(s);
    }
  }
  std::vector<GridPoint> pts;
  std::vector<size_t> idx(np, 0);
  for (;;) {
    GridPoint gp;
    gp.index = idx;
    for (size_t t = 0; t < np; ++t) gp.values[params[t]] = axis[t][idx[t]];
    try {
      gp.fs = factor_spectrum(l.bind(gp.values));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleAtAssignment) return std::nullopt;
      throw;
    }
    pts.push_back(std::move(gp));
    size_t t = 0;
    while (t < np && ++idx[t] == axis[t].size()) idx[t++] = 0;
    if (t == np) break;
  }
  for (auto& p : pts)
    if (p.fs.multiplicity_signature() != pts[0].fs.multiplicity_signature() || p.fs.k() != pts[0].fs.k())
      return std::nullopt;

  auto point_at = [&](const std::vector<size_t>& ix) -> const GridPoint& {
    size_t flat = 0;
    for (size_t t = np; t-- > 0;) flat = flat * axis[t].size() + ix[t];
    return pts[flat];
  };

  size_t k = pts[0].fs.k();
  // assignment[flat point][factor] = entry index
  std::vector<std::vector<size_t>> assign(pts.size(), std::vector<size_t>(k, SIZE_MAX));
  auto flat_of = [&](const std::vector<size_t>& ix) {
    size_t flat = 0;
    for (size_t t = np; t-- > 0;) flat = flat * axis[t].size() + ix[t];
    return flat;
  };
  for (size_t j = 0; j < k; ++j) assign[0][j] = j;
  for (size_t t = 0; t < np; ++t) {
    for (size_t f = 0; f < pts.size(); ++f) {
      const auto& ix = pts[f].index;
      bool base = ix[t] == 0;
      for (size_t u = t + 1; u < np; ++u) base = base && ix[u] == 0;
      if (!base) continue;
      std::vector<const GridPoint*> line;
      std::vector<size_t> flats;
      for (size_t m = 0; m < axis[t].size(); ++m) {
        auto jx = ix;
        jx[t] = m;
        line.push_back(&point_at(jx));
        flats.push_back(flat_of(jx));
      }
      std::vector<std::vector<size_t>> chains;
      if (!track_line(line, axis[t], degrees[t], assign[f], chains)) return std::nullopt;
      for (size_t j = 0; j < k; ++j)
        for (size_t m = 0; m < line.size(); ++m) assign[flats[m]][j] = chains[j][m];
    }
  }

  size_t nv = l.dim() + 1;
  unsigned dmax = *std::max_element(degrees.begin(), degrees.end());
  std::vector<FactoredSpectrum::Entry> entries;
  for (size_t j = 0; j < k; ++j) {
    std::vector<Scalar> coeffs(nv);
    for (size_t v = 0; v < nv; ++v) {
      std::vector<InterpolationSample> samples;
      for (size_t f = 0; f < pts.size(); ++f)
        samples.push_back({pts[f].values, pts[f].fs.entries()[assign[f][j]].first[v]});
      coeffs[v] = interpolate_rational(samples, dmax, 0);
    }
    entries.emplace_back(LinearForm(coeffs), pts[0].fs.entries()[j].second);
  }
  return FactoredSpectrum(nv, entries);
}

}  // namespace

FactoredSpectrum symbolic_spectrum(const LieAlgebra& l, const SamplePlan& plan) {
  std::set<std::string> used;
  size_t n = l.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (auto& s : l.constant(i, j, k).symbols()) used.insert(s);
  if (used.empty()) return factor_spectrum(l);
  std::vector<std::string> params(used.begin(), used.end());
  std::vector<unsigned> degrees;
  for (auto& p : params) degrees.push_back(plan.degree_bound ? plan.degree_bound : derived_degree_bound(l, p));

  auto candidate = try_grid(l, params, degrees, plan, false);
  if (!candidate) candidate = try_grid(l, params, degrees, plan, true);
  if (!candidate) throw Error(ErrorKind::InconsistentPattern, "factor pattern differs across the sample grid");
  if (expand_spectrum(*candidate) != char_poly(pencil(l)))
    throw Error(ErrorKind::VerificationFailed, "interpolated spectrum does not expand to the symbolic Q");
  return *candidate;
}

}  // namespace solvspec
