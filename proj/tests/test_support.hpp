#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "solvspec/catalog.hpp"
#include "solvspec/heisenberg.hpp"
#include "solvspec/liealg.hpp"
#include "solvspec/spectra.hpp"

namespace solvspec::testing {

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = load_catalog(std::string(SOLVSPEC_DATA_DIR) + "/catalog.json");
  return cat;
}

inline Scalar S(const std::string& s) { return parse_scalar(s); }

inline Matrix diag(const std::vector<long>& d) {
  Matrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = Scalar(d[i]);
  return m;
}

inline Matrix int_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Scalar(rows[i][j]);
  return m;
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Unit lower-triangular times unit upper-triangular: determinant 1.
inline Matrix random_unimodular(std::mt19937_64& rng, size_t n) {
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) {
      lower(i, j) = Scalar(rand_int(rng, -2, 2));
      upper(j, i) = Scalar(rand_int(rng, -2, 2));
    }
  return lower * upper;
}

// Same eigenvalues {1, -1, 0}; the second is not diagonal.
inline Matrix sem_example_first() { return diag({1, -1, 0}); }
inline Matrix sem_example_second() { return int_matrix({{1, 1, 0}, {0, -1, 0}, {0, 0, 0}}); }

// Abelian ideal spanned by the first n basis vectors, extended by one derivation.
inline LieAlgebra abelian_extension(const Matrix& derivation) {
  size_t n = derivation.rows();
  std::vector<std::string> labels;
  for (size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  labels.push_back("f");
  LieAlgebra l(labels);
  for (size_t c = 0; c < n; ++c) {
    Vec out(n + 1);
    for (size_t r = 0; r < n; ++r) out[r] = derivation(r, c);
    l.set_bracket(n, c, out);
  }
  std::vector<size_t> nil(n);
  for (size_t i = 0; i < n; ++i) nil[i] = i;
  l.set_nilradical(nil);
  return l;
}

// Symplectic shears [[I, S], [0, I]] and [[I, 0], [S, I]] with S symmetric.
inline Matrix random_symplectic(std::mt19937_64& rng, unsigned m) {
  Matrix p = Matrix::identity(2 * m);
  for (int round = 0; round < 2; ++round) {
    Matrix up = Matrix::identity(2 * m), down = Matrix::identity(2 * m);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i; j < m; ++j) {
        Scalar s(rand_int(rng, -1, 1)), t(rand_int(rng, -1, 1));
        up(i, m + j) = up(j, m + i) = s;
        down(m + i, j) = down(m + j, i) = t;
      }
    p = p * up * down;
  }
  return p;
}

inline HeisenbergExtensionSpec random_spec(std::mt19937_64& rng) {
  HeisenbergExtensionSpec s;
  s.m = static_cast<unsigned>(rand_int(rng, 1, 2));
  size_t f = static_cast<size_t>(rand_int(rng, 1, 3));
  s.canonical = false;
  Matrix p = random_symplectic(rng, s.m), pinv = *inverse(p);
  bool twist = f >= 2 && rand_int(rng, 0, 1) == 1;
  for (size_t al = 0; al < f; ++al) {
    s.a.push_back(twist ? Scalar(0) : Scalar::rational(rand_int(rng, -3, 3), 2));
    Matrix d(2 * s.m, 2 * s.m);
    for (unsigned i = 0; i < s.m; ++i) {
      Scalar v(rand_int(rng, -3, 3));
      d(i, i) = v;
      d(s.m + i, s.m + i) = -v;
    }
    s.x.push_back(p * d * pinv);
  }
  s.r = Matrix(f, f);
  if (twist) {
    s.r(0, 1) = Scalar(rand_int(rng, 1, 3));
    s.r(1, 0) = -s.r(0, 1);
  }
  return s;
}

// Upper-triangular with the given diagonal, conjugated by a unimodular matrix.
inline Matrix split_matrix(std::mt19937_64& rng, const std::vector<long>& d) {
  size_t n = d.size();
  Matrix t = diag(d);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) t(i, j) = Scalar(rand_int(rng, -1, 1));
  Matrix p = random_unimodular(rng, n);
  return p * t * *inverse(p);
}

inline FactoredSpectrum random_spectrum(std::mt19937_64& rng, size_t nvars) {
  std::vector<FactoredSpectrum::Entry> e;
  size_t k = static_cast<size_t>(rand_int(rng, 2, 5));
  for (size_t i = 0; i < k; ++i) {
    Vec c{Scalar(1)};
    for (size_t v = 1; v < nvars; ++v) c.push_back(Scalar(rand_int(rng, -2, 2)));
    e.emplace_back(LinearForm(c), static_cast<unsigned>(rand_int(rng, 1, 2)));
  }
  return FactoredSpectrum(nvars, e);
}

inline Matrix random_invertible(std::mt19937_64& rng, size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = Scalar(rand_int(rng, -2, 2));
    if (!determinant(m).is_zero()) return m;
  }
}

// Span of matrix units closed under commutators, inside strictly upper-triangular d x d matrices.
inline LieAlgebra random_triangular_algebra(std::mt19937_64& rng) {
  size_t d = static_cast<size_t>(rand_int(rng, 3, 4));
  std::set<std::pair<size_t, size_t>> units;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j)
      if (rand_int(rng, 0, 2) > 0) units.insert({i, j});
  if (units.empty()) units.insert({0, d - 1});
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [i, j] : std::vector<std::pair<size_t, size_t>>(units.begin(), units.end()))
      for (auto [k, l] : std::vector<std::pair<size_t, size_t>>(units.begin(), units.end()))
        if (j == k && units.insert({i, l}).second) grew = true;
  }
  std::vector<std::pair<size_t, size_t>> basis(units.begin(), units.end());
  std::vector<std::string> labels;
  for (auto [i, j] : basis) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  LieAlgebra l(labels);
  size_t n = basis.size();
  auto index = [&](size_t i, size_t j) { return std::find(basis.begin(), basis.end(), std::make_pair(i, j)) - basis.begin(); };
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      Vec out(n);
      auto [i, j] = basis[a];
      auto [k, m] = basis[b];
      if (j == k) out[index(i, m)] += Scalar(1);
      if (m == i) out[index(k, j)] -= Scalar(1);
      l.set_bracket(a, b, out);
    }
  return l.change_basis(random_unimodular(rng, n));
}

// Random integer pencil; one variable above 5 x 5 keeps the cofactor oracle fast.
inline Pencil random_pencil(std::mt19937_64& rng, size_t max_dim) {
  Pencil p;
  p.dim = static_cast<size_t>(rand_int(rng, 1, static_cast<long>(max_dim)));
  size_t vars = p.dim > 5 ? 1 : static_cast<size_t>(rand_int(rng, 1, 3));
  for (size_t v = 0; v < vars; ++v) {
    Matrix m(p.dim, p.dim);
    for (size_t i = 0; i < p.dim; ++i)
      for (size_t j = 0; j < p.dim; ++j) m(i, j) = Scalar(rand_int(rng, -3, 3));
    p.mats.push_back(m);
  }
  return p;
}

}  // namespace solvspec::testing
