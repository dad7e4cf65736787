#include "solvspec/heisenberg.hpp"

#include <algorithm>
#include <functional>

namespace solvspec {

namespace {

std::vector<std::string> heisenberg_labels(unsigned m) {
  std::vector<std::string> b{"h"};
  for (unsigned i = 1; i <= m; ++i) b.push_back("p" + std::to_string(i));
  for (unsigned i = 1; i <= m; ++i) b.push_back("q" + std::to_string(i));
  return b;
}

std::vector<std::string> collect_params(const HeisenbergExtensionSpec& spec) {
  std::set<std::string> s;
  auto add = [&](const Scalar& v) {
    for (auto& p : v.symbols()) s.insert(p);
  };
  for (auto& v : spec.a) add(v);
  for (auto& x : spec.x)
    for (size_t i = 0; i < x.rows(); ++i)
      for (size_t j = 0; j < x.cols(); ++j) add(x(i, j));
  for (size_t i = 0; i < spec.r.rows(); ++i)
    for (size_t j = 0; j < spec.r.cols(); ++j) add(spec.r(i, j));
  return {s.begin(), s.end()};
}

}  // namespace

LieAlgebra build_heisenberg(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidSpec, "m must be at least 1");
  LieAlgebra l(heisenberg_labels(m));
  size_t n = 2 * m + 1;
  for (unsigned i = 0; i < m; ++i) l.set_bracket(1 + i, 1 + m + i, unit_vector(n, 0));
  std::vector<size_t> all(n);
  for (size_t i = 0; i < n; ++i) all[i] = i;
  l.set_nilradical(all);
  return l;
}

Matrix symplectic_form(unsigned m) {
  Matrix j(2 * m, 2 * m);
  for (unsigned i = 0; i < m; ++i) {
    j(i, m + i) = Scalar(1);
    j(m + i, i) = Scalar(-1);
  }
  return j;
}

std::vector<std::string> spec_violations(const HeisenbergExtensionSpec& spec) {
  std::vector<std::string> v;
  size_t f = spec.f(), n = 2 * spec.m;
  if (spec.m == 0) v.push_back("m must be at least 1");
  if (f == 0) v.push_back("extension dimension must be at least 1");
  if (spec.x.size() != f) v.push_back("expected one X matrix per extension generator");
  if (spec.r.rows() != f || spec.r.cols() != f) v.push_back("r must be f x f");
  if (!v.empty()) return v;
  Matrix j = symplectic_form(spec.m);
  for (size_t al = 0; al < f; ++al) {
    const Matrix& x = spec.x[al];
    if (x.rows() != n || x.cols() != n) {
      v.push_back("X" + std::to_string(al + 1) + " must be 2m x 2m");
      continue;
    }
    if (!(x.transpose() * j + j * x).is_zero()) v.push_back("X" + std::to_string(al + 1) + " is not symplectic");
  }
  if (!v.empty()) return v;
  for (size_t al = 0; al < f; ++al)
    for (size_t be = al + 1; be < f; ++be)
      if (!commutator(spec.x[al], spec.x[be]).is_zero())
        v.push_back("X" + std::to_string(al + 1) + " and X" + std::to_string(be + 1) + " do not commute");
  for (size_t al = 0; al < f; ++al)
    for (size_t be = 0; be < f; ++be)
      if (spec.r(al, be) != -spec.r(be, al)) v.push_back("r is not antisymmetric");
  for (size_t al = 0; al < f; ++al)
    for (size_t be = al + 1; be < f; ++be)
      for (size_t ga = be + 1; ga < f; ++ga) {
        Scalar cyc = spec.r(al, be) * spec.a[ga] + spec.r(be, ga) * spec.a[al] + spec.r(ga, al) * spec.a[be];
        if (!cyc.is_zero()) v.push_back("r and a violate the Jacobi identity on extension triples");
      }
  if (spec.canonical) {
    if (!spec.a[0].is_zero() && !spec.a[0].is_one()) v.push_back("a1 must be 0 or 1");
    for (size_t al = 1; al < f; ++al)
      if (!spec.a[al].is_zero()) v.push_back("a" + std::to_string(al + 1) + " must be 0");
    if (spec.a[0].is_one() && !spec.r.is_zero()) v.push_back("r must vanish when a1 = 1");
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

LieAlgebra build_extension(const HeisenbergExtensionSpec& spec) {
  auto v = spec_violations(spec);
  if (!v.empty()) {
    std::string msg;
    for (auto& s : v) msg += (msg.empty() ? "" : "; ") + s;
    throw Error(ErrorKind::InvalidSpec, msg);
  }
  unsigned m = spec.m;
  size_t f = spec.f(), n = spec.dim();
  std::vector<std::string> labels = heisenberg_labels(m);
  for (size_t al = 1; al <= f; ++al) labels.push_back("f" + std::to_string(al));
  LieAlgebra l(labels, collect_params(spec));
  for (unsigned i = 0; i < m; ++i) l.set_bracket(1 + i, 1 + m + i, unit_vector(n, 0));
  for (size_t al = 0; al < f; ++al) {
    size_t fi = 2 * m + 1 + al;
    Vec out(n);
    out[0] = spec.a[al] * 2;
    l.set_bracket(fi, 0, out);
    for (size_t c = 0; c < 2 * m; ++c) {
      Vec o(n);
      for (size_t r = 0; r < 2 * m; ++r) o[1 + r] = spec.x[al](r, c) + (r == c ? spec.a[al] : Scalar(0));
      l.set_bracket(fi, 1 + c, o);
    }
    for (size_t be = al + 1; be < f; ++be) {
      Vec o(n);
      o[0] = spec.r(al, be);
      l.set_bracket(fi, 2 * m + 1 + be, o);
    }
  }
  std::vector<size_t> nil(2 * m + 1);
  for (size_t i = 0; i < nil.size(); ++i) nil[i] = i;
  l.set_nilradical(nil);
  return l;
}

MultiPoly closed_form_Q(const HeisenbergExtensionSpec& spec) {
  unsigned m = spec.m;
  size_t f = spec.f(), nv = spec.dim() + 1;
  auto zf = [&](size_t al) { return MultiPoly::variable(nv, 2 * m + 2 + al); };
  MultiPoly z0 = MultiPoly::variable(nv, 0);
  MultiPoly hform = z0;
  for (size_t al = 0; al < f; ++al) hform = hform + zf(al).scaled(spec.a[al] * 2);
  std::vector<std::vector<MultiPoly>> blk(2 * m, std::vector<MultiPoly>(2 * m, MultiPoly(nv)));
  for (size_t r = 0; r < 2 * m; ++r)
    for (size_t c = 0; c < 2 * m; ++c) {
      MultiPoly e = r == c ? z0 : MultiPoly(nv);
      for (size_t al = 0; al < f; ++al) {
        Scalar coef = spec.x[al](r, c) + (r == c ? spec.a[al] : Scalar(0));
        if (!coef.is_zero()) e = e + zf(al).scaled(coef);
      }
      blk[r][c] = e;
    }
  return z0.pow(static_cast<unsigned>(f)) * hform * determinant(blk);
}

HeisenbergExtensionSpec extract_spec(const LieAlgebra& l, unsigned m) {
  if (l.dim() <= 2 * m + 1) throw Error(ErrorKind::InvalidSpec, "algebra has no extension part");
  HeisenbergExtensionSpec spec;
  spec.m = m;
  size_t f = l.dim() - 2 * m - 1;
  spec.r = Matrix(f, f);
  for (size_t al = 0; al < f; ++al) {
    size_t fi = 2 * m + 1 + al;
    Scalar a = l.constant(fi, 0, 0) / 2;
    spec.a.push_back(a);
    Matrix x(2 * m, 2 * m);
    for (size_t c = 0; c < 2 * m; ++c)
      for (size_t r = 0; r < 2 * m; ++r) x(r, c) = l.constant(fi, 1 + c, 1 + r) - (r == c ? a : Scalar(0));
    spec.x.push_back(x);
    for (size_t be = 0; be < f; ++be) spec.r(al, be) = l.constant(fi, 2 * m + 1 + be, 0);
  }
  spec.canonical = false;
  HeisenbergExtensionSpec probe = spec;
  probe.canonical = true;
  spec.canonical = spec_violations(probe).empty();
  return spec;
}

std::vector<HeisenbergExtensionSpec> realize_from_factors(unsigned m, size_t f, const FactoredSpectrum& target) {
  size_t nv = 2 * m + 2 + f;
  if (target.nvars() != nv) throw Error(ErrorKind::Infeasible, "target has the wrong number of variables");
  std::vector<Vec> weights;
  size_t quotient_left = f;
  for (auto& [form, mult] : target.entries()) {
    if (!form.is_monic()) throw Error(ErrorKind::Infeasible, "target factor is not monic in z0");
    for (size_t v = 1; v < 2 * m + 2; ++v)
      if (!form[v].is_zero()) throw Error(ErrorKind::Infeasible, "target factor involves nilradical variables");
    Vec w(form.coeffs().begin() + 2 * m + 2, form.coeffs().end());
    unsigned rest = mult;
    bool zero = std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero) {
      unsigned take = std::min<unsigned>(rest, static_cast<unsigned>(quotient_left));
      quotient_left -= take;
      rest -= take;
    }
    for (unsigned i = 0; i < rest; ++i) weights.push_back(w);
  }
  if (quotient_left != 0 || weights.size() != 2 * m + 1)
    throw Error(ErrorKind::Infeasible, "target does not have the z0^f times degree 2m+1 shape");

  auto add = [](const Vec& u, const Vec& v) {
    Vec s(u.size());
    for (size_t i = 0; i < u.size(); ++i) s[i] = u[i] + v[i];
    return s;
  };
  MultiPoly goal = expand_spectrum(target);
  for (size_t hi = 0; hi < weights.size(); ++hi) {
    if (hi > 0 && weights[hi] == weights[hi - 1]) continue;
    const Vec& hw = weights[hi];
    std::vector<Vec> rest;
    for (size_t i = 0; i < weights.size(); ++i)
      if (i != hi) rest.push_back(weights[i]);
    std::vector<std::pair<Vec, Vec>> pairs;
    std::vector<bool> used(rest.size(), false);
    std::function<bool()> pair_up = [&]() -> bool {
      size_t first = 0;
      while (first < rest.size() && used[first]) ++first;
      if (first == rest.size()) return true;
      used[first] = true;
      for (size_t j = first + 1; j < rest.size(); ++j) {
        if (used[j] || add(rest[first], rest[j]) != hw) continue;
        used[j] = true;
        pairs.emplace_back(rest[first], rest[j]);
        if (pair_up()) return true;
        pairs.pop_back();
        used[j] = false;
      }
      used[first] = false;
      return false;
    };
    if (!pair_up()) continue;

    HeisenbergExtensionSpec base;
    base.m = m;
    base.canonical = false;
    base.r = Matrix(f, f);
    for (size_t al = 0; al < f; ++al) {
      base.a.push_back(hw[al] / 2);
      Matrix x(2 * m, 2 * m);
      for (unsigned i = 0; i < m; ++i) {
        x(i, i) = pairs[i].first[al] - base.a[al];
        x(m + i, m + i) = pairs[i].second[al] - base.a[al];
      }
      base.x.push_back(x);
    }
    std::vector<HeisenbergExtensionSpec> out{base};
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i + 1; j < m; ++j) {
        if (pairs[i] != pairs[j]) continue;
        HeisenbergExtensionSpec v = base;
        v.x[0](i, j) = v.x[0](i, j) + 1;
        v.x[0](m + j, m + i) = v.x[0](m + j, m + i) - 1;
        out.push_back(v);
      }
    for (auto& s : out)
      if (closed_form_Q(s) != goal) throw Error(ErrorKind::VerificationFailed, "realization does not reproduce target");
    return out;
  }
  throw Error(ErrorKind::Infeasible, "no pairing of weights satisfies lambda_p + lambda_q = lambda_h");
}

}  // namespace solvspec
