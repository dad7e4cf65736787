#include "solvspec/poly.hpp"

#include <algorithm>
#include "json.hpp"
#include <regex>

namespace solvspec {

namespace {

constexpr unsigned kBits = 6;
constexpr uint64_t kMask = (1u << kBits) - 1;

unsigned shift_of(size_t var) { return kBits * (kMaxVars - 1 - var); }

bool key_divides(const MultiPoly& p, const ExpKey& d, const ExpKey& m) {
  if (d.degree > m.degree) return false;
  for (size_t v = 0; v < p.nvars(); ++v)
    if (p.exponent(d, v) > p.exponent(m, v)) return false;
  return true;
}

bool key_eq(const ExpKey& a, const ExpKey& b) { return a.degree == b.degree && a.packed == b.packed; }

std::string monomial_name(const MultiPoly& p, const ExpKey& k) {
  std::string s;
  for (size_t v = 0; v < p.nvars(); ++v) {
    unsigned e = p.exponent(k, v);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool single_term_negative(const Scalar& s) {
  Gauss c = s.numerator().terms().begin()->second;
  return sgn(c.re) < 0 || (sgn(c.re) == 0 && sgn(c.im) < 0);
}

bool is_single_term(const Scalar& s) {
  if (s.is_constant()) {
    const Gauss& c = s.constant();
    return c.is_real() || sgn(c.re) == 0;
  }
  return s.denominator().is_constant() && s.numerator().terms().size() == 1 &&
         (s.numerator().terms().begin()->second.is_real() || sgn(s.numerator().terms().begin()->second.re) == 0);
}

// Coefficient rendered in front of a monomial: (negative?, prefix ending in '*' or empty).
std::pair<bool, std::string> coefficient_prefix(const Scalar& s) {
  if (is_single_term(s)) {
    bool neg = s.is_constant() ? (sgn(s.constant().re) < 0 || (sgn(s.constant().re) == 0 && sgn(s.constant().im) < 0))
                               : single_term_negative(s);
    Scalar a = neg ? -s : s;
    if (a.is_one()) return {neg, ""};
    return {neg, a.str() + "*"};
  }
  if (s.is_constant()) {
    bool neg = sgn(s.constant().re) < 0;
    return {neg, "(" + (neg ? -s : s).str() + ")*"};
  }
  std::string str = s.str();
  if (str[0] == '-') return {true, "(" + (-s).str() + ")*"};
  return {false, "(" + str + ")*"};
}

std::pair<bool, std::string> constant_body(const Scalar& s) {
  auto [neg, prefix] = coefficient_prefix(s);
  if (prefix.empty()) return {neg, "1"};
  return {neg, prefix.substr(0, prefix.size() - 1)};
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k == 0)
      s += (parts[k].first ? "-" : "") + parts[k].second;
    else
      s += (parts[k].first ? " - " : " + ") + parts[k].second;
  }
  return s;
}

}  // namespace

// ---- MultiPoly ----

MultiPoly::MultiPoly(size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw Error(ErrorKind::ShapeMismatch, "too many polynomial variables");
}

MultiPoly MultiPoly::constant(size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(ExpKey{}, c);
  return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t index) {
  MultiPoly p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

unsigned MultiPoly::exponent(const ExpKey& k, size_t var) const {
  return static_cast<unsigned>((k.packed >> shift_of(var)) & kMask);
}

std::vector<unsigned> MultiPoly::exponents(const ExpKey& k) const {
  std::vector<unsigned> e(nvars_);
  for (size_t v = 0; v < nvars_; ++v) e[v] = exponent(k, v);
  return e;
}

ExpKey MultiPoly::make_key(const std::vector<unsigned>& exps) const {
  ExpKey k;
  for (size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] > kMask) throw Error(ErrorKind::ShapeMismatch, "exponent too large");
    k.degree += exps[v];
    k.packed |= static_cast<uint64_t>(exps[v]) << shift_of(v);
  }
  return k;
}

unsigned MultiPoly::degree_in(size_t var) const {
  unsigned d = 0;
  for (auto& [k, c] : terms_) d = std::max(d, exponent(k, var));
  return d;
}

Scalar MultiPoly::coefficient(const std::vector<unsigned>& exps) const {
  ExpKey k = make_key(exps);
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

std::set<std::string> MultiPoly::symbols() const {
  std::set<std::string> s;
  for (auto& [k, c] : terms_)
    for (auto& v : c.symbols()) s.insert(v);
  return s;
}

void MultiPoly::add_term(const ExpKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  if (r.nvars_ == 0) r.nvars_ = b.nvars_;
  for (auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  if (r.nvars_ == 0) r.nvars_ = b.nvars_;
  for (auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) {
      if (ka.degree + kb.degree > kMask)
        for (size_t v = 0; v < r.nvars_; ++v)
          if (a.exponent(ka, v) + b.exponent(kb, v) > kMask) throw Error(ErrorKind::ShapeMismatch, "exponent overflow");
      r.add_term(ExpKey{ka.degree + kb.degree, ka.packed + kb.packed}, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return MultiPoly(nvars_);
  MultiPoly r = *this;
  for (auto& [k, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Scalar(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& q) const {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  MultiPoly quot(nvars_), r = *this;
  const ExpKey lq = q.terms_.begin()->first;
  Scalar inv = q.terms_.begin()->second.inv();
  while (!r.is_zero()) {
    ExpKey lr = r.terms_.begin()->first;
    if (!key_divides(*this, lq, lr))
      throw Error(ErrorKind::InexactDivision, canonical_string(*this) + " by " + canonical_string(q));
    ExpKey t{lr.degree - lq.degree, lr.packed - lq.packed};
    Scalar c = r.terms_.begin()->second * inv;
    quot.add_term(t, c);
    for (auto& [k, v] : q.terms_) r.add_term(ExpKey{k.degree + t.degree, k.packed + t.packed}, -(v * c));
  }
  return quot;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto& [k, c] : a.terms_) {
    if (!key_eq(k, ib->first) || c != ib->second) return false;
    ++ib;
  }
  return true;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
  Scalar total;
  for (auto& [k, c] : terms_) {
    Scalar t = c;
    for (size_t v = 0; v < nvars_; ++v) {
      unsigned e = exponent(k, v);
      if (e) t *= point[v].pow(e);
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::map_coefficients(Scalar (*fn)(const Scalar&, const Assignment&), const Assignment& a) const {
  MultiPoly r(nvars_);
  for (auto& [k, c] : terms_) r.add_term(k, fn(c, a));
  return r;
}

MultiPoly MultiPoly::bind(const Assignment& a) const {
  return map_coefficients([](const Scalar& s, const Assignment& x) { return bind_params(s, x); }, a);
}

MultiPoly MultiPoly::derivative(size_t var) const {
  MultiPoly r(nvars_);
  for (auto& [k, c] : terms_) {
    unsigned e = exponent(k, var);
    if (e == 0) continue;
    r.add_term(ExpKey{k.degree - 1, k.packed - (uint64_t{1} << shift_of(var))}, c * Scalar(static_cast<long>(e)));
  }
  return r;
}

std::string canonical_string(const MultiPoly& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (auto& [k, c] : p.terms()) {
    if (k.degree == 0) {
      parts.push_back(constant_body(c));
    } else {
      auto [neg, prefix] = coefficient_prefix(c);
      parts.emplace_back(neg, prefix + monomial_name(p, k));
    }
  }
  return join_terms(parts);
}

std::string to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [k, c] : p.terms()) terms.push_back({{"exp", p.exponents(k)}, {"coeff", c.str()}});
  return nlohmann::json{{"terms", terms}}.dump();
}

// ---- determinant ----

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  size_t n = m.size();
  size_t nv = 0;
  for (auto& row : m)
    for (auto& e : row) nv = std::max(nv, e.nvars());
  if (n == 0) return MultiPoly::constant(nv, Scalar(1));
  MultiPoly prev = MultiPoly::constant(nv, Scalar(1));
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(nv);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t = t - m[i][k] * m[k][j];
        m[i][j] = t.exact_div(prev);
      }
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  if (d.nvars() < nv) d = d + MultiPoly(nv);
  return negate ? -d : d;
}

// ---- univariate ----

MultiPoly univariate(const std::vector<Scalar>& coeffs) {
  MultiPoly p(1);
  for (size_t e = 0; e < coeffs.size(); ++e) p.add_term(std::vector<unsigned>{static_cast<unsigned>(e)}, coeffs[e]);
  return p;
}

std::vector<Scalar> univariate_coefficients(const MultiPoly& p) {
  std::vector<Scalar> c(p.degree_in(0) + 1);
  for (auto& [k, v] : p.terms()) c[p.exponent(k, 0)] = v;
  return c;
}

namespace {

std::vector<Scalar> poly_rem(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  Scalar inv = b.back().inv();
  while (a.size() >= b.size()) {
    Scalar f = a.back() * inv;
    size_t off = a.size() - b.size();
    if (!f.is_zero())
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
  }
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

void trim(std::vector<Scalar>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

}  // namespace

MultiPoly univariate_gcd(const MultiPoly& pa, const MultiPoly& pb) {
  std::vector<Scalar> a = pa.is_zero() ? std::vector<Scalar>{} : univariate_coefficients(pa);
  std::vector<Scalar> b = pb.is_zero() ? std::vector<Scalar>{} : univariate_coefficients(pb);
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return MultiPoly(1);
  Scalar inv = a.back().inv();
  for (auto& x : a) x *= inv;
  return univariate(a);
}

unsigned squarefree_degree(const MultiPoly& p) {
  unsigned d = p.degree_in(0);
  if (d == 0) return 0;
  MultiPoly g = univariate_gcd(p, p.derivative(0));
  return d - g.degree_in(0);
}

MultiPoly characteristic_polynomial(const Matrix& m) {
  size_t n = m.rows();
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(1)));
  MultiPoly lambda = MultiPoly::variable(1, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a[i][j] = MultiPoly::constant(1, -m(i, j));
      if (i == j) a[i][j] = a[i][j] + lambda;
    }
  return determinant(std::move(a));
}

// ---- LinearForm ----

LinearForm::LinearForm(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  size_t f = 0;
  while (f < c_.size() && c_[f].is_zero()) ++f;
  if (f == c_.size()) throw Error(ErrorKind::ShapeMismatch, "zero linear form");
  if (!c_[f].is_one()) {
    Scalar inv = c_[f].inv();
    for (size_t i = f; i < c_.size(); ++i) c_[i] *= inv;
  }
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly p(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::vector<unsigned> e(c_.size(), 0);
    e[i] = 1;
    p.add_term(e, c_[i]);
  }
  return p;
}

LinearForm LinearForm::bind(const Assignment& a) const {
  std::vector<Scalar> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = bind_params(c_[i], a);
  return LinearForm(std::move(c));
}

std::string LinearForm::str() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    auto [neg, prefix] = coefficient_prefix(c_[i]);
    parts.emplace_back(neg, prefix + "z" + std::to_string(i));
  }
  return join_terms(parts);
}

int compare(const LinearForm& a, const LinearForm& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars() ? -1 : 1;
  bool za = a[0].is_zero(), zb = b[0].is_zero();
  if (za != zb) return za ? 1 : -1;
  std::vector<size_t> sa, sb;
  for (size_t i = 1; i < a.nvars(); ++i) {
    if (!a[i].is_zero()) sa.push_back(i);
    if (!b[i].is_zero()) sb.push_back(i);
  }
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  if (sa != sb) return sa < sb ? -1 : 1;
  for (size_t i : sa) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---- FactoredSpectrum ----

FactoredSpectrum::FactoredSpectrum(size_t nvars, const std::vector<Entry>& entries) : nvars_(nvars) {
  for (auto& [f, m] : entries) {
    if (m == 0) continue;
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == f; });
    if (it == entries_.end())
      entries_.emplace_back(f, m);
    else
      it->second += m;
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& x, const Entry& y) { return compare(x.first, y.first) < 0; });
}

unsigned FactoredSpectrum::degree() const {
  unsigned d = 0;
  for (auto& e : entries_) d += e.second;
  return d;
}

unsigned FactoredSpectrum::multiplicity(const LinearForm& f) const {
  for (auto& e : entries_)
    if (e.first == f) return e.second;
  return 0;
}

std::vector<unsigned> FactoredSpectrum::multiplicity_signature() const {
  std::vector<unsigned> s;
  for (auto& e : entries_) s.push_back(e.second);
  std::sort(s.rbegin(), s.rend());
  return s;
}

FactoredSpectrum FactoredSpectrum::bind(const Assignment& a) const {
  std::vector<Entry> out;
  for (auto& [f, m] : entries_) out.emplace_back(f.bind(a), m);
  return FactoredSpectrum(nvars_, out);
}

MultiPoly expand_spectrum(const FactoredSpectrum& fs) {
  MultiPoly p = MultiPoly::constant(fs.nvars(), Scalar(1));
  for (auto& [f, m] : fs.entries()) p = p * f.to_poly().pow(m);
  return p;
}

std::string canonical_string(const FactoredSpectrum& fs) {
  if (fs.entries().empty()) return "1";
  std::string s;
  for (auto& [f, m] : fs.entries()) {
    if (!s.empty()) s += "*";
    size_t nz = 0;
    for (auto& c : f.coeffs()) nz += !c.is_zero();
    std::string body = f.str();
    s += nz == 1 ? body : "(" + body + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

std::string to_json(const FactoredSpectrum& fs) {
  nlohmann::json factors = nlohmann::json::array();
  for (auto& [f, m] : fs.entries()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& c : f.coeffs()) coeffs.push_back(c.str());
    factors.push_back({{"form", f.str()}, {"coeffs", coeffs}, {"multiplicity", m}});
  }
  return nlohmann::json{{"factors", factors}, {"k", fs.k()}, {"canonical", canonical_string(fs)}}.dump();
}

FactoredSpectrum parse_spectrum(const std::string& text, size_t nvars) {
  std::vector<std::string> pieces;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '*' && depth == 0) {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  pieces.push_back(cur);
  static const std::regex zvar("z([0-9]+)");
  std::vector<std::pair<std::vector<std::pair<size_t, Scalar>>, unsigned>> raw;
  size_t maxvar = 0;
  for (auto piece : pieces) {
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    unsigned mult = 1;
    size_t caret = piece.rfind('^');
    if (caret != std::string::npos && piece.find(')', caret) == std::string::npos) {
      mult = static_cast<unsigned>(std::stoul(piece.substr(caret + 1)));
      piece = piece.substr(0, caret);
    }
    Scalar s = parse_scalar(piece);
    if (!s.denominator().is_constant()) throw Error(ErrorKind::ParseError, "factor is not linear: " + piece);
    std::vector<std::pair<size_t, Scalar>> coeffs;
    ParamPoly num = s.numerator();
    for (auto& [mono, c] : num.terms()) {
      size_t var = SIZE_MAX;
      Monomial rest;
      for (auto& [v, e] : mono) {
        std::smatch mt;
        if (std::regex_match(v, mt, zvar)) {
          if (var != SIZE_MAX || e != 1) throw Error(ErrorKind::ParseError, "factor is not linear: " + piece);
          var = std::stoul(mt[1]);
        } else {
          rest.emplace_back(v, e);
        }
      }
      if (var == SIZE_MAX) throw Error(ErrorKind::ParseError, "constant term in factor: " + piece);
      ParamPoly cp;
      cp.add_term(rest, c);
      coeffs.emplace_back(var, Scalar(cp, ParamPoly(Gauss(1))));
      maxvar = std::max(maxvar, var);
    }
    raw.emplace_back(std::move(coeffs), mult);
  }
  if (nvars == 0) nvars = maxvar + 1;
  if (maxvar >= nvars) throw Error(ErrorKind::ParseError, "variable index out of range in " + text);
  std::vector<FactoredSpectrum::Entry> entries;
  for (auto& [coeffs, mult] : raw) {
    std::vector<Scalar> c(nvars);
    for (auto& [v, s] : coeffs) c[v] += s;
    entries.emplace_back(LinearForm(std::move(c)), mult);
  }
  return FactoredSpectrum(nvars, entries);
}

// ---- interpolation ----

namespace {

void enumerate_exponents(size_t nparams, unsigned bound, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> e(nparams, 0);
  for (;;) {
    out.push_back(e);
    size_t i = 0;
    while (i < nparams && e[i] == bound) e[i++] = 0;
    if (i == nparams) return;
    ++e[i];
  }
}

}  // namespace

Scalar interpolate_rational(const std::vector<InterpolationSample>& samples, unsigned num_degree,
                            unsigned den_degree) {
  if (samples.empty()) throw Error(ErrorKind::NoConsistentFunction, "no samples");
  std::vector<std::string> params;
  for (auto& [name, v] : samples[0].point) params.push_back(name);
  for (auto& p : params) {
    std::vector<Scalar> seen;
    for (auto& s : samples) {
      const Scalar& v = s.point.at(p);
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
    if (seen.size() < num_degree + den_degree + 2)
      throw Error(ErrorKind::NoConsistentFunction, "too few distinct samples for " + p);
  }
  std::vector<std::vector<unsigned>> nmon, dmon;
  enumerate_exponents(params.size(), num_degree, nmon);
  enumerate_exponents(params.size(), den_degree, dmon);
  auto mono_value = [&](const std::vector<unsigned>& e, const Assignment& pt) {
    Scalar v(1);
    for (size_t i = 0; i < params.size(); ++i)
      if (e[i]) v *= pt.at(params[i]).pow(e[i]);
    return v;
  };
  Matrix sys(samples.size(), nmon.size() + dmon.size());
  for (size_t r = 0; r < samples.size(); ++r) {
    for (size_t j = 0; j < nmon.size(); ++j) sys(r, j) = mono_value(nmon[j], samples[r].point);
    for (size_t j = 0; j < dmon.size(); ++j)
      sys(r, nmon.size() + j) = -(samples[r].value * mono_value(dmon[j], samples[r].point));
  }
  auto as_poly = [&](const Vec& v, size_t off, const std::vector<std::vector<unsigned>>& mons) {
    ParamPoly p;
    for (size_t j = 0; j < mons.size(); ++j) {
      if (v[off + j].is_zero()) continue;
      Monomial m;
      for (size_t i = 0; i < params.size(); ++i)
        if (mons[j][i]) m.emplace_back(params[i], mons[j][i]);
      std::sort(m.begin(), m.end());
      p.add_term(m, v[off + j].constant());
    }
    return p;
  };
  for (auto& v : nullspace(sys)) {
    ParamPoly den = as_poly(v, nmon.size(), dmon);
    if (den.is_zero()) continue;
    Scalar candidate(as_poly(v, 0, nmon), den);
    bool ok = true;
    for (auto& s : samples) {
      try {
        if (bind_params(candidate, s.point) != s.value) ok = false;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return candidate;
  }
  throw Error(ErrorKind::NoConsistentFunction, "no rational function within the degree bounds fits the samples");
}

}  // namespace solvspec
