#include "solvspec/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "expr_parser.hpp"

namespace solvspec {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::PoleAtAssignment: return "PoleAtAssignment";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::DoesNotSplitOverField: return "DoesNotSplitOverField";
    case ErrorKind::NoConsistentFunction: return "NoConsistentFunction";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::InconsistentPattern: return "InconsistentPattern";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularB: return "SingularB";
    case ErrorKind::NotAbelianComplement: return "NotAbelianComplement";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownCase: return "UnknownCase";
  }
  return "Error";
}

// ---- Gauss ----

Gauss Gauss::inv() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Gauss(re / n, -im / n, Canonical{});
}

int compare(const Gauss& a, const Gauss& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im, b.im);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

std::string imag_str(const mpq_class& v) {
  if (v == 1) return "i";
  if (v == -1) return "-i";
  return v.get_str() + "*i";
}

}  // namespace

std::string to_string(const Gauss& g) {
  if (g.is_real()) return g.re.get_str();
  if (sgn(g.re) == 0) return imag_str(g.im);
  mpq_class a = abs(g.im);
  return g.re.get_str() + (sgn(g.im) < 0 ? " - " : " + ") + imag_str(a);
}

// ---- monomials ----

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

int compare_monomial(const Monomial& a, const Monomial& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return 1;
    if (i == a.size() || b[j].first < a[i].first) return -1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  size_t j = 0;
  for (auto& [v, e] : d) {
    while (j < m.size() && m[j].first < v) ++j;
    if (j == m.size() || m[j].first != v || m[j].second < e) return false;
  }
  return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
  Monomial r;
  size_t j = 0;
  for (auto& [v, e] : m) {
    unsigned sub = 0;
    if (j < d.size() && d[j].first == v) sub = d[j++].second;
    if (e > sub) r.emplace_back(v, e - sub);
  }
  return r;
}

// ---- ParamPoly ----

ParamPoly::ParamPoly(const Gauss& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::symbol(const std::string& name) {
  ParamPoly p;
  p.terms_.emplace(Monomial{{name, 1}}, Gauss(1));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Gauss ParamPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Gauss() : it->second;
}

std::set<std::string> ParamPoly::symbols() const {
  std::set<std::string> s;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m) s.insert(v);
  return s;
}

unsigned ParamPoly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m)
      if (v == var) d = std::max(d, e);
  return d;
}

unsigned ParamPoly::total_degree() const {
  return terms_.empty() ? 0 : solvspec::total_degree(lead_monomial());
}

void ParamPoly::add_term(const Monomial& m, const Gauss& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r = a;
  for (auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r = a;
  for (auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

ParamPoly ParamPoly::scaled(const Gauss& c) const {
  if (c.is_zero()) return ParamPoly();
  ParamPoly r = *this;
  for (auto& [m, v] : r.terms_) v = v * c;
  return r;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  ParamPoly q, r = *this;
  const Monomial& dl = d.lead_monomial();
  Gauss dinv = d.lead_coeff().inv();
  while (!r.is_zero()) {
    const Monomial& rl = r.lead_monomial();
    if (!monomial_divides(dl, rl)) throw Error(ErrorKind::InexactDivision, r.str() + " by " + d.str());
    Monomial t = monomial_div(rl, dl);
    Gauss c = r.lead_coeff() * dinv;
    q.add_term(t, c);
    for (auto& [m, v] : d.terms_) r.add_term(monomial_mul(t, m), -(v * c));
  }
  return q;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead_coeff().inv());
}

std::map<unsigned, ParamPoly> ParamPoly::coefficients_in(const std::string& var) const {
  std::map<unsigned, ParamPoly> out;
  for (auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    for (auto& [v, k] : m) {
      if (v == var)
        e = k;
      else
        rest.emplace_back(v, k);
    }
    out[e].add_term(rest, c);
  }
  return out;
}

ParamPoly ParamPoly::from_coefficients(const std::string& var, const std::map<unsigned, ParamPoly>& coeffs) {
  ParamPoly r;
  for (auto& [e, p] : coeffs) {
    Monomial xm;
    if (e > 0) xm.emplace_back(var, e);
    for (auto& [m, c] : p.terms_) r.add_term(monomial_mul(m, xm), c);
  }
  return r;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Term rendered as (negative?, absolute body).
std::pair<bool, std::string> term_str(const Monomial& m, const Gauss& c) {
  if (m.empty()) {
    if (c.is_real()) return {sgn(c.re) < 0, mpq_class(abs(c.re)).get_str()};
    if (sgn(c.re) == 0) return {sgn(c.im) < 0, imag_str(abs(c.im))};
    return {false, to_string(c)};
  }
  std::string mono = monomial_str(m);
  if (c.is_real()) {
    mpq_class a = abs(c.re);
    return {sgn(c.re) < 0, (a == 1 ? std::string() : a.get_str() + "*") + mono};
  }
  if (sgn(c.re) == 0) {
    mpq_class a = abs(c.im);
    return {sgn(c.im) < 0, (a == 1 ? std::string("i") : a.get_str() + "*i") + "*" + mono};
  }
  bool neg = sgn(c.re) < 0;
  return {neg, "(" + to_string(neg ? -c : c) + ")*" + mono};
}

}  // namespace

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<bool, std::string>> parts;
  auto cit = terms_.find(Monomial{});
  if (cit != terms_.end()) parts.push_back(term_str(cit->first, cit->second));
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (!it->first.empty()) parts.push_back(term_str(it->first, it->second));
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k == 0)
      s += (parts[k].first ? "-" : "") + parts[k].second;
    else
      s += (parts[k].first ? " - " : " + ") + parts[k].second;
  }
  return s;
}

// ---- gcd ----

namespace {

ParamPoly content_of(const std::map<unsigned, ParamPoly>& coeffs) {
  ParamPoly g;
  for (auto& [e, c] : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(Gauss(1));
  }
  return g;
}

ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, const std::string& x) {
  auto cb = b.coefficients_in(x);
  unsigned n = cb.rbegin()->first;
  const ParamPoly& lcb = cb.rbegin()->second;
  ParamPoly r = a;
  while (!r.is_zero()) {
    auto cr = r.coefficients_in(x);
    unsigned m = cr.rbegin()->first;
    if (m < n) break;
    ParamPoly shift;
    Monomial xm;
    if (m > n) xm.emplace_back(x, m - n);
    shift.add_term(xm, Gauss(1));
    r = r * lcb - cr.rbegin()->second * shift * b;
  }
  return r;
}

unsigned degree_of(const ParamPoly& p, const std::string& x) { return p.degree_in(x); }

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(Gauss(1));
  if (a == b) return a.monic();
  std::set<std::string> syms = a.symbols();
  for (auto& s : b.symbols()) syms.insert(s);
  const std::string x = *syms.begin();
  auto ca = a.coefficients_in(x);
  auto cb = b.coefficients_in(x);
  if (ca.rbegin()->first == 0) {
    ParamPoly g = a;
    for (auto& [e, c] : cb) {
      g = gcd(g, c);
      if (g.is_constant()) break;
    }
    return g.monic();
  }
  if (cb.rbegin()->first == 0) return gcd(b, a);
  ParamPoly conta = content_of(ca), contb = content_of(cb);
  ParamPoly pa = a.exact_div(conta), pb = b.exact_div(contb);
  ParamPoly c = gcd(conta, contb);
  if (degree_of(pa, x) < degree_of(pb, x)) std::swap(pa, pb);
  ParamPoly gp;
  for (;;) {
    if (degree_of(pb, x) == 0) {
      gp = ParamPoly(Gauss(1));
      break;
    }
    ParamPoly r = pseudo_remainder(pa, pb, x);
    if (r.is_zero()) {
      gp = pb;
      break;
    }
    pa = pb;
    pb = r.exact_div(content_of(r.coefficients_in(x)));
  }
  return (c * gp).monic();
}

// ---- Scalar ----

Scalar::Scalar(const ParamPoly& num, const ParamPoly& den) { *this = make(num, den); }

Scalar Scalar::symbol(const std::string& name) {
  if (name == "i") return imag_unit();
  return make(ParamPoly::symbol(name), ParamPoly(Gauss(1)));
}

Scalar Scalar::make(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) return Scalar();
  if (!den.is_constant()) {
    ParamPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  Gauss lc = den.lead_coeff();
  if (!lc.is_one()) {
    Gauss inv = lc.inv();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (den.is_constant() && num.is_constant()) return Scalar(num.constant_term());
  Scalar s;
  s.f_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
  return s;
}

const Gauss& Scalar::constant() const {
  if (f_) throw Error(ErrorKind::UnboundSymbol, "scalar " + str() + " is not constant");
  return c_;
}

ParamPoly Scalar::numerator() const { return f_ ? f_->num : ParamPoly(c_); }
ParamPoly Scalar::denominator() const { return f_ ? f_->den : ParamPoly(Gauss(1)); }

std::set<std::string> Scalar::symbols() const {
  if (!f_) return {};
  auto s = f_->num.symbols();
  for (auto& v : f_->den.symbols()) s.insert(v);
  return s;
}

unsigned Scalar::degree_in(const std::string& var) const {
  if (!f_) return 0;
  return std::max(f_->num.degree_in(var), f_->den.degree_in(var));
}

Scalar Scalar::operator-() const {
  if (!f_) return Scalar(-c_);
  Scalar s;
  s.f_ = std::make_shared<const Frac>(Frac{-f_->num, f_->den});
  return s;
}

namespace {

// num/den already coprime; only the unit needs normalizing.
Scalar make_coprime(const ParamPoly& num, const ParamPoly& den) {
  if (num.is_zero()) return Scalar();
  if (den.is_constant() && num.is_constant()) return Scalar(num.constant_term() / den.constant_term());
  return Scalar(num, den);
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(a.c_ + b.c_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ParamPoly na = a.numerator(), da = a.denominator(), nb = b.numerator(), db = b.denominator();
  if (da == db) return Scalar::make(na + nb, da);
  if (da.is_constant()) return Scalar::make(na.scaled(da.constant_term().inv()) * db + nb, db);
  if (db.is_constant()) return Scalar::make(nb.scaled(db.constant_term().inv()) * da + na, da);
  return Scalar::make(na * db + nb * da, da * db);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return Scalar(a.c_ * b.c_);
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (!a.f_) {
    Scalar s;
    s.f_ = std::make_shared<const Scalar::Frac>(Scalar::Frac{b.f_->num.scaled(a.c_), b.f_->den});
    return s;
  }
  if (!b.f_) return b * a;
  ParamPoly na = a.f_->num, da = a.f_->den, nb = b.f_->num, db = b.f_->den;
  if (da.is_constant() && db.is_constant()) return make_coprime(na * nb, ParamPoly(Gauss(1)));
  ParamPoly g1 = gcd(na, db), g2 = gcd(nb, da);
  if (!g1.is_constant()) {
    na = na.exact_div(g1);
    db = db.exact_div(g1);
  }
  if (!g2.is_constant()) {
    nb = nb.exact_div(g2);
    da = da.exact_div(g2);
  }
  ParamPoly num = na * nb, den = da * db;
  Gauss lc = den.lead_coeff();
  if (!lc.is_one()) {
    num = num.scaled(lc.inv());
    den = den.scaled(lc.inv());
  }
  if (den.is_constant() && num.is_constant()) return Scalar(num.constant_term());
  Scalar s;
  s.f_ = std::make_shared<const Scalar::Frac>(Scalar::Frac{std::move(num), std::move(den)});
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!f_) return Scalar(c_.inv());
  ParamPoly num = f_->den, den = f_->num;
  Gauss lc = den.lead_coeff().inv();
  num = num.scaled(lc);
  den = den.scaled(lc);
  if (den.is_constant() && num.is_constant()) return Scalar(num.constant_term());
  Scalar s;
  s.f_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!a.f_ && !b.f_) return Scalar(a.c_ / b.c_);
  return a * b.inv();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.f_ && !b.f_) return a.c_ == b.c_;
  if (!a.f_ || !b.f_) return false;
  return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

namespace {

int compare_poly(const ParamPoly& a, const ParamPoly& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    int mc;
    if (ia == a.terms().end())
      mc = 1;
    else if (ib == b.terms().end())
      mc = -1;
    else
      mc = compare_monomial(ia->first, ib->first);
    if (mc < 0) {
      int c = compare(ia->second, Gauss());
      if (c != 0) return c;
      ++ia;
    } else if (mc > 0) {
      int c = compare(Gauss(), ib->second);
      if (c != 0) return c;
      ++ib;
    } else {
      int c = compare(ia->second, ib->second);
      if (c != 0) return c;
      ++ia;
      ++ib;
    }
  }
  return 0;
}

}  // namespace

int compare(const Scalar& a, const Scalar& b) {
  bool ca = a.is_constant(), cb = b.is_constant();
  if (ca && cb) return compare(a.constant(), b.constant());
  if (ca != cb) return ca ? -1 : 1;
  int c = compare_poly(a.numerator(), b.numerator());
  if (c != 0) return c;
  return compare_poly(a.denominator(), b.denominator());
}

std::string Scalar::str() const {
  if (!f_) return to_string(c_);
  if (f_->den.is_constant()) return f_->num.str();
  mpz_class l = 1;
  for (const ParamPoly* p : {&f_->num, &f_->den})
    for (auto& [m, c] : p->terms()) {
      mpz_class d = c.re.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      d = c.im.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  Gauss lg{mpq_class(l)};
  ParamPoly n = f_->num.scaled(lg), d = f_->den.scaled(lg);
  std::string ns = n.str(), ds = d.str();
  bool n_simple = n.terms().size() == 1 && (n.terms().begin()->second.is_real() || sgn(n.terms().begin()->second.re) == 0);
  if (!n_simple) ns = "(" + ns + ")";
  bool d_simple = d.terms().size() == 1 && d.terms().begin()->second.is_one() && d.terms().begin()->first.size() == 1;
  if (!d_simple) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar evaluate(const ParamPoly& p, const Assignment& assignment, bool strict) {
  Scalar total;
  for (auto& [m, c] : p.terms()) {
    Scalar t(c);
    for (auto& [v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        if (strict) throw Error(ErrorKind::UnboundSymbol, v);
        t *= Scalar::symbol(v).pow(e);
      } else {
        t *= it->second.pow(e);
      }
    }
    total += t;
  }
  return total;
}

namespace {

Scalar bind_impl(const Scalar& s, const Assignment& assignment, bool strict) {
  if (s.is_constant()) return s;
  Scalar n = evaluate(s.numerator(), assignment, strict);
  Scalar d = evaluate(s.denominator(), assignment, strict);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtAssignment, s.str());
  return n / d;
}

}  // namespace

Scalar bind_params(const Scalar& s, const Assignment& assignment) { return bind_impl(s, assignment, true); }
Scalar substitute(const Scalar& s, const Assignment& assignment) { return bind_impl(s, assignment, false); }

// ---- parsing ----

namespace detail {

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Number, text.substr(start, i - start), start});
    } else if (isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() && (isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Token::Ident, text.substr(start, i - start), start});
    } else {
      std::string two = text.substr(i, 2);
      if (two == "==" || two == "!=" || two == "<=" || two == ">=") {
        out.push_back({Token::Punct, two, start});
        i += 2;
      } else if (std::string("+-*/^(),{}<>=").find(ch) != std::string::npos) {
        out.push_back({Token::Punct, std::string(1, ch), start});
        ++i;
      } else {
        throw Error(ErrorKind::ParseError, "unexpected character '" + std::string(1, ch) + "' at " +
                                               std::to_string(start) + " in \"" + text + "\"");
      }
    }
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

const Token& ExprParser::peek(size_t ahead) const {
  size_t p = std::min(pos_ + ahead, toks_.size() - 1);
  return toks_[p];
}

bool ExprParser::accept(const std::string& punct) {
  if (peek().type == Token::Punct && peek().text == punct) {
    ++pos_;
    return true;
  }
  return false;
}

void ExprParser::expect(const std::string& punct) {
  if (!accept(punct)) fail("expected '" + punct + "'");
}

void ExprParser::fail(const std::string& msg) const {
  throw Error(ErrorKind::ParseError, msg + " at " + std::to_string(peek().pos) + " in \"" + src_ + "\"");
}

Scalar ExprParser::parse_expr() {
  Scalar v = parse_term();
  for (;;) {
    if (accept("+"))
      v += parse_term();
    else if (accept("-"))
      v -= parse_term();
    else
      return v;
  }
}

Scalar ExprParser::parse_term() {
  Scalar v = parse_unary();
  for (;;) {
    if (accept("*"))
      v *= parse_unary();
    else if (accept("/"))
      v /= parse_unary();
    else
      return v;
  }
}

Scalar ExprParser::parse_unary() {
  if (accept("-")) return -parse_unary();
  if (accept("+")) return parse_unary();
  return parse_power();
}

Scalar ExprParser::parse_power() {
  Scalar base = parse_atom();
  if (accept("^")) {
    bool neg = accept("-");
    if (peek().type != Token::Number) fail("expected integer exponent");
    long e = std::stol(peek().text);
    ++pos_;
    return base.pow(neg ? -e : e);
  }
  return base;
}

Scalar ExprParser::parse_atom() {
  const Token& t = peek();
  if (t.type == Token::Number) {
    ++pos_;
    return Scalar(mpq_class(mpz_class(t.text)));
  }
  if (t.type == Token::Ident) {
    ++pos_;
    return Scalar::symbol(t.text);
  }
  if (accept("(")) {
    Scalar v = parse_expr();
    expect(")");
    return v;
  }
  fail(t.type == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
}

}  // namespace detail

Scalar parse_scalar(const std::string& text) {
  detail::ExprParser p(text, detail::tokenize(text));
  Scalar v = p.parse_expr();
  if (!p.at_end()) p.fail("trailing input");
  return v;
}

}  // namespace solvspec
