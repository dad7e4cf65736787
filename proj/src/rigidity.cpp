#include "solvspec/rigidity.hpp"

#include <algorithm>
#include <regex>

#include "solvspec/spectra.hpp"

namespace solvspec {

namespace {

bool scalar_less(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), scalar_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

FactoredSpectrum substitute_spectrum(const FactoredSpectrum& fs, const Assignment& a) {
  std::vector<FactoredSpectrum::Entry> out;
  for (auto& [form, mult] : fs.entries()) {
    Vec c;
    for (auto& s : form.coeffs()) c.push_back(substitute(s, a));
    out.emplace_back(LinearForm(c), mult);
  }
  return FactoredSpectrum(fs.nvars(), out);
}

Matrix substitute_matrix(const Matrix& m, const Assignment& a) { return substitute(m, a); }

// Values of `var` at which p vanishes identically in the remaining symbols.
std::vector<Scalar> vanishing_values(const ParamPoly& p, const std::string& var) {
  if (p.is_zero() || !p.symbols().count(var)) return {};
  std::map<Monomial, std::map<unsigned, Gauss>> groups;
  for (auto& [mono, c] : p.terms()) {
    Monomial rest;
    unsigned d = 0;
    for (auto& [s, e] : mono)
      if (s == var)
        d = e;
      else
        rest.emplace_back(s, e);
    groups[rest][d] = c;
  }
  MultiPoly g;
  bool first = true;
  for (auto& [rest, coeffs] : groups) {
    std::vector<Scalar> low(coeffs.rbegin()->first + 1);
    for (auto& [d, c] : coeffs) low[d] = Scalar(c);
    MultiPoly u = univariate(low);
    g = first ? u : univariate_gcd(g, u);
    first = false;
  }
  if (g.total_degree() == 0) return {};
  auto roots = gaussian_roots(g, false);
  sort_unique(roots);
  return roots;
}

std::vector<Scalar> scalar_special_values(const Scalar& s, const std::string& var) {
  std::vector<Scalar> out;
  if (s.is_constant()) return out;
  for (auto& r : vanishing_values(s.numerator(), var)) out.push_back(r);
  for (auto& r : vanishing_values(s.denominator(), var)) out.push_back(r);
  return out;
}

std::vector<Scalar> pole_values(const Scalar& s, const std::string& var) {
  if (s.is_constant()) return {};
  return vanishing_values(s.denominator(), var);
}

// Simple one-sided inequality such as "b >= 0"; anything else leaves the set unfiltered.
std::vector<Scalar> restrict_to_domain(const std::vector<Scalar>& vals, const std::string& param,
                                       const std::map<std::string, std::string>& domain, std::vector<std::string>& notes) {
  auto it = domain.find(param);
  if (it == domain.end()) return vals;
  static const std::regex re(R"(^\s*([A-Za-z]\w*)\s*(>=|<=|>|<)\s*(\S+)\s*$)");
  std::smatch m;
  if (!std::regex_match(it->second, m, re) || m[1] != param) return vals;
  Scalar bound = parse_scalar(m[3]);
  std::string op = m[2];
  std::vector<Scalar> out;
  for (auto& v : vals) {
    if (!v.is_rational()) continue;
    int c = compare(v, bound);
    bool keep = op == ">=" ? c >= 0 : op == ">" ? c > 0 : op == "<=" ? c <= 0 : c < 0;
    if (keep) out.push_back(v);
  }
  if (out.size() != vals.size()) notes.push_back("excluded values restricted to the domain " + it->second);
  return out;
}

struct TripleAnalysis {
  bool distinct = false, injective = false;
  std::vector<Scalar> excluded;
};

TripleAnalysis analyse_triple(const std::vector<Scalar>& c, const std::string& param) {
  TripleAnalysis t;
  t.distinct = true;
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) t.distinct = false;
    auto sv = scalar_special_values(c[j], param);
    t.excluded.insert(t.excluded.end(), sv.begin(), sv.end());
    for (size_t k = j + 1; k < c.size(); ++k) {
      Scalar d = c[j] - c[k];
      if (d.is_zero()) t.distinct = false;
      auto dv = scalar_special_values(d, param);
      t.excluded.insert(t.excluded.end(), dv.begin(), dv.end());
    }
  }
  sort_unique(t.excluded);
  Scalar b = Scalar::symbol(param), bp = Scalar::symbol(primed(param));
  Assignment to_primed{{param, bp}};
  std::vector<ParamPoly> quotients;
  for (size_t k = 1; k < c.size(); ++k) {
    Scalar d = c[0] * substitute(c[k], to_primed) - substitute(c[0], to_primed) * c[k];
    quotients.push_back((d / (b - bp)).numerator());
  }
  ParamPoly g;
  for (auto& q : quotients) g = g.is_zero() ? q : q.is_zero() ? g : gcd(g, q);
  t.injective = !g.is_zero() && g.is_constant();
  return t;
}

Assignment witness_primed_map(const ParamFamily& fam, const Witness& w, Assignment& values) {
  Assignment primed_subst;
  for (auto& p : fam.entry->algebra.params()) {
    auto it = w.p_prime.find(p);
    Scalar expr = it == w.p_prime.end() ? Scalar::symbol(p) : parse_scalar(it->second);
    values[p] = expr;
    if (expr != Scalar::symbol(primed(p))) primed_subst[primed(p)] = expr;
  }
  return primed_subst;
}

}  // namespace

const char* verdict_name(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::Rigid: return "rigid";
    case RigidityVerdict::NotRigid: return "not-rigid";
    default: return "inconclusive";
  }
}

const char* family_class_name(FamilyClass c) {
  switch (c) {
    case FamilyClass::ContinuumRigid: return "continuum-rigid";
    case FamilyClass::SingleClass: return "single-class";
    case FamilyClass::TwoClass: return "two-class";
    default: return "orbit-continuum";
  }
}

ParamFamily make_family(const CatalogEntry& e) { return ParamFamily{&e, entry_spectrum(e)}; }

RigidityReport rigidity_check(const ParamFamily& fam, size_t i0, const std::vector<Scalar>& triple) {
  RigidityReport r;
  r.i0 = i0;
  const auto& params = fam.entry->algebra.params();
  if (params.size() != 1) {
    r.notes.push_back("criterion needs exactly one parameter");
    return r;
  }
  r.param = params[0];
  std::vector<Scalar> single, any;
  for (auto& [form, mult] : fam.symbolic.entries()) {
    if (!form.is_monic() || form[i0].is_zero()) continue;
    any.push_back(form[i0]);
    bool only = true;
    for (size_t v = 1; v < form.nvars(); ++v)
      if (v != i0 && !form[v].is_zero()) only = false;
    if (only) single.push_back(form[i0]);
  }
  auto contains = [](const std::vector<Scalar>& v, const Scalar& s) { return std::find(v.begin(), v.end(), s) != v.end(); };

  std::vector<Scalar> chosen = triple;
  TripleAnalysis ta;
  if (chosen.empty()) {
    bool found = false;
    for (size_t a = 0; a < single.size(); ++a)
      for (size_t b = a + 1; b < single.size(); ++b)
        for (size_t c = b + 1; c < single.size(); ++c) {
          std::vector<Scalar> cand{single[a], single[b], single[c]};
          TripleAnalysis t = analyse_triple(cand, r.param);
          if (!t.distinct || !t.injective) continue;
          if (!found || t.excluded.size() < ta.excluded.size()) chosen = cand, ta = t, found = true;
        }
    if (!found) {
      r.notes.push_back("fewer than three usable factors of the form z0 + c(" + r.param + ") z" + std::to_string(i0));
      r.shape = single.size() >= 3;
      r.single_var = r.shape;
      return r;
    }
  } else {
    ta = analyse_triple(chosen, r.param);
  }
  r.triple = chosen;
  r.shape = std::all_of(chosen.begin(), chosen.end(), [&](const Scalar& s) { return contains(any, s); });
  r.single_var = std::all_of(chosen.begin(), chosen.end(), [&](const Scalar& s) { return contains(single, s); });
  r.distinct = ta.distinct;
  r.injective = ta.injective;
  r.excluded = restrict_to_domain(ta.excluded, r.param, fam.entry->domain, r.notes);
  if (r.shape && r.single_var && r.distinct && r.injective) r.verdict = RigidityVerdict::Rigid;
  return r;
}

RigidityReport rigidity_check(const ParamFamily& fam) {
  const CatalogEntry& e = *fam.entry;
  RigidityReport r;
  if (e.rigidity) {
    r = rigidity_check(fam, e.rigidity->i0, e.rigidity->triple);
  } else {
    unsigned m = (e.heis_dim - 1) / 2;
    for (size_t i0 = 2 * m + 2; i0 <= e.algebra.dim(); ++i0) {
      RigidityReport t = rigidity_check(fam, i0);
      if (i0 == 2 * m + 2 || t.verdict == RigidityVerdict::Rigid) r = t;
      if (t.verdict == RigidityVerdict::Rigid) break;
    }
  }
  if (r.verdict == RigidityVerdict::Rigid) return r;
  for (size_t i = 0; i < e.witnesses.size(); ++i)
    if (verify_witness_symbolic(fam, e.witnesses[i])) {
      r.verdict = RigidityVerdict::NotRigid;
      r.witness = i;
      break;
    }
  return r;
}

bool verify_nonrigidity_witness(const ParamFamily& fam, const Assignment& p, const Assignment& p_prime, const Matrix& b) {
  const CatalogEntry& e = *fam.entry;
  Assignment all;
  for (auto& name : e.algebra.params()) {
    all[name] = p.at(name);
    all[primed(name)] = p_prime.at(name);
  }
  Matrix bb = bind_params(b, all);
  FactoredSpectrum q = factor_spectrum(instantiate(e, p)), q_prime = factor_spectrum(instantiate(e, p_prime));
  return apply_change(q_prime, bb) == q;
}

bool verify_witness_symbolic(const ParamFamily& fam, const Witness& w) {
  Assignment values;
  Assignment primed_subst = witness_primed_map(fam, w, values);
  Matrix b = substitute_matrix(w.b, primed_subst);
  FactoredSpectrum q_prime = substitute_spectrum(fam.symbolic, values);
  try {
    return apply_change(q_prime, b) == fam.symbolic;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::SingularB) return false;
    throw;
  }
}

std::map<std::string, std::vector<Scalar>> witness_singular_locus(const ParamFamily& fam, const Witness& w) {
  Assignment values;
  Matrix b = substitute_matrix(w.b, witness_primed_map(fam, w, values));
  Scalar det = determinant(b);
  std::map<std::string, std::vector<Scalar>> out;
  for (auto& p : fam.entry->algebra.params())
    for (const std::string& sym : {p, primed(p)}) {
      auto& list = out[p];
      auto dv = scalar_special_values(det, sym);
      list.insert(list.end(), dv.begin(), dv.end());
      for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
          auto pv = pole_values(b(i, j), sym);
          list.insert(list.end(), pv.begin(), pv.end());
        }
      for (auto& [name, expr] : values) {
        auto pv = pole_values(expr, sym);
        list.insert(list.end(), pv.begin(), pv.end());
      }
    }
  for (auto it = out.begin(); it != out.end();) {
    sort_unique(it->second);
    it = it->second.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

Scalar mobius(const Scalar& c) {
  Scalar den = c * 3 + 1;
  if (den.is_zero()) throw Error(ErrorKind::PoleAtAssignment, "c = -1/3 is the pole of (1 - c)/(3c + 1)");
  return (Scalar(1) - c) / den;
}

MobiusOrbit mobius_classify(const Scalar& c) {
  Scalar image = mobius(c);
  if (mobius(image) != c) throw Error(ErrorKind::VerificationFailed, "Moebius map is not an involution at " + c.str());
  MobiusOrbit o;
  o.fixed = image == c;
  o.orbit = o.fixed ? std::vector<Scalar>{c} : std::vector<Scalar>{c, image};
  sort_unique(o.orbit);
  return o;
}

std::vector<Scalar> mobius_fixed_points() {
  Scalar c = Scalar::symbol("c");
  return vanishing_values((mobius(c) - c).numerator(), "c");
}

Classification classify_family(const ParamFamily& fam) {
  const CatalogEntry& e = *fam.entry;
  Classification out;
  RigidityReport r = rigidity_check(fam);
  if (r.verdict == RigidityVerdict::Rigid) {
    out.kind = FamilyClass::ContinuumRigid;
    std::string ex;
    for (auto& v : r.excluded) ex += (ex.empty() ? "" : ", ") + v.str();
    out.certificates.push_back("injective coefficient map on z" + std::to_string(r.i0) + " off {" + ex + "}");
    return out;
  }
  if (e.witnesses.empty()) throw Error(ErrorKind::Inconclusive, e.family + ": no rigidity proof and no witnesses");

  std::map<std::string, std::vector<Scalar>> locus;
  std::set<std::string> redundant;
  std::vector<std::string> involutions;
  for (auto& w : e.witnesses) {
    if (!verify_witness_symbolic(fam, w))
      throw Error(ErrorKind::VerificationFailed, e.family + ": " + w.kind + " witness fails symbolically");
    out.certificates.push_back(w.kind + " witness verified over the parameter field");
    for (auto& [p, q] : w.pairs) {
      if (!verify_nonrigidity_witness(fam, p, q, w.b))
        throw Error(ErrorKind::VerificationFailed, e.family + ": " + w.kind + " witness fails at " + assignment_string(p));
      out.certificates.push_back(w.kind + " witness verified at " + assignment_string(p) + " -> " + assignment_string(q));
    }
    bool frees = false;
    for (auto& p : e.algebra.params()) {
      auto it = w.p_prime.find(p);
      if (it == w.p_prime.end()) continue;
      Scalar expr = parse_scalar(it->second);
      if (expr == Scalar::symbol(primed(p))) {
        redundant.insert(p);
        frees = true;
      } else if (expr != Scalar::symbol(p)) {
        involutions.push_back(p + " -> " + expr.str());
      }
    }
    if (frees)
      for (auto& [p, vals] : witness_singular_locus(fam, w)) locus[p].insert(locus[p].end(), vals.begin(), vals.end());
  }
  out.redundant.assign(redundant.begin(), redundant.end());
  if (!involutions.empty()) {
    out.kind = FamilyClass::OrbitContinuum;
    for (auto& s : involutions) out.orbit_map += (out.orbit_map.empty() ? "" : "; ") + s;
    return out;
  }
  if (redundant.size() != e.algebra.params().size())
    throw Error(ErrorKind::Inconclusive, e.family + ": witnesses leave a parameter unaccounted for");

  Assignment generic = e.witnesses.front().pairs.empty() ? Assignment{} : e.witnesses.front().pairs.front().first;
  FactoredSpectrum q_generic = factor_spectrum(instantiate(e, generic));
  std::vector<Assignment> apart;
  for (auto& [p, vals] : locus) {
    sort_unique(vals);
    for (auto& v : vals) {
      Assignment s = generic;
      s[p] = v;
      auto cov = se_equivalent(factor_spectrum(instantiate(e, s)), q_generic);
      if (cov) {
        out.certificates.push_back("special value " + assignment_string(s) + " is equivalent to " +
                                   assignment_string(generic) + " via B = " + cov->b.str());
      } else {
        out.certificates.push_back("special value " + assignment_string(s) + " refuted against " +
                                   assignment_string(generic) + " by exhaustive search");
        apart.push_back(s);
        out.distinguished[p].push_back(v);
      }
    }
  }
  if (apart.empty()) {
    out.kind = FamilyClass::SingleClass;
    return out;
  }
  for (size_t i = 1; i < apart.size(); ++i)
    if (!se_equivalent(factor_spectrum(instantiate(e, apart[0])), factor_spectrum(instantiate(e, apart[i]))))
      throw Error(ErrorKind::Inconclusive, e.family + ": more than two classes among special values");
  out.kind = FamilyClass::TwoClass;
  return out;
}

}  // namespace solvspec
