#include "solvspec/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "expr_parser.hpp"
#include "solvspec/io.hpp"
#include "solvspec/spectra.hpp"

namespace solvspec {

using nlohmann::json;

struct Guard::Node {
  enum Kind { Or, And, Not, Eq, Ne, In, NotIn } kind;
  std::vector<std::shared_ptr<const Node>> kids;
  std::vector<Scalar> lhs;
  std::vector<std::vector<Scalar>> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Guard::Node>;
using detail::ExprParser;
using detail::Token;

bool is_keyword(const Token& t, const char* kw) { return t.type == Token::Ident && t.text == kw; }

class GuardParser {
 public:
  explicit GuardParser(const std::string& text) : p_(text, detail::tokenize(text)) {}

  NodePtr parse() {
    NodePtr n = parse_or();
    if (!p_.at_end()) p_.fail("trailing input in guard");
    return n;
  }

 private:
  NodePtr parse_or() {
    auto n = std::make_shared<Guard::Node>();
    n->kind = Guard::Node::Or;
    n->kids.push_back(parse_and());
    while (is_keyword(p_.peek(), "or")) {
      p_.reset(p_.position() + 1);
      n->kids.push_back(parse_and());
    }
    return n->kids.size() == 1 ? n->kids[0] : n;
  }

  NodePtr parse_and() {
    auto n = std::make_shared<Guard::Node>();
    n->kind = Guard::Node::And;
    n->kids.push_back(parse_not());
    while (is_keyword(p_.peek(), "and")) {
      p_.reset(p_.position() + 1);
      n->kids.push_back(parse_not());
    }
    return n->kids.size() == 1 ? n->kids[0] : n;
  }

  NodePtr parse_not() {
    if (is_keyword(p_.peek(), "not")) {
      p_.reset(p_.position() + 1);
      auto n = std::make_shared<Guard::Node>();
      n->kind = Guard::Node::Not;
      n->kids.push_back(parse_not());
      return n;
    }
    size_t save = p_.position();
    try {
      return parse_comparison();
    } catch (const Error&) {
      p_.reset(save);
    }
    p_.expect("(");
    NodePtr inner = parse_or();
    p_.expect(")");
    return inner;
  }

  std::vector<Scalar> parse_value() {
    size_t save = p_.position();
    if (p_.accept("(")) {
      try {
        std::vector<Scalar> items{p_.parse_expr()};
        if (p_.accept(",")) {
          do items.push_back(p_.parse_expr());
          while (p_.accept(","));
          p_.expect(")");
          return items;
        }
      } catch (const Error&) {
      }
      p_.reset(save);
    }
    return {p_.parse_expr()};
  }

  NodePtr parse_comparison() {
    auto n = std::make_shared<Guard::Node>();
    n->lhs = parse_value();
    if (p_.accept("==")) {
      n->kind = Guard::Node::Eq;
      n->rhs.push_back(parse_value());
    } else if (p_.accept("!=")) {
      n->kind = Guard::Node::Ne;
      n->rhs.push_back(parse_value());
    } else if (is_keyword(p_.peek(), "in") || is_keyword(p_.peek(), "notin")) {
      n->kind = p_.peek().text == "in" ? Guard::Node::In : Guard::Node::NotIn;
      p_.reset(p_.position() + 1);
      p_.expect("{");
      do n->rhs.push_back(parse_value());
      while (p_.accept(","));
      p_.expect("}");
    } else {
      p_.fail("expected comparison operator");
    }
    for (auto& r : n->rhs)
      if (r.size() != n->lhs.size()) p_.fail("tuple arity mismatch");
    return n;
  }

  ExprParser p_;
};

std::vector<Scalar> bind_all(const std::vector<Scalar>& v, const Assignment& a) {
  std::vector<Scalar> out;
  for (auto& s : v) out.push_back(bind_params(s, a));
  return out;
}

bool eval(const Guard::Node& n, const Assignment& a) {
  switch (n.kind) {
    case Guard::Node::Or:
      for (auto& k : n.kids)
        if (eval(*k, a)) return true;
      return false;
    case Guard::Node::And:
      for (auto& k : n.kids)
        if (!eval(*k, a)) return false;
      return true;
    case Guard::Node::Not:
      return !eval(*n.kids[0], a);
    default:
      break;
  }
  std::vector<Scalar> lhs = bind_all(n.lhs, a);
  bool member = false;
  for (auto& r : n.rhs)
    if (bind_all(r, a) == lhs) member = true;
  return (n.kind == Guard::Node::Eq || n.kind == Guard::Node::In) ? member : !member;
}

}  // namespace

Guard Guard::parse(const std::string& text) {
  Guard g;
  g.text_ = text;
  if (text == "otherwise") {
    g.otherwise_ = true;
    return g;
  }
  g.root_ = GuardParser(text).parse();
  return g;
}

bool Guard::holds(const Assignment& a) const { return otherwise_ || eval(*root_, a); }

std::string primed(const std::string& param) { return param + "_p"; }

std::string default_catalog_path() {
  if (const char* env = std::getenv("SOLVSPEC_CATALOG")) return env;
  return std::string(SOLVSPEC_DATA_DIR) + "/catalog.json";
}

namespace {

Assignment read_assignment(const json& j, const std::string& ptr) {
  if (!j.is_object()) schema_error(ptr, "expected an object of parameter values");
  Assignment a;
  for (auto& [k, v] : j.items()) {
    if (!v.is_string()) schema_error(ptr + "/" + k, "expected a scalar string");
    try {
      a[k] = parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      schema_error(ptr + "/" + k, e.what());
    }
  }
  return a;
}

json write_assignment(const Assignment& a) {
  json j = json::object();
  for (auto& [k, v] : a) j[k] = v.str();
  return j;
}

void parse_case(const std::string& family, unsigned& heis, unsigned& ext) {
  if (std::sscanf(family.c_str(), "s_{%u,%u}", &heis, &ext) != 2)
    throw Error(ErrorKind::SchemaError, "family id must look like s_{5,1}^{1,1}: " + family);
}

}  // namespace

CatalogEntry entry_from_json(const json& e, const std::string& ptr) {
  CatalogEntry c;
  if (!e.is_object()) schema_error(ptr, "expected an object");
  if (!e.contains("family") || !e["family"].is_string()) schema_error(ptr + "/family", "expected a string");
  c.family = e["family"].get<std::string>();
  parse_case(c.family, c.heis_dim, c.ext_dim);
  c.algebra = algebra_from_json(e, ptr);
  c.algebra.set_provenance(c.family);
  if (!c.algebra.nilradical()) schema_error(ptr + "/nilradical", "catalog entries must declare a nilradical");
  if (!e.contains("expected_Q") || !e["expected_Q"].is_string()) schema_error(ptr + "/expected_Q", "expected a string");
  c.expected_Q = e["expected_Q"].get<std::string>();
  try {
    parse_spectrum(c.expected_Q, c.algebra.dim() + 1);
  } catch (const Error& err) {
    schema_error(ptr + "/expected_Q", err.what());
  }
  if (!e.contains("expected_k") || !e["expected_k"].is_array() || e["expected_k"].empty())
    schema_error(ptr + "/expected_k", "expected a non-empty array");
  for (size_t i = 0; i < e["expected_k"].size(); ++i) {
    const json& b = e["expected_k"][i];
    std::string bp = ptr + "/expected_k/" + std::to_string(i);
    if (!b.contains("when") || !b["when"].is_string()) schema_error(bp + "/when", "expected a string");
    if (!b.contains("k") || !b["k"].is_number_unsigned()) schema_error(bp + "/k", "expected a positive integer");
    KBranch br;
    try {
      br.when = Guard::parse(b["when"].get<std::string>());
    } catch (const Error& err) {
      schema_error(bp + "/when", err.what());
    }
    br.k = b["k"].get<unsigned>();
    c.expected_k.push_back(br);
  }
  if (!c.expected_k.back().when.is_otherwise()) schema_error(ptr + "/expected_k", "last branch must be \"otherwise\"");
  if (e.contains("domain"))
    for (auto& [k, v] : e["domain"].items()) c.domain[k] = v.get<std::string>();
  if (e.contains("special"))
    for (auto& [k, v] : e["special"].items())
      for (size_t i = 0; i < v.size(); ++i) c.special[k].push_back(parse_scalar(v[i].get<std::string>()));
  if (e.contains("samples"))
    for (size_t i = 0; i < e["samples"].size(); ++i)
      c.samples.push_back(read_assignment(e["samples"][i], ptr + "/samples/" + std::to_string(i)));
  if (e.contains("witnesses")) {
    size_t n = c.algebra.dim();
    for (size_t i = 0; i < e["witnesses"].size(); ++i) {
      const json& w = e["witnesses"][i];
      std::string wp = ptr + "/witnesses/" + std::to_string(i);
      Witness wit;
      wit.kind = w.value("kind", "");
      for (auto& [k, v] : w.at("p_prime").items()) wit.p_prime[k] = v.get<std::string>();
      wit.b = Matrix::identity(n);
      for (size_t t = 0; t < w.at("B").size(); ++t) {
        const json& ent = w["B"][t];
        size_t r = ent.at("row").get<size_t>(), col = ent.at("col").get<size_t>();
        if (r < 1 || r > n || col < 1 || col > n) schema_error(wp + "/B/" + std::to_string(t), "z index out of range");
        wit.b(r - 1, col - 1) = parse_scalar(ent.at("value").get<std::string>());
      }
      if (w.contains("pairs"))
        for (size_t t = 0; t < w["pairs"].size(); ++t) {
          std::string pp = wp + "/pairs/" + std::to_string(t);
          wit.pairs.emplace_back(read_assignment(w["pairs"][t].at("p"), pp + "/p"),
                                 read_assignment(w["pairs"][t].at("p_prime"), pp + "/p_prime"));
        }
      c.witnesses.push_back(wit);
    }
  }
  if (e.contains("rigidity")) {
    const json& r = e["rigidity"];
    RigidityHint h;
    h.i0 = r.at("i0").get<size_t>();
    if (h.i0 < 1 || h.i0 > c.algebra.dim()) schema_error(ptr + "/rigidity/i0", "z index out of range");
    for (auto& t : r.at("triple")) h.triple.push_back(parse_scalar(t.get<std::string>()));
    c.rigidity = h;
  }
  return c;
}

json entry_to_json(const CatalogEntry& c) {
  json j = algebra_to_json(c.algebra);
  j["family"] = c.family;
  j["expected_Q"] = c.expected_Q;
  json ks = json::array();
  for (auto& b : c.expected_k) ks.push_back({{"when", b.when.text()}, {"k", b.k}});
  j["expected_k"] = ks;
  if (!c.domain.empty()) j["domain"] = c.domain;
  if (!c.special.empty()) {
    json sp = json::object();
    for (auto& [k, v] : c.special) {
      json arr = json::array();
      for (auto& s : v) arr.push_back(s.str());
      sp[k] = arr;
    }
    j["special"] = sp;
  }
  json samples = json::array();
  for (auto& s : c.samples) samples.push_back(write_assignment(s));
  j["samples"] = samples;
  if (!c.witnesses.empty()) {
    json ws = json::array();
    for (auto& w : c.witnesses) {
      json wj;
      wj["kind"] = w.kind;
      wj["p_prime"] = w.p_prime;
      json bj = json::array();
      for (size_t r = 0; r < w.b.rows(); ++r)
        for (size_t col = 0; col < w.b.cols(); ++col)
          if (w.b(r, col) != (r == col ? Scalar(1) : Scalar(0)))
            bj.push_back({{"row", r + 1}, {"col", col + 1}, {"value", w.b(r, col).str()}});
      wj["B"] = bj;
      json pairs = json::array();
      for (auto& [p, q] : w.pairs) pairs.push_back({{"p", write_assignment(p)}, {"p_prime", write_assignment(q)}});
      wj["pairs"] = pairs;
      ws.push_back(wj);
    }
    j["witnesses"] = ws;
  }
  if (c.rigidity) {
    json t = json::array();
    for (auto& s : c.rigidity->triple) t.push_back(s.str());
    j["rigidity"] = {{"i0", c.rigidity->i0}, {"triple", t}};
  }
  return j;
}

std::vector<CatalogEntry> parse_catalog(const json& doc) {
  if (!doc.is_object() || !doc.contains("families") || !doc["families"].is_array())
    schema_error("/families", "expected an array of families");
  std::vector<CatalogEntry> out;
  for (size_t i = 0; i < doc["families"].size(); ++i)
    out.push_back(entry_from_json(doc["families"][i], "/families/" + std::to_string(i)));
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::string p = path.empty() ? default_catalog_path() : path;
  std::ifstream in(p);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open catalog " + p);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, p + ": " + e.what());
  }
  return parse_catalog(doc);
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& cat, const std::string& family) {
  for (auto& e : cat)
    if (e.family == family) return e;
  throw Error(ErrorKind::UnknownFamily, family);
}

std::vector<const CatalogEntry*> entries_for_case(const std::vector<CatalogEntry>& cat, unsigned heis_dim,
                                                  unsigned ext_dim) {
  std::vector<const CatalogEntry*> out;
  for (auto& e : cat)
    if (e.heis_dim == heis_dim && e.ext_dim == ext_dim) out.push_back(&e);
  return out;
}

LieAlgebra instantiate(const CatalogEntry& e, const Assignment& params) {
  for (auto& p : e.algebra.params())
    if (!params.count(p)) throw Error(ErrorKind::UnboundSymbol, "parameter " + p + " of " + e.family + " is unbound");
  Assignment used;
  for (auto& p : e.algebra.params()) used[p] = params.at(p);
  LieAlgebra l = e.algebra.bind(used);
  l.set_provenance(e.family + (used.empty() ? "" : " @ " + assignment_string(used)));
  return l;
}

const KBranch& expected_branch(const CatalogEntry& e, const Assignment& params) {
  for (auto& b : e.expected_k)
    if (b.when.holds(params)) return b;
  throw Error(ErrorKind::Inconclusive, "no k branch matches");
}

FactoredSpectrum expected_spectrum(const CatalogEntry& e) { return parse_spectrum(e.expected_Q, e.algebra.dim() + 1); }

FactoredSpectrum entry_spectrum(const CatalogEntry& e) {
  SamplePlan plan;
  plan.skip = e.special;
  return symbolic_spectrum(e.algebra, plan);
}

std::string assignment_string(const Assignment& a) {
  std::string s;
  for (auto& [k, v] : a) s += (s.empty() ? "" : ",") + k + "=" + v.str();
  return s;
}

VerifyReport verify_entry(const CatalogEntry& e, const std::vector<Assignment>& samples) {
  VerifyReport rep;
  auto note = [&](bool ok, const std::string& line) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  };
  FactoredSpectrum expected = expected_spectrum(e);
  try {
    FactoredSpectrum got = entry_spectrum(e);
    note(got == expected, e.family + " Q = " + canonical_string(got));
  } catch (const Error& err) {
    note(false, e.family + " symbolic Q: " + err.what());
  }
  const auto& pts = samples.empty() ? e.samples : samples;
  for (auto& s : pts) {
    std::string at = e.family + " @ " + assignment_string(s);
    try {
      LieAlgebra l = instantiate(e, s);
      FactoredSpectrum fs = factor_spectrum(l);
      FactoredSpectrum want = expected.bind(s);
      unsigned k_want = expected_branch(e, s).k;
      note(fs == want, at + " Q = " + canonical_string(fs));
      note(fs.k() == k_want, at + " k = " + std::to_string(fs.k()) + " (table " + std::to_string(k_want) + ")");
    } catch (const Error& err) {
      note(false, at + ": " + err.what());
    }
  }
  return rep;
}

}  // namespace solvspec
