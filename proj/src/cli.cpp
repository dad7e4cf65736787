#include "solvspec/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "solvspec/bounds.hpp"
#include "solvspec/equiv.hpp"
#include "solvspec/io.hpp"
#include "solvspec/rigidity.hpp"
#include "solvspec/spectra.hpp"

namespace solvspec {

using nlohmann::json;

namespace {

enum class Format { Text, Json, Tsv };

struct Input {
  std::string label;
  LieAlgebra algebra;
  const CatalogEntry* entry = nullptr;
  bool symbolic = false;  // parameters left unbound
};

struct Options {
  std::vector<std::string> families, algebras, bindings, matrices;
  std::string positional, catalog_path, format = "text";
  bool verify = false;
};

Assignment parse_bindings(const std::vector<std::string>& items) {
  Assignment a;
  for (auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::UsageError, "binding must look like name=value: " + item);
    a[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    if (opt.format == "json")
      format_ = Format::Json;
    else if (opt.format == "tsv")
      format_ = Format::Tsv;
    globals_ = parse_bindings(opt.bindings);
  }

  const std::vector<CatalogEntry>& catalog() {
    if (!catalog_loaded_) {
      catalog_ = load_catalog(opt_.catalog_path);
      catalog_loaded_ = true;
    }
    return catalog_;
  }

  std::vector<Input> inputs(bool allow_positional_family) {
    std::vector<Input> in;
    std::vector<std::string> fams = opt_.families;
    if (allow_positional_family && !opt_.positional.empty()) fams.insert(fams.begin(), opt_.positional);
    for (auto& f : fams) in.push_back(family_input(f));
    for (auto& path : opt_.algebras) in.push_back(file_input(path));
    if (in.empty()) throw Error(ErrorKind::UsageError, "no input: pass --family ID or --algebra FILE");
    return in;
  }

  Format format() const { return format_; }
  std::ostream& out() { return out_; }

 private:
  Input family_input(const std::string& spec) {
    auto at = spec.find('@');
    std::string id = spec.substr(0, at);
    Assignment a = globals_;
    if (at != std::string::npos)
      for (auto& [k, v] : parse_bindings(split(spec.substr(at + 1), ','))) a[k] = v;
    const CatalogEntry& e = find_entry(catalog(), id);
    Input in;
    in.entry = &e;
    bool all = true, any = false;
    for (auto& p : e.algebra.params()) {
      if (a.count(p))
        any = true;
      else
        all = false;
    }
    if (all) {
      in.algebra = instantiate(e, a);
    } else if (!any) {
      in.algebra = e.algebra;
      in.symbolic = true;
    } else {
      in.algebra = instantiate(e, a);  // throws UnboundSymbol naming the missing parameter
    }
    in.label = in.algebra.provenance().empty() ? id : in.algebra.provenance();
    return in;
  }

  Input file_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::UsageError, "cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    Input in;
    in.label = path;
    try {
      in.algebra = algebra_from_text(buf.str());
    } catch (const Error& e) {
      std::string msg = e.what();
      throw Error(e.kind(), path + ": " + msg.substr(msg.find(": ") + 2));
    }
    Assignment used;
    for (auto& p : in.algebra.params())
      if (globals_.count(p)) used[p] = globals_.at(p);
    if (!in.algebra.params().empty()) {
      if (used.size() == in.algebra.params().size())
        in.algebra = in.algebra.bind(used);
      else if (used.empty())
        in.symbolic = true;
      else
        in.algebra = in.algebra.bind(used);
    }
    return in;
  }

  const Options& opt_;
  std::ostream& out_;
  Format format_ = Format::Text;
  Assignment globals_;
  std::vector<CatalogEntry> catalog_;
  bool catalog_loaded_ = false;
};

void require_concrete(const Input& in) {
  if (in.symbolic) {
    std::string ps;
    for (auto& p : in.algebra.params()) ps += (ps.empty() ? "" : ", ") + p;
    throw Error(ErrorKind::UnboundSymbol, in.label + ": bind parameters " + ps + " with -p name=value");
  }
}

FactoredSpectrum spectrum_of(const Input& in) {
  if (!in.symbolic) return factor_spectrum(in.algebra);
  if (in.entry) return entry_spectrum(*in.entry);
  return symbolic_spectrum(in.algebra);
}

void emit(Session& s, const std::vector<Input>& in, const std::vector<std::string>& text, const json& rows) {
  if (s.format() == Format::Json) {
    s.out() << rows.dump(1) << "\n";
    return;
  }
  for (size_t i = 0; i < text.size(); ++i) {
    if (in.size() > 1) s.out() << in[i].label << (s.format() == Format::Tsv ? "\t" : ": ");
    s.out() << text[i] << "\n";
  }
}

Matrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::UsageError, std::string("matrix must be a JSON array of rows: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::UsageError, "matrix must be a non-empty array of rows");
  Matrix m(j.size(), j.size());
  for (size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != j.size()) throw Error(ErrorKind::UsageError, "matrix must be square");
    for (size_t c = 0; c < j.size(); ++c)
      m(r, c) = parse_scalar(j[r][c].is_string() ? j[r][c].get<std::string>() : j[r][c].dump());
  }
  return m;
}

std::string render_guards(const CatalogEntry& e, const std::vector<unsigned>& ks) {
  std::string s;
  for (size_t i = 0; i < e.expected_k.size(); ++i) {
    const KBranch& b = e.expected_k[i];
    std::string part = std::to_string(ks[i]) + (b.when.is_otherwise() ? (e.expected_k.size() == 1 ? "" : " otherwise")
                                                                       : " if " + b.when.text());
    s += (s.empty() ? "" : "; ") + part;
  }
  return s;
}

int cmd_validate(Session& s) {
  auto in = s.inputs(true);
  std::vector<std::string> text;
  json rows = json::array();
  bool all_ok = true;
  for (auto& i : in) {
    ValidationReport v = validate_lie(i.algebra);
    std::string cls = v.ok ? class_name(classify(i.algebra)) : "invalid";
    std::string line = v.ok ? "ok " + cls : "invalid";
    json row{{"input", i.label}, {"lie", v.ok}, {"class", cls}, {"violations", v.violations}};
    if (v.ok && i.algebra.nilradical()) {
      IdealReport r = check_nilpotent_ideal(i.algebra, Subspace::of_basis_indices(i.algebra.dim(), *i.algebra.nilradical()));
      row["nilradical_ok"] = r.ok();
      line += r.ok() ? "; nilradical ok" : "; declared nilradical is not a nilpotent ideal";
      all_ok = all_ok && r.ok();
    }
    for (auto& msg : v.violations) line += "\n  " + msg;
    all_ok = all_ok && v.ok;
    text.push_back(line);
    rows.push_back(row);
  }
  emit(s, in, text, rows);
  return all_ok ? 0 : 1;
}

int cmd_charpoly(Session& s) {
  auto in = s.inputs(true);
  std::vector<std::string> text;
  json rows = json::array();
  for (auto& i : in) {
    std::string q = canonical_string(char_poly(pencil(i.algebra)));
    text.push_back(q);
    rows.push_back({{"input", i.label}, {"Q", q}});
  }
  emit(s, in, text, rows);
  return 0;
}

int cmd_factor(Session& s) {
  auto in = s.inputs(true);
  std::vector<std::string> text;
  json rows = json::array();
  for (auto& i : in) {
    FactoredSpectrum fs = spectrum_of(i);
    text.push_back(canonical_string(fs));
    rows.push_back({{"input", i.label}, {"Q", canonical_string(fs)}, {"k", fs.k()}, {"factors", json::parse(to_json(fs))}});
  }
  emit(s, in, text, rows);
  return 0;
}

int cmd_k(Session& s) {
  auto in = s.inputs(true);
  std::vector<std::string> text;
  json rows = json::array();
  for (auto& i : in) {
    require_concrete(i);
    size_t k = k_invariant(i.algebra);
    text.push_back(std::to_string(k));
    rows.push_back({{"input", i.label}, {"k", k}});
  }
  emit(s, in, text, rows);
  return 0;
}

int cmd_weights(Session& s) {
  auto in = s.inputs(true);
  std::vector<std::string> text;
  json rows = json::array();
  for (auto& i : in) {
    require_concrete(i);
    WeightTable wt = weight_table(i.algebra);
    std::string t;
    json ws = json::array(), qs = json::array();
    for (auto& w : wt.weights) {
      t += (t.empty() ? "" : "\n") + std::string("weight\t") + weight_string(w.form) + "\t" + std::to_string(w.dim);
      ws.push_back({{"weight", weight_string(w.form)}, {"dim", w.dim}});
    }
    for (auto& q : wt.quotient_forms) {
      t += "\nquotient\t" + weight_string(q);
      qs.push_back(weight_string(q));
    }
    t += "\nk\t" + std::to_string(wt.k());
    text.push_back(t);
    rows.push_back({{"input", i.label}, {"weights", ws}, {"quotient", qs}, {"k", wt.k()}});
  }
  emit(s, in, text, rows);
  return 0;
}

int cmd_bounds(Session& s) {
  auto in = s.inputs(true);
  std::vector<std::string> text;
  json rows = json::array();
  bool all_ok = true;
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  for (auto& i : in) {
    require_concrete(i);
    unsigned m = i.entry ? (i.entry->heis_dim - 1) / 2 : 0;
    BoundReport r = bound_report(i.algebra, m);
    std::ostringstream t;
    t << "k\t" << r.k << "\n";
    t << "delta\t" << r.delta.delta << "\t" << mark(r.delta_ok()) << "\tequality " << (r.delta.equality ? "yes" : "no")
      << "\tspans dual " << (r.delta.spans_dual ? "yes" : "no") << "\n";
    if (r.abelian_k) t << "abelian-extension\t" << *r.abelian_k << "\t" << mark(r.abelian_ok()) << "\n";
    if (r.heisenberg)
      t << "heisenberg\t" << r.heisenberg->bound << "\t" << mark(r.heisenberg_ok())
        << (r.heisenberg->sharp() ? "\tsharp" : "") << "\n";
    t << "azari-yang\t" << r.azari_yang << "\t" << mark(r.azari_yang_ok());
    if (r.set_formula) t << "\tset formula " << *r.set_formula;
    for (auto& n : r.notes) t << "\nnote\t" << n;
    text.push_back(t.str());
    json row{{"input", i.label}, {"k", r.k}, {"delta", r.delta.delta}, {"equality", r.delta.equality},
             {"spans_dual", r.delta.spans_dual}, {"azari_yang", r.azari_yang}, {"ok", r.ok()}, {"notes", r.notes}};
    if (r.abelian_k) row["abelian_k"] = *r.abelian_k;
    if (r.heisenberg) row["heisenberg_bound"] = r.heisenberg->bound;
    if (r.set_formula) row["set_formula"] = *r.set_formula;
    rows.push_back(row);
    all_ok = all_ok && r.ok();
  }
  emit(s, in, text, rows);
  return all_ok ? 0 : 1;
}

int cmd_sem(Session& s, const Options& opt) {
  if (!opt.matrices.empty()) {
    if (opt.matrices.size() != 2) throw Error(ErrorKind::UsageError, "sem takes exactly two --matrix values");
    Matrix m1 = parse_matrix(opt.matrices[0]), m2 = parse_matrix(opt.matrices[1]);
    auto alpha = sem_equivalent(m1, m2);
    if (s.format() == Format::Json)
      s.out() << json{{"equivalent", alpha.has_value()}, {"alpha", alpha ? alpha->str() : ""}}.dump(1) << "\n";
    else
      s.out() << (alpha ? "equivalent alpha = " + alpha->str() : "not equivalent") << "\n";
    return alpha ? 0 : 1;
  }
  auto in = s.inputs(false);
  if (in.size() != 2) throw Error(ErrorKind::UsageError, "sem takes two --matrix values or two algebras");
  require_concrete(in[0]);
  require_concrete(in[1]);
  NotionsReport r = compare_notions(in[0].algebra, in[1].algebra);
  if (s.format() == Format::Json) {
    s.out() << json{{"sem", r.sem.has_value()}, {"alpha", r.sem ? r.sem->str() : ""}, {"se", r.se.has_value()},
                    {"agree", r.agree()}}
                   .dump(1)
            << "\n";
  } else {
    s.out() << "sem\t" << (r.sem ? "yes alpha = " + r.sem->str() : "no") << "\n";
    s.out() << "se\t" << (r.se ? "yes" : "no") << "\n";
    s.out() << "agree\t" << (r.agree() ? "yes" : "no") << "\n";
  }
  return r.sem ? 0 : 1;
}

int cmd_se(Session& s) {
  auto in = s.inputs(false);
  if (in.size() != 2) throw Error(ErrorKind::UsageError, "se takes exactly two algebras");
  require_concrete(in[0]);
  require_concrete(in[1]);
  FactoredSpectrum a = factor_spectrum(in[0].algebra), b = factor_spectrum(in[1].algebra);
  auto cov = se_equivalent(a, b);
  if (s.format() == Format::Json) {
    json row{{"equivalent", cov.has_value()}, {"Q1", canonical_string(a)}, {"Q2", canonical_string(b)}};
    if (cov) {
      json rowsj = json::array();
      for (size_t r = 0; r < cov->b.rows(); ++r) {
        json rr = json::array();
        for (size_t c = 0; c < cov->b.cols(); ++c) rr.push_back(cov->b(r, c).str());
        rowsj.push_back(rr);
      }
      row["B"] = rowsj;
    }
    s.out() << row.dump(1) << "\n";
  } else if (cov) {
    s.out() << "equivalent\nB = " << cov->b.str() << "\n";
  } else {
    s.out() << "not equivalent\n";
  }
  return cov ? 0 : 1;
}

int cmd_table(Session& s, const Options& opt) {
  unsigned heis = 0, ext = 0;
  char comma = 0;
  std::istringstream ss(opt.positional);
  if (!(ss >> heis >> comma >> ext) || comma != ',' || !ss.eof())
    throw Error(ErrorKind::UsageError, "table expects a case like 5,2");
  auto rows = emit_table(s.catalog(), heis, ext);
  bool clean = true;
  if (s.format() == Format::Json) {
    json arr = json::array();
    for (auto& r : rows) arr.push_back({{"family", r.family}, {"Q", r.q}, {"k", r.k}, {"mismatches", r.mismatches}});
    s.out() << arr.dump(1) << "\n";
  } else if (s.format() == Format::Tsv) {
    s.out() << table_tsv(rows);
  } else {
    for (auto& r : rows) s.out() << r.family << "\n  Q = " << r.q << "\n  k: " << r.k << "\n";
  }
  for (auto& r : rows)
    for (auto& m : r.mismatches) {
      clean = false;
      s.out() << "MISMATCH " << r.family << ": " << m << "\n";
    }
  return clean ? 0 : 1;
}

int cmd_rigidity(Session& s) {
  auto in = s.inputs(true);
  json rows = json::array();
  std::ostringstream t;
  for (auto& i : in) {
    if (!i.entry) throw Error(ErrorKind::UsageError, "rigidity works on catalog families");
    ParamFamily fam = make_family(*i.entry);
    RigidityReport r = rigidity_check(fam);
    json row{{"family", i.entry->family}, {"verdict", verdict_name(r.verdict)}};
    t << i.entry->family << "\nverdict\t" << verdict_name(r.verdict) << "\n";
    if (!r.triple.empty()) {
      std::string tr, ex;
      json trj = json::array(), exj = json::array();
      for (auto& c : r.triple) tr += (tr.empty() ? "" : ", ") + c.str(), trj.push_back(c.str());
      for (auto& c : r.excluded) ex += (ex.empty() ? "" : ", ") + c.str(), exj.push_back(c.str());
      t << "i0\tz" << r.i0 << "\ntriple\t(" << tr << ")\nexcluded\t{" << ex << "}\n";
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      t << "shape\t" << yn(r.shape) << "\nsingle variable\t" << yn(r.single_var) << "\ndistinct\t" << yn(r.distinct)
        << "\ninjective\t" << yn(r.injective) << "\n";
      row["i0"] = r.i0;
      row["triple"] = trj;
      row["excluded"] = exj;
    }
    for (auto& n : r.notes) t << "note\t" << n << "\n";
    if (r.witness) {
      const Witness& w = i.entry->witnesses[*r.witness];
      t << "witness\t" << w.kind << "\nB\t" << w.b.str() << "\n";
      row["witness"] = w.kind;
    }
    try {
      Classification c = classify_family(fam);
      t << "class\t" << family_class_name(c.kind) << "\n";
      row["class"] = family_class_name(c.kind);
      if (!c.orbit_map.empty()) t << "orbit map\t" << c.orbit_map << "\n";
      for (auto& p : c.redundant) t << "redundant\t" << p << "\n";
      for (auto& [p, vals] : c.distinguished)
        for (auto& v : vals) t << "distinguished\t" << p << " = " << v.str() << "\n";
      for (auto& cert : c.certificates) t << "certificate\t" << cert << "\n";
      row["certificates"] = c.certificates;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Inconclusive) throw;
      t << "class\tinconclusive\n";
      row["class"] = "inconclusive";
    }
    rows.push_back(row);
  }
  if (s.format() == Format::Json)
    s.out() << rows.dump(1) << "\n";
  else
    s.out() << t.str();
  return 0;
}

int cmd_catalog(Session& s, const Options& opt) {
  bool ok = true;
  json rows = json::array();
  for (auto& e : s.catalog()) {
    std::string ps;
    for (auto& p : e.algebra.params()) ps += (ps.empty() ? "" : ",") + p;
    json row{{"family", e.family}, {"dim", e.algebra.dim()}, {"params", e.algebra.params()}};
    if (s.format() != Format::Json) s.out() << e.family << "\t" << e.algebra.dim() << "\t" << (ps.empty() ? "-" : ps) << "\n";
    if (opt.verify) {
      VerifyReport r = verify_entry(e);
      ok = ok && r.ok;
      row["verified"] = r.ok;
      row["lines"] = r.lines;
      if (s.format() != Format::Json)
        for (auto& l : r.lines) s.out() << "  " << l << "\n";
    }
    rows.push_back(row);
  }
  if (s.format() == Format::Json) s.out() << rows.dump(1) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

std::vector<TableRow> emit_table(const std::vector<CatalogEntry>& cat, unsigned heis_dim, unsigned ext_dim) {
  auto entries = entries_for_case(cat, heis_dim, ext_dim);
  if (entries.empty())
    throw Error(ErrorKind::UnknownCase, "(" + std::to_string(heis_dim) + "," + std::to_string(ext_dim) + ")");
  std::vector<TableRow> rows;
  for (auto* e : entries) {
    TableRow row;
    row.family = e->family;
    FactoredSpectrum fs = entry_spectrum(*e);
    row.q = canonical_string(fs);
    if (fs != expected_spectrum(*e)) row.mismatches.push_back("Q differs from " + e->expected_Q);
    std::vector<unsigned> ks;
    std::vector<bool> seen(e->expected_k.size(), false);
    for (auto& b : e->expected_k) ks.push_back(b.k);
    for (auto& sample : e->samples) {
      size_t idx = 0;
      while (idx < e->expected_k.size() && !e->expected_k[idx].when.holds(sample)) ++idx;
      if (idx == e->expected_k.size()) continue;
      unsigned k = static_cast<unsigned>(k_invariant(instantiate(*e, sample)));
      if (seen[idx] && ks[idx] != k)
        row.mismatches.push_back("branch " + std::to_string(idx + 1) + " has k = " + std::to_string(ks[idx]) + " and " +
                                 std::to_string(k));
      ks[idx] = k;
      seen[idx] = true;
    }
    for (size_t i = 0; i < ks.size(); ++i) {
      if (!seen[i]) row.mismatches.push_back("branch " + std::to_string(i + 1) + " has no sample");
      if (ks[i] != e->expected_k[i].k)
        row.mismatches.push_back("branch " + std::to_string(i + 1) + " computes k = " + std::to_string(ks[i]) +
                                 ", table says " + std::to_string(e->expected_k[i].k));
    }
    row.k = render_guards(*e, ks);
    rows.push_back(row);
  }
  return rows;
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::string s = "family\tQ\tk\n";
  for (auto& r : rows) s += r.family + "\t" + r.q + "\t" + r.k + "\n";
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral invariants of solvable Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* sub, bool positional) {
    sub->add_option("--family", opt.families, "Catalog family id, optionally ID@b=1,c=2");
    sub->add_option("--algebra", opt.algebras, "Algebra JSON file");
    sub->add_option("-p,--param", opt.bindings, "Parameter binding name=value");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_option("--catalog", opt.catalog_path, "Catalog file (default: SOLVSPEC_CATALOG or the bundled catalog)");
    if (positional) sub->add_option("target", opt.positional, "Family id or case");
  };
  std::map<std::string, CLI::App*> subs;
  for (const char* verb : {"validate", "charpoly", "factor", "k", "weights", "bounds", "rigidity"}) {
    subs[verb] = app.add_subcommand(verb);
    common(subs[verb], true);
  }
  subs["sem"] = app.add_subcommand("sem", "Matrix or derivation spectral equivalence");
  common(subs["sem"], false);
  subs["sem"]->add_option("--matrix", opt.matrices, "Square matrix as JSON rows")->allow_extra_args(false);
  subs["se"] = app.add_subcommand("se", "Spectral equivalence of two algebras");
  common(subs["se"], false);
  subs["table"] = app.add_subcommand("table", "Recompute one classification table, e.g. 5,2");
  common(subs["table"], true);
  subs["catalog"] = app.add_subcommand("catalog", "List catalog families");
  common(subs["catalog"], false);
  subs["catalog"]->add_flag("--verify", opt.verify, "Check every entry against its stored table");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return 2;
  }
  try {
    Session s(opt, out);
    std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "validate") return cmd_validate(s);
    if (verb == "charpoly") return cmd_charpoly(s);
    if (verb == "factor") return cmd_factor(s);
    if (verb == "k") return cmd_k(s);
    if (verb == "weights") return cmd_weights(s);
    if (verb == "bounds") return cmd_bounds(s);
    if (verb == "sem") return cmd_sem(s, opt);
    if (verb == "se") return cmd_se(s);
    if (verb == "table") return cmd_table(s, opt);
    if (verb == "rigidity") return cmd_rigidity(s);
    return cmd_catalog(s, opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace solvspec
