#include "solvspec/io.hpp"

#include <set>

namespace solvspec {

using nlohmann::json;

void schema_error(const std::string& pointer, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

namespace {

size_t read_index(const json& v, const std::string& ptr, size_t bound) {
  if (!v.is_number_integer()) schema_error(ptr, "expected an integer index");
  long long i = v.get<long long>();
  if (i < 0 || static_cast<size_t>(i) >= bound) schema_error(ptr, "index out of range");
  return static_cast<size_t>(i);
}

Scalar read_scalar(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
  if (!v.is_string()) schema_error(ptr, "expected a scalar string");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const Error& e) {
    schema_error(ptr, e.what());
  }
}

std::string escape_key(const std::string& k) {
  std::string out;
  for (char c : k) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

}  // namespace

LieAlgebra algebra_from_json(const json& doc, const std::string& pointer) {
  if (!doc.is_object()) schema_error(pointer, "expected an object");
  if (!doc.contains("dim")) schema_error(pointer + "/dim", "missing");
  const json& jd = doc["dim"];
  if (!jd.is_number_integer() || jd.get<long long>() <= 0) schema_error(pointer + "/dim", "expected a positive integer");
  size_t n = jd.get<size_t>();
  if (n > 9) schema_error(pointer + "/dim", "dimension above 9 is not supported");

  std::vector<std::string> basis;
  if (!doc.contains("basis") || !doc["basis"].is_array()) schema_error(pointer + "/basis", "expected an array");
  for (size_t i = 0; i < doc["basis"].size(); ++i) {
    const json& b = doc["basis"][i];
    if (!b.is_string()) schema_error(pointer + "/basis/" + std::to_string(i), "expected a string");
    basis.push_back(b.get<std::string>());
  }
  if (basis.size() != n) schema_error(pointer + "/basis", "length differs from dim");
  if (std::set<std::string>(basis.begin(), basis.end()).size() != n)
    schema_error(pointer + "/basis", "duplicate labels");

  std::vector<std::string> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_array()) schema_error(pointer + "/params", "expected an array");
    for (size_t i = 0; i < doc["params"].size(); ++i) {
      const json& p = doc["params"][i];
      if (!p.is_string()) schema_error(pointer + "/params/" + std::to_string(i), "expected a string");
      params.push_back(p.get<std::string>());
    }
  }

  LieAlgebra l(basis, params);
  if (doc.contains("brackets")) {
    const json& br = doc["brackets"];
    if (!br.is_array()) schema_error(pointer + "/brackets", "expected an array");
    std::set<std::pair<size_t, size_t>> seen;
    for (size_t t = 0; t < br.size(); ++t) {
      std::string bp = pointer + "/brackets/" + std::to_string(t);
      const json& e = br[t];
      if (!e.is_object()) schema_error(bp, "expected an object");
      if (!e.contains("i")) schema_error(bp + "/i", "missing");
      if (!e.contains("j")) schema_error(bp + "/j", "missing");
      size_t i = read_index(e["i"], bp + "/i", n), j = read_index(e["j"], bp + "/j", n);
      if (i == j) schema_error(bp + "/j", "i and j must differ");
      auto key = std::minmax(i, j);
      if (!seen.insert(key).second) schema_error(bp, "duplicate bracket");
      if (!e.contains("out") || !e["out"].is_object()) schema_error(bp + "/out", "expected an object");
      Vec out(n);
      for (auto& [k, v] : e["out"].items()) {
        std::string op = bp + "/out/" + escape_key(k);
        size_t idx;
        try {
          size_t used = 0;
          long long raw = std::stoll(k, &used);
          if (used != k.size() || raw < 0 || static_cast<size_t>(raw) >= n) throw std::out_of_range("");
          idx = static_cast<size_t>(raw);
        } catch (const std::exception&) {
          schema_error(op, "key must be a basis index");
        }
        out[idx] = read_scalar(v, op);
      }
      if (i > j)
        for (auto& s : out) s = -s;
      l.set_bracket(key.first, key.second, out);
    }
  }

  if (doc.contains("nilradical")) {
    const json& nr = doc["nilradical"];
    if (!nr.is_array()) schema_error(pointer + "/nilradical", "expected an array");
    std::vector<size_t> idx;
    for (size_t t = 0; t < nr.size(); ++t) idx.push_back(read_index(nr[t], pointer + "/nilradical/" + std::to_string(t), n));
    l.set_nilradical(idx);
  }

  std::set<std::string> declared(params.begin(), params.end());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (auto& s : l.constant(i, j, k).symbols())
          if (!declared.count(s)) schema_error(pointer + "/params", "undeclared parameter " + s);
  return l;
}

LieAlgebra algebra_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

json algebra_to_json(const LieAlgebra& l) {
  json doc;
  size_t n = l.dim();
  doc["dim"] = n;
  doc["basis"] = l.basis();
  if (!l.params().empty()) doc["params"] = l.params();
  json br = json::array();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      json out = json::object();
      for (size_t k = 0; k < n; ++k)
        if (!l.constant(i, j, k).is_zero()) out[std::to_string(k)] = l.constant(i, j, k).str();
      if (!out.empty()) br.push_back({{"i", i}, {"j", j}, {"out", out}});
    }
  doc["brackets"] = br;
  if (l.nilradical()) doc["nilradical"] = *l.nilradical();
  return doc;
}

}  // namespace solvspec
