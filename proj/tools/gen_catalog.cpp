// Builds data/catalog.json from the weight-level seed description.
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "solvspec/catalog.hpp"
#include "solvspec/heisenberg.hpp"
#include "solvspec/io.hpp"

using nlohmann::json;
using namespace solvspec;

namespace {

HeisenbergExtensionSpec spec_from_seed(const json& s) {
  HeisenbergExtensionSpec spec;
  spec.m = s.at("m").get<unsigned>();
  spec.canonical = false;
  const json& hw = s.at("h_weight");
  size_t f = hw.size();
  spec.r = Matrix(f, f);
  const json& pairs = s.at("pairs");
  for (size_t al = 0; al < f; ++al) {
    Scalar a = parse_scalar(hw[al].get<std::string>()) / 2;
    spec.a.push_back(a);
    Matrix x(2 * spec.m, 2 * spec.m);
    for (unsigned i = 0; i < spec.m; ++i) {
      x(i, i) = parse_scalar(pairs[i][0][al].get<std::string>()) - a;
      x(spec.m + i, spec.m + i) = parse_scalar(pairs[i][1][al].get<std::string>()) - a;
    }
    spec.x.push_back(x);
  }
  if (s.contains("nilpotent"))
    for (auto& nil : s["nilpotent"]) {
      Matrix& x = spec.x.at(nil.at("alpha").get<size_t>() - 1);
      for (auto& ent : nil.at("entries")) {
        size_t r = ent[0].get<size_t>() - 1, c = ent[1].get<size_t>() - 1;
        x(r, c) = x(r, c) + parse_scalar(ent[2].get<std::string>());
      }
    }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_catalog SEED OUT\n";
    return 2;
  }
  try {
    std::ifstream in(argv[1]);
    json seed = json::parse(in);
    json out = {{"families", json::array()}};
    for (auto& s : seed.at("families")) {
      LieAlgebra l = build_extension(spec_from_seed(s));
      json e = {{"family", s.at("family")}};
      e.update(algebra_to_json(l));
      for (const char* key : {"domain", "special", "expected_Q", "expected_k", "samples", "witnesses", "rigidity"})
        if (s.contains(key)) e[key] = s[key];
      if (s.contains("params")) e["params"] = s["params"];
      out["families"].push_back(e);
    }
    parse_catalog(out);
    std::ofstream(argv[2]) << out.dump(1) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
