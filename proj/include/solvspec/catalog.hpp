#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "solvspec/liealg.hpp"
#include "solvspec/poly.hpp"

namespace solvspec {

// Predicate over parameters: ==, !=, in {..}, notin {..}, tuples, and/or/not, parentheses.
class Guard {
 public:
  struct Node;
  Guard() = default;
  static Guard parse(const std::string& text);
  bool is_otherwise() const { return otherwise_; }
  bool holds(const Assignment& a) const;
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  bool otherwise_ = false;
  std::shared_ptr<const Node> root_;
};

struct KBranch {
  Guard when;
  unsigned k = 0;
};

// B acts on z1..zN; witness claims Q at p_prime under B equals Q at p.
struct Witness {
  std::string kind;
  std::map<std::string, std::string> p_prime;  // primed parameter values, may reference b_p, c_p
  Matrix b;                                    // entries may reference params and primed params
  std::vector<std::pair<Assignment, Assignment>> pairs;
};

// Coefficient functions c_j of factors z0 + c_j z_{i0} used by the rigidity criterion.
struct RigidityHint {
  size_t i0 = 0;
  std::vector<Scalar> triple;
};

struct CatalogEntry {
  std::string family;
  unsigned heis_dim = 0, ext_dim = 0;
  LieAlgebra algebra;
  std::map<std::string, std::string> domain;
  std::map<std::string, std::vector<Scalar>> special;
  std::string expected_Q;
  std::vector<KBranch> expected_k;
  std::vector<Assignment> samples;
  std::vector<Witness> witnesses;
  std::optional<RigidityHint> rigidity;
};

std::string primed(const std::string& param);
std::string default_catalog_path();
std::vector<CatalogEntry> load_catalog(const std::string& path = "");
std::vector<CatalogEntry> parse_catalog(const nlohmann::json& doc);
CatalogEntry entry_from_json(const nlohmann::json& e, const std::string& pointer);
nlohmann::json entry_to_json(const CatalogEntry& e);
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& cat, const std::string& family);
std::vector<const CatalogEntry*> entries_for_case(const std::vector<CatalogEntry>& cat, unsigned heis_dim,
                                                  unsigned ext_dim);

LieAlgebra instantiate(const CatalogEntry& e, const Assignment& params);
// First matching branch; throws Inconclusive when none matches.
const KBranch& expected_branch(const CatalogEntry& e, const Assignment& params);
FactoredSpectrum expected_spectrum(const CatalogEntry& e);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Symbolic Q plus each sample point (entry samples when `samples` is empty).
VerifyReport verify_entry(const CatalogEntry& e, const std::vector<Assignment>& samples = {});
FactoredSpectrum entry_spectrum(const CatalogEntry& e);

std::string assignment_string(const Assignment& a);

}  // namespace solvspec
