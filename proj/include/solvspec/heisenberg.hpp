#pragma once

#include <string>
#include <vector>

#include "solvspec/liealg.hpp"
#include "solvspec/poly.hpp"

namespace solvspec {

// Basis order (h, p1..pm, q1..qm, f1..ff); X acts on (p1..pm, q1..qm).
struct HeisenbergExtensionSpec {
  unsigned m = 1;
  std::vector<Scalar> a;
  std::vector<Matrix> x;
  Matrix r;  // f x f, antisymmetric
  // Canonical specs obey a1 in {0, 1}, a2 = ... = 0 and r = 0 when a1 = 1.
  bool canonical = true;

  size_t f() const { return a.size(); }
  size_t dim() const { return 2 * m + 1 + f(); }
};

LieAlgebra build_heisenberg(unsigned m);
Matrix symplectic_form(unsigned m);
// Every violated constraint, empty when the spec is valid.
std::vector<std::string> spec_violations(const HeisenbergExtensionSpec& spec);
// Throws InvalidSpec listing all violations.
LieAlgebra build_extension(const HeisenbergExtensionSpec& spec);
MultiPoly closed_form_Q(const HeisenbergExtensionSpec& spec);
// Reads a, X, r back from an algebra in the standard basis order.
HeisenbergExtensionSpec extract_spec(const LieAlgebra& l, unsigned m);
// Specs whose nilradical block has exactly the target factors; the first is semisimple,
// the rest attach a nilpotent part across each pair of repeated weight pairs.
std::vector<HeisenbergExtensionSpec> realize_from_factors(unsigned m, size_t f, const FactoredSpectrum& target);

}  // namespace solvspec
