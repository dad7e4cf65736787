#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "solvspec/liealg.hpp"
#include "solvspec/poly.hpp"

namespace solvspec {

// Distinct eigenvalues with algebraic multiplicities, sorted.
using SpecData = std::vector<std::pair<Scalar, unsigned>>;

// Acts on (z1..zN) with z0 fixed: Q(z0, zB).
struct ChangeOfVariables {
  Matrix b;
  bool verified = false;
};

SpecData spec_data(const Matrix& m);
// Returns alpha with SpecData(m1) = SpecData(alpha m2), preferring alpha = 1.
std::optional<Scalar> sem_equivalent(const Matrix& m1, const Matrix& m2);
bool pencil_identity_holds(const Matrix& m1, const Matrix& m2, const Scalar& alpha);

// Substitutes z -> zB: every coefficient column u over z1..zN becomes B u.
FactoredSpectrum apply_change(const FactoredSpectrum& fs, const Matrix& b);
// Some verified B with apply_change(fs1, B) = fs2; complete search over matchings of equal multiplicity.
std::optional<ChangeOfVariables> se_equivalent(const FactoredSpectrum& fs1, const FactoredSpectrum& fs2);

struct NotionsReport {
  Matrix derivation1, derivation2;
  std::optional<Scalar> sem;
  std::optional<ChangeOfVariables> se;
  bool agree() const { return sem.has_value() == se.has_value(); }
};

// Both algebras are a declared codimension-one nilradical plus one extension element.
Matrix extension_derivation(const LieAlgebra& l);
NotionsReport compare_notions(const LieAlgebra& l1, const LieAlgebra& l2);

}  // namespace solvspec
