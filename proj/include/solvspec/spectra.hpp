#pragma once

#include <map>
#include <string>
#include <vector>

#include "solvspec/liealg.hpp"
#include "solvspec/poly.hpp"

namespace solvspec {

// z0 I + sum z_{i+1} A_i with A_i = ad(e_i).
struct Pencil {
  size_t dim = 0;
  std::vector<Matrix> mats;
};

Pencil pencil(const LieAlgebra& l);
std::vector<std::vector<MultiPoly>> pencil_matrix(const Pencil& p);
MultiPoly char_poly(const Pencil& p);
// Laplace expansion over column subsets; test oracle for the Bareiss routine.
MultiPoly cofactor_determinant(const std::vector<std::vector<MultiPoly>>& m);

struct TriangularFlag {
  Matrix basis;                     // columns are the new basis vectors
  std::vector<LinearForm> diagonal;  // one form per basis vector
};

// Common eigenvector of a solvable algebra of operators spanned by ops.
Vec common_eigenvector(const std::vector<Matrix>& ops, size_t dim);
// Basis in which every operator is upper triangular.
Matrix triangularizing_basis(const std::vector<Matrix>& ops, size_t dim);

TriangularFlag triangularize(const LieAlgebra& l);
// Flag through the declared nilradical (nilradical vectors first).
TriangularFlag triangularize_adapted(const LieAlgebra& l);
FactoredSpectrum factor_spectrum(const LieAlgebra& l);
size_t k_invariant(const LieAlgebra& l);

struct WeightEntry {
  LinearForm form;  // z0 + alpha(z)
  unsigned dim = 0;
};

struct WeightTable {
  size_t nvars = 0;
  std::vector<WeightEntry> weights;
  std::vector<LinearForm> quotient_forms;
  std::vector<LinearForm> delta_forms() const;
  std::vector<LinearForm> all_forms() const;
  size_t k() const { return all_forms().size(); }
  bool quotient_in_delta() const;
};

WeightTable weight_table(const LieAlgebra& l);
// Renders alpha(z) = form - z0.
std::string weight_string(const LinearForm& form);

struct SamplePlan {
  std::map<std::string, std::vector<Scalar>> skip;
  unsigned degree_bound = 0;  // 0 derives the bound from the structure constants
};

// Grid factorization, per-axis factor tracking, interpolation, then exact verification.
FactoredSpectrum symbolic_spectrum(const LieAlgebra& l, const SamplePlan& plan = {});

}  // namespace solvspec
