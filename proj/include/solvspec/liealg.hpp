#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvspec/matrix.hpp"

namespace solvspec {

// Lie algebra given by structure constants in a fixed ordered basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> basis, std::vector<std::string> params = {});

  size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<std::string>& params() const { return params_; }
  void set_params(std::vector<std::string> p) { params_ = std::move(p); }
  size_t index_of(const std::string& label) const;

  // Sets [e_i, e_j] = out and [e_j, e_i] = -out.
  void set_bracket(size_t i, size_t j, const Vec& out);
  const Scalar& constant(size_t i, size_t j, size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  Vec bracket_basis(size_t i, size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  const std::optional<std::vector<size_t>>& nilradical() const { return nilradical_; }
  void set_nilradical(std::vector<size_t> idx) { nilradical_ = std::move(idx); }

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  LieAlgebra bind(const Assignment& a) const;
  // New basis vectors are the columns of t.
  LieAlgebra change_basis(const Matrix& t) const;

 private:
  std::vector<std::string> basis_, params_;
  std::vector<Scalar> c_;
  std::optional<std::vector<size_t>> nilradical_;
  std::string provenance_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate_lie(const LieAlgebra& l);
Matrix ad(const LieAlgebra& l, const Vec& x);
Matrix ad_basis(const LieAlgebra& l, size_t i);
Vec unit_vector(size_t n, size_t i);

// Row-reduced spanning set of a subspace of the algebra.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : ambient_(ambient) {}
  static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
  static Subspace of_basis_indices(size_t ambient, const std::vector<size_t>& idx);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

 private:
  size_t ambient_ = 0;
  std::vector<Vec> rows_;
};

enum class SeriesKind { Derived, LowerCentral };
std::vector<Subspace> series(const LieAlgebra& l, SeriesKind kind);

enum class AlgebraClass { Nilpotent, SolvableNotNilpotent, NotSolvable };
AlgebraClass classify(const LieAlgebra& l);
const char* class_name(AlgebraClass c);

struct IdealReport {
  bool is_ideal = false;
  bool is_nilpotent = false;
  bool ok() const { return is_ideal && is_nilpotent; }
};

// Throws NotASubalgebra when [s, s] is not contained in s.
IdealReport check_nilpotent_ideal(const LieAlgebra& l, const Subspace& s);

}  // namespace solvspec
