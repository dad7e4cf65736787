#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvspec/heisenberg.hpp"
#include "solvspec/liealg.hpp"

namespace solvspec {

struct DeltaBound {
  size_t delta = 0;       // distinct nilradical weights
  bool equality = false;  // quotient forms lie among the nilradical forms
  bool spans_dual = false;
  size_t complement_dim = 0;
};

struct HeisenbergBound {
  size_t bound = 0;
  size_t k = 0;
  bool pass() const { return k <= bound; }
  bool sharp() const { return k == bound; }
};

struct BoundReport {
  size_t k = 0;
  DeltaBound delta;
  std::optional<size_t> abelian_k;
  std::optional<HeisenbergBound> heisenberg;
  size_t azari_yang = 0;
  std::optional<size_t> set_formula;
  std::vector<std::string> notes;
  bool delta_ok() const { return delta.delta <= k && delta.equality == (delta.delta == k); }
  bool abelian_ok() const { return !abelian_k || *abelian_k == k; }
  bool heisenberg_ok() const { return !heisenberg || heisenberg->pass(); }
  bool azari_yang_ok() const { return k <= azari_yang && (!set_formula || *set_formula == azari_yang); }
  bool ok() const { return delta_ok() && abelian_ok() && heisenberg_ok() && azari_yang_ok(); }
};

DeltaBound delta_lower_bound(const LieAlgebra& l);
// |Delta u {0}|; throws NotAbelianComplement when the complement of the nilradical is not abelian.
size_t abelian_extension_k(const LieAlgebra& l);
HeisenbergBound heisenberg_bound(const HeisenbergExtensionSpec& spec);
// Max over basis elements of the number of distinct eigenvalues of ad.
size_t azari_yang_bound(const LieAlgebra& l);
// Max over extension generators of |{0} u {2a} u {a + eigenvalues of X}|.
size_t heisenberg_set_formula(const HeisenbergExtensionSpec& spec);
// Heisenberg data is used when m > 0 and the algebra has the standard basis order.
BoundReport bound_report(const LieAlgebra& l, unsigned heisenberg_m = 0);

}  // namespace solvspec
