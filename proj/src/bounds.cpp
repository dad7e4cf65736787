#include "solvspec/bounds.hpp"

#include <algorithm>

#include "solvspec/spectra.hpp"

namespace solvspec {

namespace {

std::vector<size_t> complement_indices(const LieAlgebra& l) {
  if (!l.nilradical()) throw Error(ErrorKind::InvalidSpec, "a declared nilradical is required");
  const auto& nil = *l.nilradical();
  std::vector<size_t> out;
  for (size_t i = 0; i < l.dim(); ++i)
    if (std::find(nil.begin(), nil.end(), i) == nil.end()) out.push_back(i);
  return out;
}

}  // namespace

DeltaBound delta_lower_bound(const LieAlgebra& l) {
  WeightTable wt = weight_table(l);
  DeltaBound d;
  auto forms = wt.delta_forms();
  d.delta = forms.size();
  d.equality = wt.quotient_in_delta();
  d.complement_dim = complement_indices(l).size();
  if (!forms.empty()) {
    std::vector<Vec> rows;
    for (auto& f : forms) rows.emplace_back(f.coeffs().begin() + 1, f.coeffs().end());
    d.spans_dual = rank(Matrix::from_rows(rows)) == d.complement_dim;
  } else {
    d.spans_dual = d.complement_dim == 0;
  }
  return d;
}

size_t abelian_extension_k(const LieAlgebra& l) {
  auto comp = complement_indices(l);
  for (size_t a = 0; a < comp.size(); ++a)
    for (size_t b = a + 1; b < comp.size(); ++b)
      for (size_t k = 0; k < l.dim(); ++k)
        if (!l.constant(comp[a], comp[b], k).is_zero())
          throw Error(ErrorKind::NotAbelianComplement, "complement of the nilradical is not abelian");
  auto forms = weight_table(l).delta_forms();
  LinearForm zero(unit_vector(l.dim() + 1, 0));
  bool has_zero = std::find(forms.begin(), forms.end(), zero) != forms.end();
  return forms.size() + (has_zero ? 0 : 1);
}

HeisenbergBound heisenberg_bound(const HeisenbergExtensionSpec& spec) {
  HeisenbergBound b;
  b.bound = 2 * spec.m + 2;
  b.k = k_invariant(build_extension(spec));
  return b;
}

size_t azari_yang_bound(const LieAlgebra& l) {
  unsigned best = 0;
  for (size_t i = 0; i < l.dim(); ++i) best = std::max(best, squarefree_degree(characteristic_polynomial(ad_basis(l, i))));
  return best;
}

size_t heisenberg_set_formula(const HeisenbergExtensionSpec& spec) {
  size_t best = 1;
  for (size_t al = 0; al < spec.f(); ++al) {
    std::vector<Scalar> vals{Scalar(0), spec.a[al] * 2};
    for (auto& lam : gaussian_roots(characteristic_polynomial(spec.x[al]), true)) vals.push_back(spec.a[al] + lam);
    std::sort(vals.begin(), vals.end(), [](auto& x, auto& y) { return compare(x, y) < 0; });
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    best = std::max(best, vals.size());
  }
  return best;
}

BoundReport bound_report(const LieAlgebra& l, unsigned heisenberg_m) {
  BoundReport r;
  r.k = k_invariant(l);
  r.delta = delta_lower_bound(l);
  r.azari_yang = azari_yang_bound(l);
  try {
    r.abelian_k = abelian_extension_k(l);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAbelianComplement) throw;
    r.notes.push_back("complement not abelian; abelian-extension formula skipped");
  }
  if (r.delta.complement_dim == 0) r.notes.push_back("nilpotent algebra; k = 1 convention");
  if (heisenberg_m > 0 && l.dim() > 2 * heisenberg_m + 1) {
    HeisenbergExtensionSpec spec = extract_spec(l, heisenberg_m);
    r.heisenberg = HeisenbergBound{2 * heisenberg_m + 2, r.k};
    r.set_formula = heisenberg_set_formula(spec);
  }
  return r;
}

}  // namespace solvspec
