#include <gtest/gtest.h>

#include "solvspec/heisenberg.hpp"
#include "solvspec/io.hpp"
#include "solvspec/spectra.hpp"
#include "test_support.hpp"

using namespace solvspec;
using namespace solvspec::testing;

namespace {

LieAlgebra sl2() {
  LieAlgebra l({"h", "e", "f"});
  l.set_bracket(0, 1, {Scalar(0), Scalar(2), Scalar(0)});
  l.set_bracket(0, 2, {Scalar(0), Scalar(0), Scalar(-2)});
  l.set_bracket(1, 2, {Scalar(1), Scalar(0), Scalar(0)});
  return l;
}

}  // namespace

TEST(LieAlgebra, HeisenbergIsNilpotentLie) {
  for (unsigned m : {1u, 2u}) {
    LieAlgebra h = build_heisenberg(m);
    EXPECT_EQ(h.dim(), 2 * m + 1);
    EXPECT_TRUE(validate_lie(h).ok);
    EXPECT_EQ(classify(h), AlgebraClass::Nilpotent);
    EXPECT_EQ(k_invariant(h), 1u);
  }
}

TEST(LieAlgebra, JacobiViolationIsReported) {
  LieAlgebra l({"a", "b", "c", "d"});
  l.set_bracket(0, 1, unit_vector(4, 2));
  l.set_bracket(2, 3, unit_vector(4, 0));
  ValidationReport r = validate_lie(l);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.violations.empty());
}

TEST(LieAlgebra, Classification) {
  EXPECT_EQ(classify(sl2()), AlgebraClass::NotSolvable);
  EXPECT_EQ(classify(find_entry(catalog(), "s_{3,1}^{0,2}").algebra), AlgebraClass::SolvableNotNilpotent);
  EXPECT_STREQ(class_name(AlgebraClass::Nilpotent), "nilpotent");
}

TEST(LieAlgebra, DerivedAlgebraSeparatesEquivalentPair) {
  auto derived_dim = [](const std::string& fam) {
    return series(find_entry(catalog(), fam).algebra, SeriesKind::Derived).at(1).dim();
  };
  EXPECT_EQ(derived_dim("s_{5,1}^{0,1}"), 3u);
  EXPECT_EQ(derived_dim("s_{5,1}^{0,4}"), 4u);
}

TEST(LieAlgebra, NilpotentIdealChecks) {
  const LieAlgebra& l = find_entry(catalog(), "s_{3,1}^{0,2}").algebra;
  EXPECT_TRUE(check_nilpotent_ideal(l, Subspace::of_basis_indices(4, {0, 1, 2})).ok());
  EXPECT_FALSE(check_nilpotent_ideal(l, Subspace::of_basis_indices(4, {0, 3})).ok());
  EXPECT_THROW(check_nilpotent_ideal(l, Subspace::of_basis_indices(4, {1, 2})), Error);
}

TEST(LieAlgebra, RandomTriangularAlgebrasHaveOneFactor) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    LieAlgebra l = random_triangular_algebra(rng);
    ASSERT_TRUE(validate_lie(l).ok);
    EXPECT_EQ(classify(l), AlgebraClass::Nilpotent);
    EXPECT_EQ(k_invariant(l), 1u);
  }
}

TEST(Io, JsonRoundTripAndSchemaErrors) {
  const LieAlgebra& l = find_entry(catalog(), "s_{5,2}^{2,1}").algebra;
  LieAlgebra back = algebra_from_json(algebra_to_json(l));
  EXPECT_EQ(algebra_to_json(back), algebra_to_json(l));
  EXPECT_EQ(char_poly(pencil(back)), char_poly(pencil(l)));

  auto doc = nlohmann::json::parse(R"({"dim": 3, "basis": ["x", "y", "z"],
    "brackets": [{"i": 0, "j": 1, "out": {"2": "1"}}, {"i": 0, "j": 2, "out": {"2": "1"}},
                 {"i": "q", "j": 2, "out": {"1": "1"}}]})");
  try {
    algebra_from_json(doc);
    FAIL() << "expected a schema error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    EXPECT_NE(std::string(e.what()).find("/brackets/2/i"), std::string::npos) << e.what();
  }
  auto undeclared = nlohmann::json::parse(R"({"dim": 2, "basis": ["x", "y"],
    "brackets": [{"i": 0, "j": 1, "out": {"1": "t"}}]})");
  EXPECT_THROW(algebra_from_json(undeclared), Error);
}

TEST(Spectra, BareissMatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Pencil p = random_pencil(rng, 8);
    EXPECT_EQ(char_poly(p), cofactor_determinant(pencil_matrix(p))) << "trial " << t;
  }
}

TEST(Spectra, FactorExpandRoundTripOnCatalog) {
  for (auto& e : catalog()) {
    Assignment a;
    for (auto& p : e.algebra.params()) a[p] = S("7/3");
    LieAlgebra l = instantiate(e, a);
    FactoredSpectrum fs = factor_spectrum(l);
    EXPECT_EQ(expand_spectrum(fs), char_poly(pencil(l))) << e.family;
    EXPECT_EQ(parse_spectrum(canonical_string(fs), fs.nvars()), fs) << e.family;
  }
}

TEST(Spectra, TriangularizationIsUpperTriangular) {
  LieAlgebra l = instantiate(find_entry(catalog(), "s_{5,3}^{0,1}"), {});
  TriangularFlag flag = triangularize_adapted(l);
  Matrix inv = *inverse(flag.basis);
  for (size_t i = 0; i < l.dim(); ++i) EXPECT_TRUE((inv * ad_basis(l, i) * flag.basis).is_upper_triangular());
  EXPECT_THROW(factor_spectrum(sl2()), Error);
}

TEST(Spectra, WeightTableOfOneParameterFamily) {
  LieAlgebra l = instantiate(find_entry(catalog(), "s_{3,1}^{1,1}"), {{"b", Scalar(2)}});
  WeightTable wt = weight_table(l);
  std::vector<std::string> w;
  for (auto& e : wt.weights) w.push_back(weight_string(e.form));
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<std::string>{"-z4", "3*z4", "4*z4"}));
  EXPECT_EQ(wt.k(), 4u);
  EXPECT_FALSE(wt.quotient_in_delta());
}
