#include <gtest/gtest.h>

#include "solvspec/bounds.hpp"
#include "solvspec/spectra.hpp"
#include "test_support.hpp"

using namespace solvspec;
using namespace solvspec::testing;

namespace {

LieAlgebra at(const std::string& fam, const Assignment& a = {}) { return instantiate(find_entry(catalog(), fam), a); }

HeisenbergExtensionSpec spec_of(const std::string& fam) {
  const CatalogEntry& e = find_entry(catalog(), fam);
  return extract_spec(e.algebra, (e.heis_dim - 1) / 2);
}

}  // namespace

TEST(Bounds, DeltaLowerBound) {
  DeltaBound d = delta_lower_bound(at("s_{3,1}^{0,1}"));
  EXPECT_EQ(d.delta, 2u);
  EXPECT_TRUE(d.equality);
  DeltaBound e = delta_lower_bound(at("s_{3,2}^{0,1}"));
  EXPECT_EQ(e.delta, 3u);
  EXPECT_FALSE(e.equality);
  EXPECT_TRUE(e.spans_dual);
  EXPECT_EQ(k_invariant(at("s_{3,2}^{0,1}")), 4u);
  DeltaBound n = delta_lower_bound(build_heisenberg(1));
  EXPECT_EQ(n.delta, 1u);
}

TEST(Bounds, AbelianExtensionFormula) {
  EXPECT_EQ(abelian_extension_k(at("s_{3,1}^{1,1}", {{"b", Scalar(2)}})), 4u);
  EXPECT_EQ(abelian_extension_k(at("s_{3,1}^{1,1}", {{"b", Scalar(0)}})), 2u);
  HeisenbergExtensionSpec twisted;
  twisted.m = 1;
  twisted.a = {Scalar(0), Scalar(0)};
  twisted.x = {int_matrix({{1, 0}, {0, -1}}), int_matrix({{2, 0}, {0, -2}})};
  twisted.r = int_matrix({{0, 1}, {-1, 0}});
  try {
    abelian_extension_k(build_extension(twisted));
    FAIL() << "expected NotAbelianComplement";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotAbelianComplement);
  }
  LieAlgebra line({"x"});
  line.set_nilradical({0});
  EXPECT_EQ(abelian_extension_k(line), 1u);
}

TEST(Bounds, HeisenbergBound) {
  HeisenbergBound b = heisenberg_bound(spec_of("s_{3,1}^{0,2}"));
  EXPECT_EQ(b.bound, 4u);
  EXPECT_TRUE(b.sharp());
  HeisenbergBound c = heisenberg_bound(spec_of("s_{5,3}^{0,1}"));
  EXPECT_EQ(c.bound, 6u);
  EXPECT_TRUE(c.sharp());
  HeisenbergBound d = heisenberg_bound(spec_of("s_{5,1}^{0,1}"));
  EXPECT_EQ(d.bound, 6u);
  EXPECT_EQ(d.k, 2u);
}

TEST(Bounds, AzariYang) {
  EXPECT_EQ(azari_yang_bound(at("s_{3,1}^{0,2}")), 4u);
  EXPECT_EQ(azari_yang_bound(build_heisenberg(2)), 1u);
  LieAlgebra l = at("s_{3,1}^{1,1}", {{"b", Scalar(2)}});
  EXPECT_EQ(azari_yang_bound(l), 4u);
  EXPECT_EQ(heisenberg_set_formula(extract_spec(l, 1)), 4u);
}

TEST(Bounds, EveryCatalogSampleIsBracketed) {
  for (auto& e : catalog()) {
    unsigned m = (e.heis_dim - 1) / 2;
    for (auto& s : e.samples) {
      BoundReport r = bound_report(instantiate(e, s), m);
      std::string at = e.family + " @ " + assignment_string(s);
      EXPECT_TRUE(r.delta_ok()) << at;
      EXPECT_TRUE(r.heisenberg_ok()) << at;
      ASSERT_TRUE(r.set_formula.has_value()) << at;
      EXPECT_EQ(*r.set_formula, r.azari_yang) << at;
      if (e.ext_dim == 1) {
        EXPECT_TRUE(r.ok()) << at;
        ASSERT_TRUE(r.abelian_k.has_value());
        EXPECT_EQ(*r.abelian_k, r.k);
      }
    }
  }
}

// Per-generator eigenvalue counts stay below k once several extension generators act independently.
TEST(Bounds, PerGeneratorCountFailsForHigherRankExtensions) {
  BoundReport r = bound_report(at("s_{5,3}^{0,1}"), 2);
  EXPECT_EQ(r.k, 6u);
  EXPECT_EQ(r.azari_yang, 4u);
  EXPECT_FALSE(r.azari_yang_ok());
  BoundReport q = bound_report(at("s_{5,2}^{0,2}"), 2);
  EXPECT_EQ(q.k, 6u);
  EXPECT_EQ(q.azari_yang, 4u);
}
