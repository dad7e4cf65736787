#include <gtest/gtest.h>

#include "solvspec/heisenberg.hpp"
#include "solvspec/spectra.hpp"
#include "test_support.hpp"

using namespace solvspec;
using namespace solvspec::testing;

TEST(Heisenberg, SpecViolations) {
  HeisenbergExtensionSpec s;
  s.m = 1;
  s.a = {Scalar(1)};
  s.x = {int_matrix({{1, 0}, {0, 1}})};
  s.r = Matrix(1, 1);
  auto v = spec_violations(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "X1 is not symplectic");
  EXPECT_THROW(build_extension(s), Error);

  s.x = {int_matrix({{1, 0}, {0, -1}})};
  EXPECT_TRUE(spec_violations(s).empty());
  s.a = {Scalar(2)};
  EXPECT_FALSE(spec_violations(s).empty());
  s.canonical = false;
  EXPECT_TRUE(spec_violations(s).empty());

  HeisenbergExtensionSpec two;
  two.m = 1;
  two.a = {Scalar(1), Scalar(0)};
  two.x = {int_matrix({{1, 0}, {0, -1}}), int_matrix({{0, 1}, {0, 0}})};
  two.r = Matrix(2, 2);
  auto w = spec_violations(two);
  EXPECT_NE(std::find(w.begin(), w.end(), "X1 and X2 do not commute"), w.end());
}

TEST(Heisenberg, ClosedFormMatchesPencilOnRandomSpecs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    HeisenbergExtensionSpec s = random_spec(rng);
    ASSERT_TRUE(spec_violations(s).empty()) << "trial " << t;
    LieAlgebra l = build_extension(s);
    ASSERT_TRUE(validate_lie(l).ok) << "trial " << t;
    MultiPoly q = char_poly(pencil(l));
    EXPECT_EQ(closed_form_Q(s), q) << "trial " << t;
    MultiPoly z0 = MultiPoly::variable(q.nvars(), 0);
    EXPECT_NO_THROW(q.exact_div(z0.pow(static_cast<unsigned>(s.f())))) << "trial " << t;
  }
}

TEST(Heisenberg, ExtractRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    HeisenbergExtensionSpec s = random_spec(rng);
    HeisenbergExtensionSpec back = extract_spec(build_extension(s), s.m);
    EXPECT_EQ(back.a, s.a);
    EXPECT_EQ(back.x, s.x);
    EXPECT_EQ(back.r, s.r);
  }
}

TEST(Heisenberg, RealizeRepeatedWeightsGivesTwoAlgebras) {
  FactoredSpectrum target = parse_spectrum("z0^3*(z0 + z6)^3", 7);
  auto specs = realize_from_factors(2, 1, target);
  ASSERT_EQ(specs.size(), 2u);
  std::vector<size_t> dims;
  for (auto& s : specs) {
    LieAlgebra l = build_extension(s);
    EXPECT_EQ(factor_spectrum(l), target);
    dims.push_back(series(l, SeriesKind::Derived).at(1).dim());
  }
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<size_t>{3, 4}));
}

TEST(Heisenberg, RealizeRejectsInfeasibleTargets) {
  EXPECT_THROW(realize_from_factors(1, 1, parse_spectrum("z0*(z0 + z4)*(z0 + 2*z4)*(z0 + 5*z4)", 5)), Error);
  EXPECT_THROW(realize_from_factors(1, 1, parse_spectrum("z0^2*(z0 + z1)^2", 5)), Error);
}

TEST(Heisenberg, RealizeReproducesCatalogSpectra) {
  for (auto& e : catalog()) {
    if (!e.algebra.params().empty()) continue;
    unsigned m = (e.heis_dim - 1) / 2;
    auto specs = realize_from_factors(m, e.ext_dim, expected_spectrum(e));
    ASSERT_FALSE(specs.empty()) << e.family;
    EXPECT_EQ(factor_spectrum(build_extension(specs[0])), expected_spectrum(e)) << e.family;
  }
}
