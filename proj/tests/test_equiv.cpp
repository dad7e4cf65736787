#include <gtest/gtest.h>

#include "solvspec/equiv.hpp"
#include "solvspec/spectra.hpp"
#include "test_support.hpp"

using namespace solvspec;
using namespace solvspec::testing;

TEST(Sem, SpecData) {
  SpecData want{{S("-1"), 1}, {S("0"), 1}, {S("1"), 1}};
  EXPECT_EQ(spec_data(sem_example_first()), want);
  EXPECT_EQ(spec_data(sem_example_second()), want);
  EXPECT_EQ(spec_data(Matrix::identity(3)), (SpecData{{S("1"), 3}}));
  EXPECT_THROW(spec_data(int_matrix({{0, -2}, {1, 0}})), Error);
}

TEST(Sem, Decisions) {
  EXPECT_EQ(sem_equivalent(sem_example_first(), sem_example_second()), S("1"));
  EXPECT_EQ(sem_equivalent(diag({1, 2}), diag({2, 4})), S("1/2"));
  EXPECT_FALSE(sem_equivalent(diag({1, 2}), diag({1, 3})).has_value());
  EXPECT_EQ(sem_equivalent(int_matrix({{0, 1}, {0, 0}}), Matrix(2, 2)), S("1"));
}

TEST(Sem, PencilIdentity) {
  EXPECT_TRUE(pencil_identity_holds(sem_example_first(), sem_example_second(), S("1")));
  EXPECT_TRUE(pencil_identity_holds(diag({3, 1}), diag({3, 1}), S("1")));
  EXPECT_FALSE(pencil_identity_holds(diag({1, 0}), diag({1, 1}), S("1")));
}

TEST(Sem, EquivalentToPencilIdentityOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    size_t n = static_cast<size_t>(rand_int(rng, 1, 4));
    std::vector<long> d1(n), d2(n);
    for (auto& x : d1) x = rand_int(rng, -3, 3);
    long scale = rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) ? 1 : -1);
    if (t % 2 == 0) {
      for (size_t i = 0; i < n; ++i) d2[i] = d1[(i + 1) % n] * scale;
    } else {
      for (auto& x : d2) x = rand_int(rng, -3, 3);
    }
    Matrix m1 = split_matrix(rng, d1), m2 = split_matrix(rng, d2);
    auto alpha = sem_equivalent(m1, m2);
    if (alpha) {
      EXPECT_TRUE(pencil_identity_holds(m1, m2, *alpha)) << "trial " << t;
    } else {
      for (long num = -9; num <= 9; ++num)
        for (long den = 1; den <= 9; ++den)
          if (num != 0) EXPECT_FALSE(pencil_identity_holds(m1, m2, Scalar::rational(num, den))) << "trial " << t;
    }
    if (t % 2 == 0) EXPECT_TRUE(alpha.has_value()) << "trial " << t;
  }
}

TEST(Se, ApplyChange) {
  FactoredSpectrum fs = parse_spectrum("z0*(z0 + z1)*(z0 + 2*z2)^2", 3);
  EXPECT_EQ(apply_change(fs, Matrix::identity(2)), fs);
  EXPECT_THROW(apply_change(fs, Matrix(2, 2)), Error);
  Matrix swap = int_matrix({{0, 1}, {1, 0}});
  EXPECT_EQ(apply_change(fs, swap), parse_spectrum("z0*(z0 + z2)*(z0 + 2*z1)^2", 3));
}

TEST(Se, IdenticalSpectraOfNonIsomorphicPair) {
  FactoredSpectrum a = factor_spectrum(find_entry(catalog(), "s_{5,1}^{0,1}").algebra);
  FactoredSpectrum b = factor_spectrum(find_entry(catalog(), "s_{5,1}^{0,4}").algebra);
  auto cov = se_equivalent(a, b);
  ASSERT_TRUE(cov.has_value());
  EXPECT_TRUE(cov->verified);
  EXPECT_EQ(cov->b, Matrix::identity(6));
}

TEST(Se, RejectsNonMonicAndMismatchedSignatures) {
  FactoredSpectrum monic = parse_spectrum("z0*(z0 + z1)", 2);
  FactoredSpectrum degenerate = parse_spectrum("z1*(z0 + z1)", 2);
  EXPECT_THROW(se_equivalent(monic, degenerate), Error);
  EXPECT_FALSE(se_equivalent(parse_spectrum("z0^2*(z0 + z1)", 2), parse_spectrum("z0*(z0 + z1)^2", 2)).has_value());
  EXPECT_FALSE(
      se_equivalent(parse_spectrum("z0*(z0 + z1)*(z0 + 2*z1)", 3), parse_spectrum("z0*(z0 + z1)*(z0 + z2)", 3))
          .has_value());
}

TEST(Se, RoundTripAndEquivalenceRelation) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    size_t nvars = static_cast<size_t>(rand_int(rng, 2, 5));
    FactoredSpectrum fs = random_spectrum(rng, nvars);
    Matrix r = random_invertible(rng, nvars - 1), r2 = random_invertible(rng, nvars - 1);
    FactoredSpectrum target = apply_change(fs, r), third = apply_change(target, r2);
    auto b = se_equivalent(fs, target);
    ASSERT_TRUE(b.has_value()) << "trial " << t;
    EXPECT_EQ(apply_change(fs, b->b), target);
    EXPECT_EQ(target.k(), fs.k());
    EXPECT_EQ(apply_change(target, *inverse(b->b)), fs);
    auto c = se_equivalent(target, third);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(apply_change(fs, c->b * b->b), third);
    auto self = se_equivalent(fs, fs);
    ASSERT_TRUE(self.has_value());
  }
}

TEST(Notions, AbelianNilradicalAgreement) {
  NotionsReport scaled = compare_notions(abelian_extension(diag({1, 2, 3})), abelian_extension(diag({2, 4, 6})));
  EXPECT_EQ(scaled.sem, S("1/2"));
  EXPECT_TRUE(scaled.se.has_value());
  EXPECT_TRUE(scaled.agree());

  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    size_t n = static_cast<size_t>(rand_int(rng, 1, 4));
    std::vector<long> d1(n), d2(n);
    for (auto& x : d1) x = rand_int(rng, -2, 2);
    if (t % 2 == 0) {
      for (size_t i = 0; i < n; ++i) d2[i] = -2 * d1[n - 1 - i];
    } else {
      for (auto& x : d2) x = rand_int(rng, -2, 2);
    }
    NotionsReport r = compare_notions(abelian_extension(split_matrix(rng, d1)), abelian_extension(split_matrix(rng, d2)));
    EXPECT_TRUE(r.agree()) << "trial " << t;
  }
}

TEST(Notions, HeisenbergPairs) {
  const LieAlgebra& a = find_entry(catalog(), "s_{3,1}^{0,1}").algebra;
  const LieAlgebra& b = find_entry(catalog(), "s_{3,1}^{0,2}").algebra;
  NotionsReport r = compare_notions(a, b);
  EXPECT_FALSE(r.se.has_value());
  EXPECT_EQ(factor_spectrum(a).k(), 2u);
  EXPECT_EQ(factor_spectrum(b).k(), 4u);
  NotionsReport self = compare_notions(b, b);
  EXPECT_EQ(self.sem, S("1"));
  EXPECT_TRUE(self.se.has_value());
}
