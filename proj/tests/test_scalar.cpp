#include <gtest/gtest.h>

#include <random>

#include "solvspec/scalar.hpp"

using namespace solvspec;

namespace {

Scalar S(const std::string& s) { return parse_scalar(s); }

Scalar random_scalar(std::mt19937_64& rng, int level) {
  auto big = [&]() {
    long v = static_cast<long>(rng() >> 1);
    if (rng() & 1) v = -v;
    return mpz_class(std::to_string(v));
  };
  auto rat = [&]() {
    mpz_class d = big();
    if (d == 0) d = 1;
    return mpq_class(big(), abs(d));
  };
  Gauss g(rat(), level >= 1 ? rat() : mpq_class(0));
  if (level < 2) return Scalar(g);
  std::uniform_int_distribution<int> small(-3, 3);
  ParamPoly num, den;
  for (int t = 0; t < 3; ++t) {
    Monomial m;
    int eb = rng() % 2, ec = rng() % 2;
    if (eb) m.emplace_back("b", eb);
    if (ec) m.emplace_back("c", ec);
    num.add_term(m, Gauss(small(rng)));
    Monomial m2;
    if (rng() % 2) m2.emplace_back("b", 1);
    den.add_term(m2, Gauss(small(rng)));
  }
  if (num.is_zero()) num = ParamPoly(Gauss(1));
  if (den.is_zero()) den = ParamPoly(Gauss(2));
  return Scalar(g) * Scalar(num, den);
}

}  // namespace

TEST(Scalar, Arithmetic) {
  EXPECT_EQ(S("1/3") + S("1/6"), S("1/2"));
  EXPECT_EQ(S("(1+i)*(1-i)"), Scalar(2));
  EXPECT_TRUE(S("(1+i)*(1-i)").is_rational());
  EXPECT_THROW(S("1") / S("0"), Error);
}

TEST(Scalar, MobiusInvolution) {
  Scalar c = Scalar::symbol("c");
  Scalar f = (1 - c) / (3 * c + 1);
  Scalar ff = (1 - f) / (3 * f + 1);
  EXPECT_EQ(ff, c);
}

TEST(Scalar, Normalize) {
  EXPECT_EQ(S("(2*b)/2"), S("b"));
  EXPECT_EQ(S("(-b)/(-1)"), S("b"));
  EXPECT_EQ(S("(b^2-1)/(b-1)"), S("b+1"));
  Scalar x = S("(b^2*c - c)/(2*b*c + 2*c)");
  EXPECT_EQ(x, S("(b-1)/2"));
  EXPECT_EQ(S("(b*c+b)/(c^2-1)").denominator().str(), "-1 + c");
}

TEST(Scalar, Bind) {
  Scalar f = S("(1-b)/(3*b+1)");
  EXPECT_EQ(bind_params(f, {{"b", S("1/3")}}), S("1/3"));
  EXPECT_EQ(bind_params(S("b"), {{"b", Scalar(0)}}), Scalar(0));
  EXPECT_THROW(bind_params(S("1/(c+1)"), {{"c", Scalar(-1)}}), Error);
  try {
    bind_params(S("1/(c+1)"), {{"c", Scalar(-1)}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtAssignment);
  }
  try {
    bind_params(S("b+c"), {{"c", Scalar(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundSymbol);
  }
}

TEST(Scalar, PrintRoundTrip) {
  const char* cases[] = {"1/2 + 3/4*i", "(1 - c)/(1 + 3*c)", "1 - b", "b + c", "-i", "2*i", "-7/3",
                         "b^2*c - 1/2*b", "(1 + i)*b", "b/(2*c)", "(b + c)/(b*c)", "0", "1 + i + b"};
  for (const char* c : cases) {
    Scalar s = S(c);
    EXPECT_EQ(S(s.str()), s) << c;
    EXPECT_EQ(S(s.str()).str(), s.str()) << c;
  }
  EXPECT_EQ(S("(1-c)/(3*c+1)").str(), "(1 - c)/(1 + 3*c)");
  EXPECT_EQ(S("1/2+3/4*i").str(), "1/2 + 3/4*i");
  EXPECT_EQ(S("c+b").str(), "b + c");
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(S("1 +"), Error);
  EXPECT_THROW(S("(b"), Error);
  EXPECT_THROW(S("b $ c"), Error);
}

TEST(Scalar, OrderIsTotal) {
  std::vector<Scalar> v = {S("b"), S("1"), S("-1"), S("i"), S("1-b"), S("2*b"), S("1+b")};
  std::sort(v.begin(), v.end(), ScalarLess());
  EXPECT_EQ(v[0], S("-1"));
  EXPECT_EQ(v[1], S("i"));
  EXPECT_EQ(v[2], S("1"));
  for (size_t i = 0; i + 1 < v.size(); ++i) EXPECT_LT(compare(v[i], v[i + 1]), 0);
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, RandomTriples) {
  int level = GetParam();
  std::mt19937_64 rng(1234 + level);
  int count = level == 2 ? 150 : 1000;
  for (int t = 0; t < count; ++t) {
    Scalar a = random_scalar(rng, level), b = random_scalar(rng, level), c = random_scalar(rng, level);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a - a, Scalar());
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
  }
}

INSTANTIATE_TEST_SUITE_P(Levels, FieldAxioms, ::testing::Values(0, 1, 2));

TEST(Scalar, BindIsHomomorphism) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    Scalar a = random_scalar(rng, 2), b = random_scalar(rng, 2);
    Assignment pt{{"b", Scalar(static_cast<long>(rng() % 7) + 5)}, {"c", Scalar(mpq_class(static_cast<long>(rng() % 5) + 1, 3))}};
    Scalar ab, bb;
    try {
      ab = bind_params(a, pt);
      bb = bind_params(b, pt);
    } catch (const Error&) {
      continue;
    }
    ASSERT_EQ(bind_params(a + b, pt), ab + bb);
    ASSERT_EQ(bind_params(a * b, pt), ab * bb);
  }
}

TEST(ParamPoly, Gcd) {
  ParamPoly b = ParamPoly::symbol("b"), c = ParamPoly::symbol("c"), one(Gauss(1));
  ParamPoly g = (b + c) * (b - one);
  ParamPoly h = (b + c) * (c + one) * (c + one);
  EXPECT_EQ(gcd(g, h), (b + c).monic());
  EXPECT_EQ(gcd(b * b - one, b - one), b - one);
  EXPECT_TRUE(gcd(b, c).is_constant());
}
