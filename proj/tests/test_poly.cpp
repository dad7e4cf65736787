#include <gtest/gtest.h>

#include <random>

#include "solvspec/poly.hpp"

using namespace solvspec;

namespace {

Scalar S(const std::string& s) { return parse_scalar(s); }

MultiPoly form(size_t n, std::vector<std::pair<size_t, std::string>> coeffs) {
  std::vector<Scalar> c(n);
  for (auto& [i, s] : coeffs) c[i] = S(s);
  return LinearForm(c).to_poly();
}

MultiPoly lambda_poly(std::vector<long> low_to_high) {
  std::vector<Scalar> c;
  for (long v : low_to_high) c.emplace_back(v);
  return univariate(c);
}

MultiPoly random_poly(std::mt19937_64& rng, size_t nvars, int terms) {
  MultiPoly p(nvars);
  std::uniform_int_distribution<int> coeff(-5, 5), ex(0, 2);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars);
    for (auto& x : e) x = ex(rng);
    p.add_term(e, Scalar(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST(MultiPoly, Arithmetic) {
  MultiPoly a = form(5, {{0, "1"}, {4, "1"}}), b = form(5, {{0, "1"}, {4, "-1"}});
  MultiPoly z0 = MultiPoly::variable(5, 0), z4 = MultiPoly::variable(5, 4);
  EXPECT_EQ(a * b, z0 * z0 - z4 * z4);
  MultiPoly q = z0.pow(2) * a.pow(2);
  EXPECT_EQ(q.exact_div(a), z0.pow(2) * a);
  MultiPoly p1 = MultiPoly::variable(1, 0).pow(2) + MultiPoly::constant(1, Scalar(1));
  MultiPoly p2 = MultiPoly::variable(1, 0) + MultiPoly::constant(1, Scalar(1));
  try {
    p1.exact_div(p2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InexactDivision);
  }
}

TEST(MultiPoly, Evaluate) {
  MultiPoly a = form(5, {{0, "1"}, {4, "1"}});
  MultiPoly q = MultiPoly::variable(5, 0).pow(2) * a.pow(2);
  EXPECT_EQ(q.evaluate({S("1"), S("0"), S("0"), S("0"), S("1")}), Scalar(4));
  MultiPoly r = q + MultiPoly::constant(5, S("7"));
  EXPECT_EQ(r.evaluate(std::vector<Scalar>(5)), Scalar(7));
  FactoredSpectrum fs = parse_spectrum("z0*(z0 + 2*b*z4)*(z0 + (1 - b)*z4)*(z0 + (1 + b)*z4)", 5);
  Scalar v = expand_spectrum(fs).evaluate({S("1"), S("0"), S("0"), S("0"), S("1")});
  EXPECT_EQ(v, S("(1+2*b)*(2-b)*(2+b)"));
}

TEST(MultiPoly, ExactDivisionProperty) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    MultiPoly p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 3);
    if (q.is_zero()) continue;
    ASSERT_EQ((p * q).exact_div(q), p);
  }
}

TEST(Spectrum, CanonicalString) {
  FactoredSpectrum fs = parse_spectrum("(z0+z4)*(z0-z4)*z0*(z0+2*z4)", 5);
  EXPECT_EQ(canonical_string(fs), "z0*(z0 - z4)*(z0 + z4)*(z0 + 2*z4)");
  EXPECT_EQ(canonical_string(MultiPoly(3)), "0");
  FactoredSpectrum s53 = parse_spectrum("z0^3*(z0+z6)*(z0+z8)*(z0+z6+z8)*(z0-z7+2*z8)*(z0+z6+z7-z8)", 9);
  EXPECT_EQ(canonical_string(s53), "z0^3*(z0 + z6)*(z0 + z8)*(z0 + z6 + z8)*(z0 - z7 + 2*z8)*(z0 + z6 + z7 - z8)");
  FactoredSpectrum f2 = parse_spectrum("z0*(z0-z6)*(z0-c*z6)*(z0+c*z6)*(z0+2*c*z6)*(z0+(c+1)*z6)", 7);
  EXPECT_EQ(canonical_string(f2), "z0*(z0 - z6)*(z0 - c*z6)*(z0 + c*z6)*(z0 + 2*c*z6)*(z0 + (1 + c)*z6)");
  EXPECT_EQ(parse_spectrum(canonical_string(f2), 7), f2);
  FactoredSpectrum neg = parse_spectrum("(z0 - (1+b)*z6)", 7);
  EXPECT_EQ(canonical_string(neg), "(z0 - (1 + b)*z6)");
}

TEST(Spectrum, ExpandAndMerge) {
  FactoredSpectrum fs = parse_spectrum("z0^2*(z0+z4)^2", 5);
  MultiPoly z0 = MultiPoly::variable(5, 0), l = form(5, {{0, "1"}, {4, "1"}});
  EXPECT_EQ(expand_spectrum(fs), z0 * z0 * l * l);
  EXPECT_EQ(expand_spectrum(parse_spectrum("z0", 1)), MultiPoly::variable(1, 0));
  FactoredSpectrum merged = parse_spectrum("(z0+b*z4)*(z0+z4)", 5).bind({{"b", S("1")}});
  EXPECT_EQ(merged.k(), 1u);
  EXPECT_EQ(merged.entries()[0].second, 2u);
}

TEST(Univariate, SquarefreeDegree) {
  // lambda^2 (lambda-1)^2
  MultiPoly p = lambda_poly({0, 0, 1, -2, 1});
  EXPECT_EQ(squarefree_degree(p), 2u);
  MultiPoly q = lambda_poly({0, 1}) * lambda_poly({-1, 1}) * lambda_poly({1, 1}) * lambda_poly({-2, 1});
  EXPECT_EQ(squarefree_degree(q), 4u);
  EXPECT_EQ(squarefree_degree(lambda_poly({0, 0, 0, 1})), 1u);
  for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(squarefree_degree(q.pow(k)), 4u);
}

TEST(Univariate, GaussianRoots) {
  auto r = gaussian_roots(lambda_poly({2, -1, -2, 1}), true);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], S("-1"));
  EXPECT_EQ(r[1], S("1"));
  EXPECT_EQ(r[2], S("2"));
  auto ri = gaussian_roots(lambda_poly({1, 0, 1}), true);
  ASSERT_EQ(ri.size(), 2u);
  EXPECT_EQ(ri[0], S("-i"));
  EXPECT_EQ(ri[1], S("i"));
  try {
    gaussian_roots(lambda_poly({-2, 0, 1}), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DoesNotSplitOverField);
  }
  EXPECT_TRUE(gaussian_roots(lambda_poly({-2, 0, 1}), false).empty());
}

TEST(Univariate, GaussianRootsProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<Scalar> roots;
    MultiPoly p = univariate({Scalar(1)});
    int n = 1 + t % 4;
    for (int k = 0; k < n; ++k) {
      Scalar r(Gauss(mpq_class(d(rng), 1 + (rng() % 3)), mpq_class(d(rng) * (t % 2), 1 + (rng() % 2))));
      roots.push_back(r);
      p = p * univariate({-r, Scalar(1)});
    }
    MultiPoly residual = univariate({Scalar(2), Scalar(0), Scalar(1)});  // lambda^2 + 2
    MultiPoly full = p * residual;
    auto found = gaussian_roots(full, false);
    std::sort(roots.begin(), roots.end(), ScalarLess());
    ASSERT_EQ(found, roots);
    MultiPoly rebuilt = residual;
    for (auto& r : found) rebuilt = rebuilt * univariate({-r, Scalar(1)});
    ASSERT_EQ(rebuilt, full);
  }
}

TEST(Interpolation, Examples) {
  std::vector<InterpolationSample> s;
  for (int b : {0, 1, 2}) s.push_back({{{"b", Scalar(b)}}, Scalar(1 - b)});
  EXPECT_EQ(interpolate_rational(s, 1, 0), S("1-b"));
  std::vector<InterpolationSample> m;
  for (int c : {2, 3, 4, 5}) {
    Scalar cv(c);
    m.push_back({{{"c", cv}}, (1 - cv) / (3 * cv + 1)});
  }
  EXPECT_EQ(interpolate_rational(m, 1, 1), S("(1-c)/(3*c+1)"));
  std::vector<InterpolationSample> bad = {{{{"b", Scalar(0)}}, Scalar(0)},
                                          {{{"b", Scalar(1)}}, Scalar(1)},
                                          {{{"b", Scalar(2)}}, Scalar(0)}};
  try {
    interpolate_rational(bad, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConsistentFunction);
  }
}

TEST(Interpolation, TwoParameters) {
  std::vector<InterpolationSample> s;
  for (int b : {2, 3, 4})
    for (int c : {7, 8, 9}) s.push_back({{{"b", Scalar(b)}, {"c", Scalar(c)}}, Scalar(b + c)});
  EXPECT_EQ(interpolate_rational(s, 1, 0), S("b+c"));
}

TEST(Json, Rendering) {
  MultiPoly p = form(2, {{0, "1"}, {1, "1/2"}});
  EXPECT_EQ(to_json(p), R"({"terms":[{"coeff":"1","exp":[1,0]},{"coeff":"1/2","exp":[0,1]}]})");
}
