#include <algorithm>
#include <map>

#include "solvspec/poly.hpp"

namespace solvspec {

namespace {

struct GaussInt {
  mpz_class re, im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

// a / b when exact.
bool divides(const GaussInt& b, const GaussInt& a, GaussInt* q) {
  mpz_class n = norm(b);
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) return false;
  if (q) {
    mpz_divexact(q->re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q->im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  }
  return true;
}

mpz_class round_div(const mpz_class& a, const mpz_class& n) {
  mpz_class q;
  mpz_class twice = 2 * a + n;
  mpz_class den = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (norm(b) != 0) {
    mpz_class n = norm(b);
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    GaussInt q{round_div(re, n), round_div(im, n)};
    GaussInt qb = mul(q, b);
    GaussInt r{a.re - qb.re, a.im - qb.im};
    a = b;
    b = r;
  }
  return a;
}

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_integer(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000; ++p) {
    if (p * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[mpz_class(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_integer(d, out);
  factor_integer(n / d, out);
}

mpz_class sqrt_minus_one(const mpz_class& p) {
  mpz_class e = (p - 1) / 4;
  for (unsigned long a = 2;; ++a) {
    mpz_class x, base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = x * x + 1;
    if (mpz_divisible_p(sq.get_mpz_t(), p.get_mpz_t())) return x;
  }
}

// All divisors of z in Z[i], up to units when with_units is false.
std::vector<GaussInt> gaussian_divisors(const GaussInt& z, bool with_units) {
  std::map<mpz_class, unsigned> pf;
  factor_integer(norm(z), pf);
  std::vector<GaussInt> primes;
  for (auto& [p, e] : pf) {
    if (p == 2) {
      primes.push_back({1, 1});
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      primes.push_back({p, 0});
    } else {
      GaussInt pi = gauss_gcd({p, 0}, {sqrt_minus_one(p), 1});
      primes.push_back(pi);
      primes.push_back({pi.re, -pi.im});
    }
  }
  std::vector<GaussInt> divs{{1, 0}};
  GaussInt rest = z;
  for (auto& pi : primes) {
    unsigned e = 0;
    GaussInt q;
    while (divides(pi, rest, &q)) {
      rest = q;
      ++e;
    }
    std::vector<GaussInt> next;
    for (auto& d : divs) {
      GaussInt cur = d;
      for (unsigned k = 0; k <= e; ++k) {
        next.push_back(cur);
        cur = mul(cur, pi);
      }
    }
    divs = std::move(next);
  }
  if (!with_units) return divs;
  std::vector<GaussInt> all;
  const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (auto& d : divs)
    for (auto& u : units) all.push_back(mul(d, u));
  return all;
}

Gauss horner(const std::vector<Gauss>& c, const Gauss& x) {
  Gauss acc;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<Gauss> deflate(const std::vector<Gauss>& c, const Gauss& r) {
  size_t n = c.size() - 1;
  std::vector<Gauss> q(n);
  Gauss acc;
  for (size_t i = n; i-- > 0;) {
    acc = acc * r + c[i + 1];
    q[i] = acc;
  }
  return q;
}

}  // namespace

std::vector<Scalar> gaussian_roots(const MultiPoly& p, bool require_split) {
  if (p.is_zero()) throw Error(ErrorKind::ShapeMismatch, "roots of the zero polynomial");
  std::vector<Gauss> c;
  for (auto& s : univariate_coefficients(p)) c.push_back(s.constant());
  size_t degree = c.size() - 1;
  std::vector<Scalar> roots;
  while (c.size() > 1 && c[0].is_zero()) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  if (c.size() > 1) {
    mpz_class l = 1;
    for (auto& g : c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.re.get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.im.get_den_mpz_t());
    }
    auto to_int = [&](const Gauss& g) {
      mpq_class re = g.re * l, im = g.im * l;
      return GaussInt{re.get_num(), im.get_num()};
    };
    auto tops = gaussian_divisors(to_int(c[0]), true);
    auto bottoms = gaussian_divisors(to_int(c.back()), false);
    std::vector<Gauss> candidates;
    for (auto& d : tops)
      for (auto& b : bottoms) {
        Gauss r = Gauss(mpq_class(d.re), mpq_class(d.im)) / Gauss(mpq_class(b.re), mpq_class(b.im));
        candidates.push_back(r);
      }
    std::sort(candidates.begin(), candidates.end(), [](const Gauss& a, const Gauss& b) { return compare(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto& r : candidates) {
      while (c.size() > 1 && horner(c, r).is_zero()) {
        roots.emplace_back(r);
        c = deflate(c, r);
      }
      if (c.size() == 1) break;
    }
  }
  if (require_split && roots.size() < degree)
    throw Error(ErrorKind::DoesNotSplitOverField, canonical_string(p) + " has roots outside Q(i)");
  std::sort(roots.begin(), roots.end(), ScalarLess());
  return roots;
}

}  // namespace solvspec
