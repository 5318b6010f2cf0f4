#include "fconn/factor.hpp"

#include <algorithm>
#include <map>

#include "fconn/rational.hpp"

namespace fconn {

namespace {

constexpr unsigned long kTrialBound = 1000000;      // trial division limit
constexpr long kPrimeCertBound = 1000000000000L;    // kTrialBound^2
constexpr size_t kDivisorCap = 65536;               // per sample value
constexpr long kCandidateCap = 200000;              // interpolation attempts

// All positive divisors of |n|, certified complete. Factors by trial division
// up to kTrialBound; a leftover below kTrialBound^2 is provably prime, a
// larger one means we cannot certify.
std::vector<Integer> positive_divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  if (n == 0 || n == 1) return {Integer(1)};
  std::vector<std::pair<Integer, int>> primes;
  Integer rem = n;
  auto push_prime = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    primes.emplace_back(p, e);
  };
  if (mpz_even_p(rem.get_mpz_t())) push_prime(Integer(2));
  for (unsigned long f = 3; f <= kTrialBound; f += 2) {
    Integer ff((long)f);
    if (ff * ff > rem) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), f)) push_prime(ff);
  }
  if (rem > 1) {
    // no prime factor <= kTrialBound, so rem <= kTrialBound^2 certifies primality
    if (rem > Integer(kPrimeCertBound))
      throw FactorizationInconclusive("cannot factor integer " + rem.get_str());
    primes.emplace_back(rem, 1);
  }
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : primes) {
    size_t old = divs.size();
    Integer pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < old; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > kDivisorCap)
          throw FactorizationInconclusive("divisor count of " + n.get_str() + " too large");
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Content-free integer coefficient vector of a rational polynomial, with
// positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
  Integer l(1);
  for (const Rational& c : p.coeffs()) {
    Integer d = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> z;
  z.reserve(p.coeffs().size());
  Integer content(0);
  for (const Rational& c : p.coeffs()) {
    Rational scaled = c * Rational(l);
    z.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
  }
  if (content > 1)
    for (auto& zi : z) mpz_divexact(zi.get_mpz_t(), zi.get_mpz_t(), content.get_mpz_t());
  if (!z.empty() && z.back() < 0)
    for (auto& zi : z) zi = -zi;
  return z;
}

Rational eval_integer_poly(const std::vector<Integer>& z, const Rational& x) {
  Rational acc(0);
  for (size_t i = z.size(); i-- > 0;) acc = acc * x + Rational(z[i]);
  return acc;
}

Poly lagrange_interpolate(const std::string& var, const std::vector<Rational>& xs,
                          const std::vector<Rational>& vs) {
  Poly acc(var);
  for (size_t k = 0; k < xs.size(); ++k) {
    Poly term = Poly::constant(Rational(1), var);
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      term = term * (Poly::variable(var) - Poly::constant(xs[j], var));
      denom *= xs[k] - xs[j];
    }
    acc = acc + term * (vs[k] / denom);
  }
  return acc;
}

// Bounded Kronecker search applied to a monic squarefree polynomial of degree
// >= 4 with no rational roots. Returns the list of monic irreducible factors.
std::vector<Poly> kronecker_split(const Poly& p, long& budget) {
  long n = p.degree();
  if (n <= 3) return {p};  // squarefree, no rational roots, degree 2 or 3
  std::vector<Integer> z = primitive_integer_coeffs(p);

  for (long d = 2; d <= n / 2; ++d) {
    // sample points 0, 1, -1, 2, -2, ... where p is nonzero (always, since p
    // has no rational roots, but keep the guard for clarity)
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> divs;
    long probe = 0;
    while ((long)xs.size() < d + 1) {
      Rational x(probe);
      probe = probe > 0 ? -probe : -probe + 1;
      Rational v = eval_integer_poly(z, x);
      if (v == 0) continue;
      xs.push_back(x);
      divs.push_back(positive_divisors(v.get_num()));
    }

    // odometer over divisor choices; sign of the value at xs[0] is fixed to
    // positive since h and -h give the same factorization
    std::vector<size_t> idx(xs.size(), 0);
    std::vector<int> sign(xs.size(), 1);
    while (true) {
      if (--budget < 0) throw FactorizationInconclusive("factor search budget exceeded");
      std::vector<Rational> vs(xs.size());
      for (size_t k = 0; k < xs.size(); ++k)
        vs[k] = Rational(divs[k][idx[k]]) * sign[k];
      Poly h = lagrange_interpolate(p.var(), xs, vs);
      if (h.degree() == d) {
        bool integral = true;
        for (const Rational& c : h.coeffs())
          if (c.get_den() != 1) {
            integral = false;
            break;
          }
        if (integral) {
          Poly hm = h.monic();
          auto [q, r] = p.divrem(hm);
          if (r.is_zero()) {
            std::vector<Poly> out = kronecker_split(hm, budget);
            std::vector<Poly> rest = kronecker_split(q.monic(), budget);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
          }
        }
      }
      // advance odometer: flip sign first (except at position 0), then index
      size_t pos = 0;
      for (; pos < xs.size(); ++pos) {
        if (pos > 0 && sign[pos] == 1) {
          sign[pos] = -1;
          break;
        }
        sign[pos] = 1;
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
      }
      if (pos == xs.size()) break;
    }
  }
  return {p};  // no factor of degree <= n/2 divides, hence irreducible
}

}  // namespace

std::vector<Poly> yun_squarefree(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly dp = p.derivative();
  Poly g = gcd(p, dp);
  if (g.degree() == 0) {
    out.push_back(p.monic());
    return out;
  }
  Poly c = p.divrem(g).first;
  Poly d = dp.divrem(g).first - c.derivative();
  while (c.degree() > 0) {
    Poly a = gcd(c, d);
    out.push_back(a.monic());
    c = c.divrem(a).first;
    d = d.divrem(a).first - c.derivative();
  }
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() <= 0) return out;
  Poly work = p.monic();
  const std::string& var = p.var();

  long v = work.valuation_at_zero();
  if (v > 0) {
    out.emplace_back(Rational(0), (int)v);
    std::vector<Rational> c(work.coeffs().begin() + v, work.coeffs().end());
    work = Poly(var, c);
  }
  if (work.degree() > 0) {
    std::vector<Integer> z = primitive_integer_coeffs(work);
    std::vector<Integer> num_divs = positive_divisors(z.front());
    std::vector<Integer> den_divs = positive_divisors(z.back());
    std::vector<Rational> candidates;
    for (const Integer& a : num_divs)
      for (const Integer& b : den_divs) {
        Rational r(a, b);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rational& r : candidates) {
      if (work.eval(r) != 0) continue;
      Poly lin = Poly::variable(var) - Poly::constant(r, var);
      int mult = 0;
      while (true) {
        auto [q, rem] = work.divrem(lin);
        if (!rem.is_zero()) break;
        work = q;
        ++mult;
      }
      out.emplace_back(r, mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<Poly, int>> factor_over_rationals(const Poly& p) {
  if (p.is_zero()) throw Error("factor_over_rationals: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() == 0) return out;

  long budget = kCandidateCap;
  std::vector<Poly> sqfree = yun_squarefree(p);
  for (size_t i = 0; i < sqfree.size(); ++i) {
    int mult = (int)i + 1;
    Poly g = sqfree[i];
    if (g.degree() <= 0) continue;
    for (const auto& [r, m] : rational_roots(g)) {
      Poly lin = Poly::variable(p.var()) - Poly::constant(r, p.var());
      out.emplace_back(lin, mult * m);  // m = 1 in a squarefree part
      g = g.divrem(pow(lin, m)).first;
    }
    if (g.degree() > 0)
      for (const Poly& f : kronecker_split(g.monic(), budget)) out.emplace_back(f, mult);
  }

  // linear factors first, then by degree; within a degree higher multiplicity
  // first, ties by coefficient order
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace fconn
