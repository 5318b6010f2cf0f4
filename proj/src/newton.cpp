#include "fconn/newton.hpp"

#include <algorithm>
#include <random>

namespace fconn {

std::vector<RatFunc> connection_apply(const RationalConnection& conn,
                                      const std::vector<RatFunc>& v) {
  size_t n = conn.rank();
  std::vector<RatFunc> out(n, RatFunc::constant(Rational(0), conn.var));
  for (size_t i = 0; i < n; ++i) {
    RatFunc acc = v[i].derivative();
    for (size_t j = 0; j < n; ++j) acc = acc + conn.a.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

// Krylov matrix (v | nabla v | ... | nabla^{r-1} v) plus the next iterate.
struct Krylov {
  Matrix<RatFunc> k;
  std::vector<RatFunc> next;
};

Krylov krylov_of(const RationalConnection& conn, const std::vector<RatFunc>& v) {
  size_t r = conn.rank();
  Matrix<RatFunc> k(r, r, RatFunc::constant(Rational(0), conn.var));
  std::vector<RatFunc> cur = v;
  for (size_t j = 0; j < r; ++j) {
    for (size_t i = 0; i < r; ++i) k.at(i, j) = cur[i];
    cur = connection_apply(conn, cur);
  }
  return {std::move(k), std::move(cur)};
}

}  // namespace

std::pair<std::vector<RatFunc>, ScalarOperator> cyclic_operator(
    const RationalConnection& conn) {
  size_t r = conn.rank();
  const std::string& var = conn.var;
  RatFunc zero = RatFunc::constant(Rational(0), var);

  std::vector<std::vector<RatFunc>> candidates;
  for (size_t len = 1; len <= r; ++len) {
    std::vector<RatFunc> v(r, zero);
    for (size_t i = 0; i < len; ++i)
      v[i] = RatFunc(Poly::monomial(Rational(1), i, var));
    candidates.push_back(std::move(v));
  }
  // reproducible fallback: small random polynomial entries, seed fixed
  std::mt19937 rng(0);
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<RatFunc> v(r, zero);
    bool nonzero = false;
    for (size_t i = 0; i < r; ++i) {
      std::vector<Rational> c(2 + (size_t)(attempt / 8));
      for (auto& x : c) x = Rational(coeff_dist(rng));
      Poly p(var, c);
      if (!p.is_zero()) nonzero = true;
      v[i] = RatFunc(p);
    }
    if (nonzero) candidates.push_back(std::move(v));
  }

  for (const auto& v : candidates) {
    Krylov kr = krylov_of(conn, v);
    if (rank(kr.k) != r) continue;
    std::vector<RatFunc> rhs(r, zero);
    for (size_t i = 0; i < r; ++i) rhs[i] = -kr.next[i];
    auto sol = solve_linear(kr.k, rhs, zero);
    // full rank makes the system uniquely solvable
    ScalarOperator op{var, *sol};
    op.coeffs.push_back(RatFunc::constant(Rational(1), var));
    return {v, op};
  }
  throw Error("cyclic vector search exhausted");  // unreachable for rank >= 1
}

NewtonPolygon newton_polygon(const ScalarOperator& op) {
  NewtonPolygon out;
  for (size_t i = 0; i < op.coeffs.size(); ++i) {
    const RatFunc& a = op.coeffs[i];
    if (a.is_zero()) continue;
    long val = a.num().valuation_at_zero() - a.den().valuation_at_zero();
    out.points.emplace_back((long)i, val - (long)i);
  }

  // the quarter-planes extend left to x = 0, which the hull sees as an extra
  // corner at (0, min y)
  long min_y = out.points[0].second;
  for (const auto& [x, y] : out.points) min_y = std::min(min_y, y);
  std::vector<std::pair<long, long>> pts = out.points;
  pts.emplace_back(0L, min_y);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // monotone-chain lower hull
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull[hull.size() - 1];
      // drop the middle point when it lies on or above the chord
      if ((long long)(x2 - x1) * (p.second - y1) - (long long)(y2 - y1) * (p.first - x1) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  out.vertices = hull;

  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    long dx = hull[k + 1].first - hull[k].first;
    long dy = hull[k + 1].second - hull[k].second;
    Rational slope(dy, dx);
    slope.canonicalize();
    if (!out.slopes.empty() && out.slopes.back().first == slope)
      out.slopes.back().second += dx;
    else
      out.slopes.emplace_back(slope, dx);
  }

  out.fuchs_regular = true;
  out.unramified_necessary = true;
  for (const auto& [s, len] : out.slopes) {
    if (s != 0) out.fuchs_regular = false;
    if (s != 0 && s != 1) out.unramified_necessary = false;
  }
  return out;
}

RationalConnection conjugate_constant(const RationalConnection& conn, const RMatrix& g) {
  RMatrix ginv = inverse_field(g, Rational(0), Rational(1));
  auto lift = [&](const RMatrix& m) {
    return m.map([&](const Rational& r) { return RatFunc::constant(r, conn.var); });
  };
  Matrix<RatFunc> out = lift(ginv) * conn.a * lift(g);
  return RationalConnection{conn.var, out};
}

}  // namespace fconn
