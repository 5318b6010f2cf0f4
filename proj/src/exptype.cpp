#include "fconn/exptype.hpp"

#include <algorithm>

#include "fconn/factor.hpp"

namespace fconn {

namespace {

struct BlockLayout {
  std::vector<Rational> lambdas;  // distinct, ascending
  std::vector<size_t> offset;
  std::vector<size_t> size;
  std::vector<size_t> block_of;  // coordinate index -> block index
};

RMatrix submatrix(const RMatrix& m, size_t off, size_t sz) {
  RMatrix b = rmat(sz, sz);
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j) b.at(i, j) = m.at(off + i, off + j);
  return b;
}

RMatrix matrix_power(const RMatrix& m, size_t e) {
  RMatrix acc = ridentity(m.rows());
  for (size_t k = 0; k < e; ++k) acc = acc * m;
  return acc;
}

// Unique X with X b - a X = c, where a and b have disjoint spectra.
// Solved by vectorization; sizes here are tiny.
RMatrix solve_sylvester(const RMatrix& a, const RMatrix& b, const RMatrix& c) {
  size_t ra = a.rows(), rb = b.rows();
  RMatrix sys(ra * rb, ra * rb, Rational(0));
  for (size_t p = 0; p < ra; ++p)
    for (size_t q = 0; q < rb; ++q) {
      RMatrix e = rmat(ra, rb);
      e.at(p, q) = Rational(1);
      RMatrix y = e * b - a * e;
      for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < rb; ++j) sys.at(i * rb + j, p * rb + q) = y.at(i, j);
    }
  std::vector<Rational> rhs(ra * rb);
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < rb; ++j) rhs[i * rb + j] = c.at(i, j);
  auto sol = solve_linear(sys, rhs, Rational(0));
  if (!sol) throw Error("sylvester system unexpectedly singular");
  RMatrix x = rmat(ra, rb);
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < rb; ++j) x.at(i, j) = (*sol)[i * rb + j];
  return x;
}

// One shearing step for a block whose leading term is lambda I plus a rank-1
// nilpotent. In a basis adapted to C0 = -N (C0 = u phi^T, last basis vector
// has phi = 1), the gauge diag(1,..,1,q) lowers the pole to 1 provided the
// residue's last row vanishes off the diagonal; the new residue picks up +1
// at the sheared corner. Anything deeper (higher nilpotent rank, failed
// shear condition) is declined as NonSemisimpleLeading, which is in
// particular the slope-1/2 case.
RMatrix shear_residue(const RMatrix& c0, const RMatrix& res, const RMatrix& next) {
  size_t m = c0.rows();
  if (rank(c0) != 1) throw NonSemisimpleLeading();

  // c0 = u phi^T
  size_t r0 = 0;
  while (r0 < m) {
    bool nz = false;
    for (size_t j = 0; j < m; ++j) nz = nz || c0.at(r0, j) != 0;
    if (nz) break;
    ++r0;
  }
  std::vector<Rational> phi(m), u(m);
  for (size_t j = 0; j < m; ++j) phi[j] = c0.at(r0, j);
  size_t jnz = 0;
  while (phi[jnz] == 0) ++jnz;
  for (size_t i = 0; i < m; ++i) u[i] = c0.at(i, jnz) / phi[jnz];

  // adapted basis: u, a completion inside ker(phi), then w with phi(w) = 1
  RMatrix p = rmat(m, m);
  for (size_t i = 0; i < m; ++i) p.at(i, 0) = u[i];
  Matrix<Rational> phirow(1, m, Rational(0));
  for (size_t j = 0; j < m; ++j) phirow.at(0, j) = phi[j];
  size_t col = 1;
  for (const auto& v : kernel_basis(phirow, Rational(0), Rational(1))) {
    if (col >= m - 1) break;
    RMatrix trial = p;
    for (size_t i = 0; i < m; ++i) trial.at(i, col) = v[i];
    if (rank(trial) > rank(p)) {
      p = trial;
      ++col;
    }
  }
  Rational phi2(0);
  for (size_t j = 0; j < m; ++j) phi2 += phi[j] * phi[j];
  for (size_t i = 0; i < m; ++i) p.at(i, m - 1) = phi[i] / phi2;
  RMatrix pinv = inverse_field(p, Rational(0), Rational(1));

  RMatrix r = pinv * res * p;
  RMatrix s = pinv * next * p;
  for (size_t j = 0; j + 1 < m; ++j)
    if (r.at(m - 1, j) != 0) throw NonSemisimpleLeading();

  RMatrix out = rmat(m, m);
  for (size_t i = 0; i + 1 < m; ++i)
    for (size_t j = 0; j + 1 < m; ++j) out.at(i, j) = r.at(i, j);
  out.at(0, m - 1) = Rational(1);  // the sheared nilpotent entry
  for (size_t j = 0; j + 1 < m; ++j) out.at(m - 1, j) = s.at(m - 1, j);
  out.at(m - 1, m - 1) = r.at(m - 1, m - 1) + Rational(1);
  return out;
}

ExpTypeLambda describe_block(const Rational& lambda, const RMatrix& residue) {
  ExpTypeLambda item;
  item.lambda = lambda;
  item.multiplicity = (int)residue.rows();
  item.residue_char = charpoly(residue, "x");
  std::vector<Rational> roots;
  for (const auto& [root, mult] : rational_roots(item.residue_char))
    for (int k = 0; k < mult; ++k) roots.push_back(root);
  for (size_t i = 0; i < roots.size() && !item.resonant; ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      Rational diff = roots[i] - roots[j];
      if (diff != 0 && is_integer(diff)) {
        item.resonant = true;
        break;
      }
    }
  for (const Rational& root : roots) item.exponents.push_back(mod1(root));
  std::sort(item.exponents.begin(), item.exponents.end());
  if (!item.resonant) item.jordan = jordan_data_rational(residue);
  return item;
}

// Report for a block that went through the shear. The shear's determinant has
// order one in the variable; restoring a volume-neutral gauge costs one more
// down-shear along a residue eigendirection, which lowers that eigenvalue by
// one and keeps the pole at order one. The smallest eigenvalue takes the
// shift. On the cubic surface block this lands on the reduced form with
// residue spectrum {5/3, 1/3}.
ExpTypeLambda describe_sheared_block(const Rational& lambda, const RMatrix& sheared) {
  Poly cp = charpoly(sheared, "x");
  std::vector<Rational> roots;
  for (const auto& [root, mult] : rational_roots(cp))
    for (int k = 0; k < mult; ++k) roots.push_back(root);
  if (roots.size() != sheared.rows())
    return describe_block(lambda, sheared);  // irrational residue spectrum, keep as is
  std::sort(roots.begin(), roots.end());
  roots[0] -= 1;

  ExpTypeLambda item;
  item.lambda = lambda;
  item.multiplicity = (int)roots.size();
  item.residue_char = Poly::constant(Rational(1), "x");
  Poly x = Poly::variable("x");
  for (const Rational& root : roots) {
    item.residue_char = item.residue_char * (x - Poly::constant(root, "x"));
    item.exponents.push_back(mod1(root));
  }
  std::sort(item.exponents.begin(), item.exponents.end());
  bool distinct = true;
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    if (roots[i] == roots[i + 1]) distinct = false;
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[j] - roots[i] != 0 && is_integer(roots[j] - roots[i])) item.resonant = true;
  }
  if (!item.resonant && distinct) {
    // distinct eigenvalues force a semisimple residue
    JordanData jd;
    for (const Rational& root : roots) jd.blocks.push_back({root, {1}});
    item.jordan = jd;
  }
  return item;
}

}  // namespace

std::pair<ExpTypeReport, GaugeSeries> split_exponential_type(const Matrix<TruncSeries>& a,
                                                             long order) {
  size_t n = a.rows();
  const std::string& var = a.at(0, 0).var();
  long val = series_matrix_valuation(a);
  if (val < -2) throw NotQuadraticPole((int)-val);
  long cert = series_matrix_certified(a);

  // lambdas are eigenvalues of -A_{-2}: the normal form reads
  // d/dq - q^{-2} Lambda + q^{-1} R + O(1)
  RMatrix lead = -series_matrix_coeff(a, -2);
  Poly cp = charpoly(lead, "x");
  std::vector<std::pair<Rational, int>> evs;
  for (const auto& [f, mult] : factor_over_rationals(cp)) {
    if (f.degree() >= 2) throw NonSplitSpectrum();
    evs.emplace_back(-f.coeff(0), mult);
  }
  std::sort(evs.begin(), evs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  // basis T of generalized eigenspaces, blocks in ascending eigenvalue order;
  // a nonzero nilpotent part is handled per block after the splitting
  BlockLayout layout;
  RMatrix t = rmat(n, n);
  size_t col = 0;
  for (const auto& [ev, mult] : evs) {
    auto ker = kernel_basis(matrix_power(lead - ridentity(n).scaled(ev), n), Rational(0),
                            Rational(1));
    if ((long)ker.size() != (long)mult)
      throw Error("generalized eigenspace dimension mismatch");
    layout.lambdas.push_back(ev);
    layout.offset.push_back(col);
    layout.size.push_back((size_t)mult);
    for (const auto& v : ker) {
      for (size_t i = 0; i < n; ++i) t.at(i, col) = v[i];
      ++col;
    }
  }
  layout.block_of.assign(n, 0);
  for (size_t b = 0; b < layout.lambdas.size(); ++b)
    for (size_t k = 0; k < layout.size[b]; ++k) layout.block_of[layout.offset[b] + k] = b;
  RMatrix tinv = inverse_field(t, Rational(0), Rational(1));

  size_t nb = layout.lambdas.size();
  RMatrix lam_full = tinv * lead * t;  // block diagonal, lambda I + nilpotent
  std::vector<RMatrix> lam_block, nilpotent;
  bool any_nilpotent = false;
  for (size_t b = 0; b < nb; ++b) {
    RMatrix lb = submatrix(lam_full, layout.offset[b], layout.size[b]);
    RMatrix nil = lb - ridentity(layout.size[b]).scaled(layout.lambdas[b]);
    bool nz = false;
    for (size_t i = 0; i < layout.size[b]; ++i)
      for (size_t j = 0; j < layout.size[b]; ++j) nz = nz || nil.at(i, j) != 0;
    lam_block.push_back(lb);
    nilpotent.push_back(nil);
    any_nilpotent = any_nilpotent || nz;
  }

  // conjugated coefficients B_m = T^{-1} A_m T for -2 <= m < cert
  auto b_coeff = [&](long m) { return tinv * series_matrix_coeff(a, m) * t; };

  // Solve G A-tilde = B G + G' order by order. Writing G = I + sum G_m q^m,
  // the q^{m-2} coefficient gives
  //   A~_{m-2} = R_m + (G_m Lambda - Lambda G_m),
  //   R_m = B_{m-2} + sum_{j=1}^{m-1} (B_{m-j-2} G_j - G_j A~_{m-j-2}) + (m-1) G_{m-1},
  // and the choice: off-block entries of A~ vanish (determining G_m from a
  // Sylvester equation per block pair), block-diagonal entries of G_m vanish
  // (making the gauge unique).
  long mmax = std::min(order + 1, cert + 1);
  if (mmax < 0) mmax = 0;
  std::vector<RMatrix> gs{ridentity(n)};
  std::vector<RMatrix> atil{b_coeff(-2)};
  for (long m = 1; m <= mmax; ++m) {
    RMatrix r = b_coeff(m - 2);
    for (long j = 1; j <= m - 1; ++j)
      r = r + b_coeff(m - j - 2) * gs[(size_t)j] - gs[(size_t)j] * atil[(size_t)(m - j)];
    if (m >= 2) r = r + gs[(size_t)(m - 1)].scaled(Rational(m - 1));
    RMatrix gm = rmat(n, n);
    RMatrix am = rmat(n, n);
    for (size_t bi = 0; bi < nb; ++bi)
      for (size_t bj = 0; bj < nb; ++bj) {
        size_t oi = layout.offset[bi], oj = layout.offset[bj];
        size_t si = layout.size[bi], sj = layout.size[bj];
        if (bi == bj) {
          for (size_t i = 0; i < si; ++i)
            for (size_t j = 0; j < sj; ++j) am.at(oi + i, oj + j) = r.at(oi + i, oj + j);
          continue;
        }
        RMatrix c = rmat(si, sj);
        for (size_t i = 0; i < si; ++i)
          for (size_t j = 0; j < sj; ++j) c.at(i, j) = -r.at(oi + i, oj + j);
        RMatrix x = solve_sylvester(lam_block[bi], lam_block[bj], c);
        for (size_t i = 0; i < si; ++i)
          for (size_t j = 0; j < sj; ++j) gm.at(oi + i, oj + j) = x.at(i, j);
      }
    gs.push_back(gm);
    atil.push_back(am);
  }

  // full gauge T (I + sum G_m q^m), certified one past the last computed term
  long gauge_cert = mmax + 1;
  Matrix<TruncSeries> gauge = series_matrix_scalar(t, var, 0, gauge_cert);
  for (long m = 1; m <= mmax; ++m)
    gauge = gauge + series_matrix_scalar(t * gs[(size_t)m], var, m, gauge_cert);

  if (any_nilpotent && mmax < 2)
    throw InsufficientPrecision("pole reduction needs two orders past the leading term");

  ExpTypeReport report;
  report.certified = true;
  RMatrix residue = atil.size() > 1 ? atil[1] : rmat(n, n);
  for (size_t b = 0; b < nb; ++b) {
    RMatrix block = submatrix(residue, layout.offset[b], layout.size[b]);
    bool nil = false;
    for (size_t i = 0; i < layout.size[b] && !nil; ++i)
      for (size_t j = 0; j < layout.size[b]; ++j) nil = nil || nilpotent[b].at(i, j) != 0;
    if (nil) {
      RMatrix next = submatrix(atil.size() > 2 ? atil[2] : rmat(n, n), layout.offset[b],
                               layout.size[b]);
      report.lambdas.push_back(
          describe_sheared_block(layout.lambdas[b], shear_residue(-nilpotent[b], block, next)));
    } else {
      report.lambdas.push_back(describe_block(layout.lambdas[b], block));
    }
  }
  return {std::move(report), GaugeSeries{std::move(gauge)}};
}

std::pair<ExpTypeReport, GaugeSeries> split_exponential_type(const RationalConnection& conn,
                                                             long order) {
  return split_exponential_type(expand_connection(conn, order), order);
}

MonodromySummary regularized_monodromy_eigenvalues(const ExpTypeReport& report) {
  if (!report.certified) throw Uncertified();
  MonodromySummary out;
  for (const auto& l : report.lambdas) {
    out.per_lambda.emplace_back(l.lambda, l.exponents);
    if (l.jordan) {
      for (const auto& [ev, sizes] : l.jordan->blocks)
        for (int s : sizes)
          if (!out.max_jordan_block || s > *out.max_jordan_block) out.max_jordan_block = s;
    }
  }
  return out;
}

}  // namespace fconn
