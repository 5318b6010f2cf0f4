#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fconn/connection.hpp"
#include "fconn/jordan.hpp"

namespace fconn {

// One summand of the unramified exponential-type decomposition
// nabla = directsum_lambda e^{-lambda/q} (regular-singular part).
struct ExpTypeLambda {
  Rational lambda;
  int multiplicity = 0;
  Poly residue_char;                 // characteristic polynomial of the residue block
  std::vector<Rational> exponents;   // alpha in [0,1) meaning monodromy eigenvalue exp(-2*pi*i*alpha)
  std::optional<JordanData> jordan;  // absent when the block is resonant
  bool resonant = false;             // two residue eigenvalues differ by a nonzero integer
};

struct ExpTypeReport {
  std::vector<ExpTypeLambda> lambdas;  // ascending lambda
  bool certified = false;

  size_t rank() const {
    size_t r = 0;
    for (const auto& l : lambdas) r += (size_t)l.multiplicity;
    return r;
  }
};

// Splits a connection with pole order <= 2 at 0 into exponential-type normal
// form d/dq - q^{-2} Lambda + q^{-1} R + O(1) with Lambda = diag(lambda) and R
// block diagonal. The reported lambdas are the eigenvalues of -A_{-2}, so
// they match the displayed normal form. The gauge is T (a constant basis of
// generalized eigenspaces) times I + sum_{m>=1} G_m q^m with block-diagonal
// parts of G_m set to zero, which makes the output unique.
//
// A block whose leading term is lambda I plus a rank-1 square-zero nilpotent
// can still be of unramified type; its pole is lowered by a shearing gauge
// when the Moser-type condition holds, and the residue data is reported for
// the sheared block (see shear_residue in the implementation). Deeper
// degeneracy throws NonSemisimpleLeading.
//
// Throws NotQuadraticPole (pole order >= 3), NonSplitSpectrum (characteristic
// polynomial of the leading term has an irreducible factor of degree >= 2),
// NonSemisimpleLeading. A simple pole or no pole is the degenerate case
// lambda = 0 with the whole matrix as residue.
std::pair<ExpTypeReport, GaugeSeries> split_exponential_type(const RationalConnection& conn,
                                                             long order);
std::pair<ExpTypeReport, GaugeSeries> split_exponential_type(const Matrix<TruncSeries>& a,
                                                             long order);

// Per-lambda monodromy exponent multisets, plus the largest Jordan block size
// over all nonresonant residue blocks when Jordan data is present.
struct MonodromySummary {
  std::vector<std::pair<Rational, std::vector<Rational>>> per_lambda;
  std::optional<int> max_jordan_block;
};

MonodromySummary regularized_monodromy_eigenvalues(const ExpTypeReport& report);

}  // namespace fconn
