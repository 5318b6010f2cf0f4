#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fconn/connection.hpp"
#include "fconn/matrix.hpp"
#include "fconn/rational.hpp"

namespace fconn {

// Cohomological input for the divisor-complement model: the cohomology of the
// ambient space M and of the divisor D, the restriction map (degree 0) and
// the pushforward (degree +2), both recorded per degree.
struct ToyInput {
  std::string name;
  std::vector<std::size_t> h_m;  // dim H^k(M), k = 0 .. 2 * complex_dimension
  std::vector<std::size_t> h_d;  // dim H^k(D), k = 0 .. 2 * complex_dimension - 2
  std::vector<RMatrix> restriction;  // [k]: H^k(M) -> H^k(D), shape h_d[k] x h_m[k]
  std::vector<RMatrix> pushforward;  // [k]: H^k(D) -> H^{k+2}(M), shape h_m[k+2] x h_d[k]
  long complex_dimension = 0;
};

// throws SchemaError when the degree ranges or matrix shapes are inconsistent
void validate_toy_input(const ToyInput& in);

// One monomial of H^*(M)[q,u] + (u/q) H^*(D)[u/q,u]: a class of cohomological
// degree deg (basis index idx within that degree), carried by q^expo (M side,
// expo >= 0) or (u/q)^expo (D side, expo >= 1), times u^uexp.
struct HquKey {
  bool d_part = false;
  long expo = 0;
  long uexp = 0;
  std::size_t deg = 0;
  std::size_t idx = 0;
  auto operator<=>(const HquKey&) const = default;
};

using HquElement = std::map<HquKey, Rational>;

void hqu_add_term(HquElement& e, const HquKey& k, const Rational& c);
HquElement hqu_scale(const HquElement& e, const Rational& c);
HquElement hqu_sum(const HquElement& a, const HquElement& b);
bool hqu_is_zero(const HquElement& e);
std::string hqu_str(const ToyInput& in, const HquElement& e);

// throws SchemaError when a key is out of range for the input
void validate_hqu_element(const ToyInput& in, const HquElement& e);

// Multiplication by q: q^j classes shift up; (u/q)^i theta drops to
// (u/q)^{i-1} (restriction(pushforward(theta)) - (i-1) u theta) for i > 1 and
// to pushforward(theta) for i = 1.
HquElement hqu_q_action(const ToyInput& in, const HquElement& e);

// The u-linear connection: mu |-> (u/q) restriction(mu); q^j mu |->
// u j q^{j-1} mu + q^{j-1} pushforward(restriction(mu)) for j > 0;
// (u/q)^i theta |-> (u/q)^{i+1} theta.
HquElement hqu_connection(const ToyInput& in, const HquElement& e);

// Smallest k with q^k e supported on the M side only (such k exists because
// each q application lowers the divisor exponent).
long q_power_to_m_part(const ToyInput& in, const HquElement& e);

// After inverting u, each total degree gives a module over qbar = q/u with a
// classical connection. Elements reuse HquKey with uexp = 0: the M side is
// qbar^expo mu, the D side qbar^{-expo} theta.
HquElement qbar_action(const ToyInput& in, const HquElement& e);
HquElement qbar_connection(const ToyInput& in, const HquElement& e);

struct ToyDModuleReport {
  int parity = 0;              // degree mod 2 of the classes examined
  long bound = 0;              // exponent range covered by the sweeps
  long cases = 0;
  bool commutator_hqu_ok = false;   // [connection, q] = u on H_{q,u}
  bool commutator_qbar_ok = false;  // [connection, qbar] = 1 after inverting u
  bool relation_m_ok = false;       // connection(m) = qbar^{-1} restriction(m)
  bool relation_t_ok = false;       // connection(qbar t) = restriction(pushforward(t))
  bool nabla_power_ok = false;      // connection^i t = qbar^{-1-i} theta
  std::string counterexample;
  bool all_ok() const {
    return commutator_hqu_ok && commutator_qbar_ok && relation_m_ok && relation_t_ok &&
           nabla_power_ok;
  }
};

// Verifies the module structure and the generator relations on every basis
// class of the given parity, with exponents up to the bound.
ToyDModuleReport toy_dmodule_check(const ToyInput& in, int parity, long bound);

// Matrix of pushforward(restriction(.)) on the parity part of H^*(M), i.e.
// the cup product with the divisor class, ordered by ascending degree.
RMatrix toy_divisor_cup_matrix(const ToyInput& in, int parity);

// Connection d/dq + N/q on H^{parity}(M) after inverting q, N the divisor cup
// product. N is nilpotent, so the only singularity is a regular one at 0 with
// unipotent monodromy.
RationalConnection toy_q_inverted_connection(const ToyInput& in, int parity);

ToyInput toy_cp1_pt();    // projective line with a point divisor
ToyInput toy_cp2_line();  // projective plane with a line divisor

}  // namespace fconn
