#include "fconn/toymodel.hpp"

#include <sstream>

namespace fconn {

namespace {

// degree beyond which H^*(D) vanishes; h_d is indexed 0 .. 2 dim - 2
bool has_divisor_degree(const ToyInput& in, std::size_t k) {
  return k < in.h_d.size();
}

// column idx of restriction[k] as (row, coeff) pairs; empty above the top
// degree of the divisor
std::vector<std::pair<std::size_t, Rational>> restrict_column(const ToyInput& in, std::size_t k,
                                                              std::size_t idx) {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (!has_divisor_degree(in, k)) return out;
  const RMatrix& m = in.restriction[k];
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.at(r, idx) != 0) out.push_back({r, m.at(r, idx)});
  return out;
}

// column idx of pushforward[k], landing in H^{k+2}(M)
std::vector<std::pair<std::size_t, Rational>> push_column(const ToyInput& in, std::size_t k,
                                                          std::size_t idx) {
  std::vector<std::pair<std::size_t, Rational>> out;
  const RMatrix& m = in.pushforward[k];
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.at(r, idx) != 0) out.push_back({r, m.at(r, idx)});
  return out;
}

// restriction(pushforward(.)) on H^k(D), landing in H^{k+2}(D)
std::vector<std::pair<std::size_t, Rational>> push_then_restrict(const ToyInput& in,
                                                                 std::size_t k, std::size_t idx) {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (!has_divisor_degree(in, k + 2)) return out;
  std::map<std::size_t, Rational> acc;
  for (const auto& [mid, c1] : push_column(in, k, idx))
    for (const auto& [r, c2] : restrict_column(in, k + 2, mid)) acc[r] += c2 * c1;
  for (const auto& [r, c] : acc)
    if (c != 0) out.push_back({r, c});
  return out;
}

// pushforward(restriction(.)) on H^k(M), landing in H^{k+2}(M); this is the
// cup product with the divisor class
std::vector<std::pair<std::size_t, Rational>> restrict_then_push(const ToyInput& in,
                                                                 std::size_t k, std::size_t idx) {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (!has_divisor_degree(in, k)) return out;
  std::map<std::size_t, Rational> acc;
  for (const auto& [mid, c1] : restrict_column(in, k, idx))
    for (const auto& [r, c2] : push_column(in, k, mid)) acc[r] += c2 * c1;
  for (const auto& [r, c] : acc)
    if (c != 0) out.push_back({r, c});
  return out;
}

void require_uexp_zero(const HquElement& e, const char* who) {
  for (const auto& [k, c] : e) {
    (void)c;
    if (k.uexp != 0) throw SchemaError(std::string(who) + " expects u-free elements");
  }
}

}  // namespace

void validate_toy_input(const ToyInput& in) {
  if (in.complex_dimension < 1) throw SchemaError("complex dimension must be at least 1");
  const std::size_t n = (std::size_t)in.complex_dimension;
  if (in.h_m.size() != 2 * n + 1)
    throw SchemaError("h_m must list degrees 0 .. 2 * complex_dimension");
  if (in.h_d.size() != 2 * n - 1)
    throw SchemaError("h_d must list degrees 0 .. 2 * complex_dimension - 2");
  if (in.restriction.size() != in.h_d.size())
    throw SchemaError("restriction needs one matrix per divisor degree");
  if (in.pushforward.size() != in.h_d.size())
    throw SchemaError("pushforward needs one matrix per divisor degree");
  for (std::size_t k = 0; k < in.h_d.size(); ++k) {
    if (in.restriction[k].rows() != in.h_d[k] || in.restriction[k].cols() != in.h_m[k])
      throw SchemaError("restriction[" + std::to_string(k) + "] has the wrong shape");
    if (in.pushforward[k].rows() != in.h_m[k + 2] || in.pushforward[k].cols() != in.h_d[k])
      throw SchemaError("pushforward[" + std::to_string(k) + "] has the wrong shape");
  }
}

void validate_hqu_element(const ToyInput& in, const HquElement& e) {
  for (const auto& [k, c] : e) {
    (void)c;
    if (k.uexp < 0) throw SchemaError("negative u exponent");
    if (k.d_part) {
      if (k.expo < 1) throw SchemaError("divisor part needs a positive u/q exponent");
      if (k.deg >= in.h_d.size() || k.idx >= in.h_d[k.deg])
        throw SchemaError("divisor class index out of range");
    } else {
      if (k.expo < 0) throw SchemaError("negative q exponent");
      if (k.deg >= in.h_m.size() || k.idx >= in.h_m[k.deg])
        throw SchemaError("ambient class index out of range");
    }
  }
}

void hqu_add_term(HquElement& e, const HquKey& k, const Rational& c) {
  if (c == 0) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) e.erase(it);
}

HquElement hqu_scale(const HquElement& e, const Rational& c) {
  HquElement out;
  if (c == 0) return out;
  for (const auto& [k, v] : e) out.emplace(k, v * c);
  return out;
}

HquElement hqu_sum(const HquElement& a, const HquElement& b) {
  HquElement out = a;
  for (const auto& [k, v] : b) hqu_add_term(out, k, v);
  return out;
}

bool hqu_is_zero(const HquElement& e) { return e.empty(); }

std::string hqu_str(const ToyInput& in, const HquElement& e) {
  (void)in;
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (k.uexp != 0) os << " u^" << k.uexp;
    if (k.d_part)
      os << " (u/q)^" << k.expo << " D" << k.deg << ":" << k.idx;
    else if (k.expo != 0)
      os << " q^" << k.expo << " M" << k.deg << ":" << k.idx;
    else
      os << " M" << k.deg << ":" << k.idx;
  }
  return os.str();
}

HquElement hqu_q_action(const ToyInput& in, const HquElement& e) {
  HquElement out;
  for (const auto& [k, c] : e) {
    if (!k.d_part) {
      HquKey up = k;
      up.expo += 1;
      hqu_add_term(out, up, c);
      continue;
    }
    if (k.expo == 1) {
      // q (u/q) theta = pushforward(theta)
      for (const auto& [r, w] : push_column(in, k.deg, k.idx))
        hqu_add_term(out, HquKey{false, 0, k.uexp, k.deg + 2, r}, c * w);
      continue;
    }
    // q (u/q)^i theta = (u/q)^{i-1} (restr(push(theta)) - (i-1) u theta)
    for (const auto& [r, w] : push_then_restrict(in, k.deg, k.idx))
      hqu_add_term(out, HquKey{true, k.expo - 1, k.uexp, k.deg + 2, r}, c * w);
    hqu_add_term(out, HquKey{true, k.expo - 1, k.uexp + 1, k.deg, k.idx},
                 c * Rational(-(k.expo - 1)));
  }
  return out;
}

HquElement hqu_connection(const ToyInput& in, const HquElement& e) {
  HquElement out;
  for (const auto& [k, c] : e) {
    if (k.d_part) {
      HquKey up = k;
      up.expo += 1;
      hqu_add_term(out, up, c);
      continue;
    }
    if (k.expo == 0) {
      // mu |-> (u/q) restriction(mu)
      for (const auto& [r, w] : restrict_column(in, k.deg, k.idx))
        hqu_add_term(out, HquKey{true, 1, k.uexp, k.deg, r}, c * w);
      continue;
    }
    // q^j mu |-> u j q^{j-1} mu + q^{j-1} push(restr(mu))
    hqu_add_term(out, HquKey{false, k.expo - 1, k.uexp + 1, k.deg, k.idx}, c * Rational(k.expo));
    for (const auto& [r, w] : restrict_then_push(in, k.deg, k.idx))
      hqu_add_term(out, HquKey{false, k.expo - 1, k.uexp, k.deg + 2, r}, c * w);
  }
  return out;
}

long q_power_to_m_part(const ToyInput& in, const HquElement& e) {
  long worst = 0;
  for (const auto& [k, c] : e) {
    (void)c;
    if (k.d_part && k.expo > worst) worst = k.expo;
  }
  HquElement cur = e;
  long steps = 0;
  while (steps <= worst) {
    bool clean = true;
    for (const auto& [k, c] : cur) {
      (void)c;
      if (k.d_part) {
        clean = false;
        break;
      }
    }
    if (clean) return steps;
    cur = hqu_q_action(in, cur);
    ++steps;
  }
  // each application lowers the largest divisor exponent, so this is
  // unreachable for validated input
  throw Error("q action failed to clear the divisor part");
}

HquElement qbar_action(const ToyInput& in, const HquElement& e) {
  require_uexp_zero(e, "qbar_action");
  HquElement out;
  for (const auto& [k, c] : e) {
    if (!k.d_part) {
      HquKey up = k;
      up.expo += 1;
      hqu_add_term(out, up, c);
      continue;
    }
    if (k.expo == 1) {
      for (const auto& [r, w] : push_column(in, k.deg, k.idx))
        hqu_add_term(out, HquKey{false, 0, 0, k.deg + 2, r}, c * w);
      continue;
    }
    // qbar qbar^{-i} theta = qbar^{1-i} (restr(push(theta)) - (i-1) theta)
    for (const auto& [r, w] : push_then_restrict(in, k.deg, k.idx))
      hqu_add_term(out, HquKey{true, k.expo - 1, 0, k.deg + 2, r}, c * w);
    hqu_add_term(out, HquKey{true, k.expo - 1, 0, k.deg, k.idx}, c * Rational(-(k.expo - 1)));
  }
  return out;
}

HquElement qbar_connection(const ToyInput& in, const HquElement& e) {
  require_uexp_zero(e, "qbar_connection");
  HquElement out;
  for (const auto& [k, c] : e) {
    if (k.d_part) {
      HquKey up = k;
      up.expo += 1;
      hqu_add_term(out, up, c);
      continue;
    }
    if (k.expo == 0) {
      for (const auto& [r, w] : restrict_column(in, k.deg, k.idx))
        hqu_add_term(out, HquKey{true, 1, 0, k.deg, r}, c * w);
      continue;
    }
    hqu_add_term(out, HquKey{false, k.expo - 1, 0, k.deg, k.idx}, c * Rational(k.expo));
    for (const auto& [r, w] : restrict_then_push(in, k.deg, k.idx))
      hqu_add_term(out, HquKey{false, k.expo - 1, 0, k.deg + 2, r}, c * w);
  }
  return out;
}

ToyDModuleReport toy_dmodule_check(const ToyInput& in, int parity, long bound) {
  validate_toy_input(in);
  if (bound < 1) throw SchemaError("exponent bound must be at least 1");
  ToyDModuleReport rep;
  rep.parity = ((parity % 2) + 2) % 2;
  rep.bound = bound;
  rep.commutator_hqu_ok = true;
  rep.commutator_qbar_ok = true;
  rep.relation_m_ok = true;
  rep.relation_t_ok = true;
  rep.nabla_power_ok = true;

  auto fail = [&](bool& flag, const std::string& what, const HquElement& diff) {
    flag = false;
    if (rep.counterexample.empty()) rep.counterexample = what + ": " + hqu_str(in, diff);
  };

  std::vector<HquKey> m_keys, d_keys;
  for (std::size_t k = rep.parity; k < in.h_m.size(); k += 2)
    for (std::size_t i = 0; i < in.h_m[k]; ++i)
      for (long j = 0; j <= bound; ++j) m_keys.push_back({false, j, 0, k, i});
  for (std::size_t k = rep.parity; k < in.h_d.size(); k += 2)
    for (std::size_t i = 0; i < in.h_d[k]; ++i)
      for (long j = 1; j <= bound; ++j) d_keys.push_back({true, j, 0, k, i});

  auto all_keys = m_keys;
  all_keys.insert(all_keys.end(), d_keys.begin(), d_keys.end());

  for (const HquKey& key : all_keys) {
    HquElement x;
    x.emplace(key, Rational(1));
    // [nabla, q] x = u x on the full q, u module
    HquElement lhs = hqu_sum(hqu_connection(in, hqu_q_action(in, x)),
                             hqu_scale(hqu_q_action(in, hqu_connection(in, x)), Rational(-1)));
    HquKey ux = key;
    ux.uexp += 1;
    HquElement want;
    want.emplace(ux, Rational(1));
    HquElement diff = hqu_sum(lhs, hqu_scale(want, Rational(-1)));
    ++rep.cases;
    if (!hqu_is_zero(diff)) fail(rep.commutator_hqu_ok, "[nabla, q] != u", diff);

    // [nabla, qbar] x = x per total degree after inverting u
    HquElement qlhs = hqu_sum(qbar_connection(in, qbar_action(in, x)),
                              hqu_scale(qbar_action(in, qbar_connection(in, x)), Rational(-1)));
    HquElement qdiff = hqu_sum(qlhs, hqu_scale(x, Rational(-1)));
    ++rep.cases;
    if (!hqu_is_zero(qdiff)) fail(rep.commutator_qbar_ok, "[nabla, qbar] != 1", qdiff);
  }

  // generator relations of the presentation: nabla m = qbar^{-1} restriction(m)
  for (std::size_t k = rep.parity; k < in.h_m.size(); k += 2)
    for (std::size_t i = 0; i < in.h_m[k]; ++i) {
      HquElement m;
      m.emplace(HquKey{false, 0, 0, k, i}, Rational(1));
      HquElement want;
      for (const auto& [r, w] : restrict_column(in, k, i))
        hqu_add_term(want, HquKey{true, 1, 0, k, r}, w);
      HquElement diff = hqu_sum(qbar_connection(in, m), hqu_scale(want, Rational(-1)));
      ++rep.cases;
      if (!hqu_is_zero(diff)) fail(rep.relation_m_ok, "nabla m != restriction(m)", diff);
    }

  for (std::size_t k = rep.parity; k < in.h_d.size(); k += 2)
    for (std::size_t i = 0; i < in.h_d[k]; ++i) {
      HquElement t;
      t.emplace(HquKey{true, 1, 0, k, i}, Rational(1));
      // nabla(qbar t) = restriction(pushforward(t))
      HquElement want;
      for (const auto& [r, w] : push_then_restrict(in, k, i))
        hqu_add_term(want, HquKey{true, 1, 0, k + 2, r}, w);
      HquElement diff =
          hqu_sum(qbar_connection(in, qbar_action(in, t)), hqu_scale(want, Rational(-1)));
      ++rep.cases;
      if (!hqu_is_zero(diff))
        fail(rep.relation_t_ok, "nabla(qbar t) != restriction(pushforward(t))", diff);

      // nabla^i t = qbar^{-1-i} theta, so the powers stay a basis
      HquElement cur = t;
      for (long j = 1; j <= bound; ++j) {
        cur = qbar_connection(in, cur);
        HquElement pow_want;
        pow_want.emplace(HquKey{true, 1 + j, 0, k, i}, Rational(1));
        HquElement pdiff = hqu_sum(cur, hqu_scale(pow_want, Rational(-1)));
        ++rep.cases;
        if (!hqu_is_zero(pdiff)) fail(rep.nabla_power_ok, "nabla^i t != qbar^{-1-i} theta", pdiff);
      }
    }

  return rep;
}

RMatrix toy_divisor_cup_matrix(const ToyInput& in, int parity) {
  validate_toy_input(in);
  const std::size_t p = (std::size_t)(((parity % 2) + 2) % 2);
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t k = p; k < in.h_m.size(); k += 2)
    for (std::size_t i = 0; i < in.h_m[k]; ++i) {
      pos[{k, i}] = basis.size();
      basis.push_back({k, i});
    }
  RMatrix n = rmat(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto [k, i] = basis[j];
    for (const auto& [r, w] : restrict_then_push(in, k, i)) n.at(pos.at({k + 2, r}), j) += w;
  }
  return n;
}

RationalConnection toy_q_inverted_connection(const ToyInput& in, int parity) {
  RMatrix n = toy_divisor_cup_matrix(in, parity);
  const std::string var = "q";
  Matrix<RatFunc> a(n.rows(), n.cols(), RatFunc(var));
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j)
      if (n.at(i, j) != 0)
        a.at(i, j) = RatFunc::constant(n.at(i, j), var) * RatFunc::power(var, -1);
  return RationalConnection{var, a};
}

ToyInput toy_cp1_pt() {
  ToyInput in;
  in.name = "cp1_pt";
  in.complex_dimension = 1;
  in.h_m = {1, 0, 1};
  in.h_d = {1};
  in.restriction = {rmat({{Rational(1)}})};
  in.pushforward = {rmat({{Rational(1)}})};
  return in;
}

ToyInput toy_cp2_line() {
  ToyInput in;
  in.name = "cp2_line";
  in.complex_dimension = 2;
  in.h_m = {1, 0, 1, 0, 1};
  in.h_d = {1, 0, 1};
  in.restriction = {rmat({{Rational(1)}}), rmat(0, 0), rmat({{Rational(1)}})};
  in.pushforward = {rmat({{Rational(1)}}), rmat(0, 0), rmat({{Rational(1)}})};
  return in;
}

}  // namespace fconn
