#include "fconn/quantum.hpp"

#include <algorithm>

namespace fconn {

namespace {

Matrix<RatFunc> zero_matrix(size_t n, const std::string& var) {
  return Matrix<RatFunc>(n, n, RatFunc::constant(Rational(0), var));
}

RationalConnection p1_connection() {
  Matrix<RatFunc> a = zero_matrix(2, "q");
  a.at(0, 1) = RatFunc::variable("q") * Rational(2);
  a.at(1, 0) = RatFunc::power("q", -1) * Rational(2);
  return {"q", a};
}

RationalConnection cubic_surface_block() {
  // nabla^Gr = d/dQ - Q^{-2} C + Q^{-1} diag(0,1,2)
  const long c[3][3] = {{0, 108, 252}, {1, 9, 36}, {0, 3, 0}};
  Matrix<RatFunc> a = zero_matrix(3, "Q");
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      RatFunc e = RatFunc::power("Q", -2) * Rational(-c[i][j]);
      if (i == j && i > 0) e = e + RatFunc::power("Q", -1) * Rational((long)i);
      a.at(i, j) = e;
    }
  return {"Q", a};
}

RationalConnection cubic_complementary_block() {
  // orthogonal complement of the symplectic class in H^2: quantum product
  // acts by -6 I, grading residue by I; six dimensions
  size_t n = 6;
  Matrix<RatFunc> a = zero_matrix(n, "Q");
  for (size_t i = 0; i < n; ++i)
    a.at(i, i) = RatFunc::power("Q", -2) * Rational(6) + RatFunc::power("Q", -1);
  return {"Q", a};
}

RationalConnection kkp_connection(bool shifted) {
  Matrix<RatFunc> a = zero_matrix(2, "q");
  a.at(0, 1) = RatFunc::power("q", -2) * Rational(-1);
  a.at(1, 0) = RatFunc::power("q", -1) * Rational(-1);
  a.at(1, 1) = RatFunc::power("q", -1) * Rational(-1, 2);
  if (shifted)
    for (size_t i = 0; i < 2; ++i) a.at(i, i) = a.at(i, i) + RatFunc::power("q", -2);
  return {"q", a};
}

Rational negate_mod1(const Rational& e) { return mod1(-e); }

}  // namespace

ExampleId example_id_from_string(const std::string& name) {
  if (name == "p1") return ExampleId::p1;
  if (name == "cubic_surface_block") return ExampleId::cubic_surface_block;
  if (name == "kkp_slope_half") return ExampleId::kkp_slope_half;
  if (name == "kkp_slope_one") return ExampleId::kkp_slope_one;
  throw Error("unknown example id: " + name);
}

std::string example_id_to_string(ExampleId id) {
  switch (id) {
    case ExampleId::p1: return "p1";
    case ExampleId::cubic_surface_block: return "cubic_surface_block";
    case ExampleId::kkp_slope_half: return "kkp_slope_half";
    case ExampleId::kkp_slope_one: return "kkp_slope_one";
  }
  throw Error("unknown example id");
}

ExampleBuild build_example(ExampleId id, bool complementary_block) {
  ExampleBuild b;
  b.name = example_id_to_string(id);
  switch (id) {
    case ExampleId::p1:
      b.conn = p1_connection();
      b.grading = GradingVector{{0, 2}};
      b.dim_c = 1;
      break;
    case ExampleId::cubic_surface_block:
      if (complementary_block) {
        b.conn = cubic_complementary_block();
        b.name += "_complementary";
      } else {
        b.conn = cubic_surface_block();
      }
      b.dim_c = 2;
      break;
    case ExampleId::kkp_slope_half:
      b.conn = kkp_connection(false);
      break;
    case ExampleId::kkp_slope_one:
      b.conn = kkp_connection(true);
      break;
  }
  return b;
}

PipelineReport analyze_pipeline(const RationalConnection& conn, const PipelineOptions& opt) {
  PipelineReport rep;
  rep.input = conn;
  rep.chart_trail.push_back(conn.var);

  RationalConnection cur = conn;
  if (opt.grading) {
    try {
      cur = grading_gauge(cur, *opt.grading);
      rep.chart_trail.push_back("grading");
    } catch (const Error& e) {
      rep.errors.push_back({"grading", e.what()});
    }
  }

  // the splitting runs on the chart where the quantum examples have their
  // irregular singularity: Q for graded inputs, the input chart otherwise
  RationalConnection conn_q = cur, conn_Q = cur;
  bool have_both = true;
  try {
    if (cur.var == "Q") {
      conn_q = change_chart(cur, "q");
      rep.chart_trail.push_back("q");
    } else {
      conn_Q = change_chart(cur, "Q");
      rep.chart_trail.push_back("Q");
    }
  } catch (const Error& e) {
    have_both = false;
    rep.errors.push_back({"chart", e.what()});
  }

  const RationalConnection& split_input = opt.grading || conn.var == "Q" ? conn_Q : cur;
  try {
    rep.exp_type = split_exponential_type(split_input, opt.order).first;
    rep.monodromy = regularized_monodromy_eigenvalues(*rep.exp_type);
  } catch (const Error& e) {
    rep.errors.push_back({"split", e.what()});
  }

  try {
    rep.op_q = cyclic_operator(conn_q).second;
    rep.newton_q = newton_polygon(*rep.op_q);
  } catch (const Error& e) {
    rep.errors.push_back({"newton_q", e.what()});
  }
  if (have_both) {
    try {
      rep.op_Q = cyclic_operator(conn_Q).second;
      rep.newton_Q = newton_polygon(*rep.op_Q);
    } catch (const Error& e) {
      rep.errors.push_back({"newton_Q", e.what()});
    }
  }

  if (opt.check_duality && rep.exp_type) {
    try {
      ExpTypeReport dual = split_exponential_type(dualize(split_input), opt.order).first;
      rep.duality.checked = true;
      rep.duality.lambda_negated = dual.lambdas.size() == rep.exp_type->lambdas.size();
      rep.duality.exponents_negated = rep.duality.lambda_negated;
      for (const auto& l : rep.exp_type->lambdas) {
        auto it = std::find_if(dual.lambdas.begin(), dual.lambdas.end(),
                               [&](const ExpTypeLambda& d) { return d.lambda == -l.lambda; });
        if (it == dual.lambdas.end() || it->multiplicity != l.multiplicity) {
          rep.duality.lambda_negated = false;
          rep.duality.exponents_negated = false;
          break;
        }
        std::vector<Rational> want;
        for (const auto& e : l.exponents) want.push_back(negate_mod1(e));
        std::sort(want.begin(), want.end());
        if (it->exponents != want) rep.duality.exponents_negated = false;
      }
    } catch (const Error& e) {
      rep.errors.push_back({"duality", e.what()});
    }
  }

  if (opt.dim_c) {
    rep.jordan_bound = *opt.dim_c + 1;
    if (rep.monodromy && rep.monodromy->max_jordan_block)
      rep.jordan_bound_ok = *rep.monodromy->max_jordan_block <= *rep.jordan_bound;
  }
  return rep;
}

}  // namespace fconn
