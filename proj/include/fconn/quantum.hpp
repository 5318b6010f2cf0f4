#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fconn/connection.hpp"
#include "fconn/exptype.hpp"
#include "fconn/newton.hpp"

namespace fconn {

enum class ExampleId { p1, cubic_surface_block, kkp_slope_half, kkp_slope_one };

ExampleId example_id_from_string(const std::string& name);
std::string example_id_to_string(ExampleId id);

struct ExampleBuild {
  std::string name;
  RationalConnection conn;
  std::optional<GradingVector> grading;  // present when the input still needs the Gr gauge
  std::optional<int> dim_c;              // complex dimension, when the example has one
};

// Constant matrices of the worked quantum-connection examples. The cubic
// builder returns the 3x3 invariant block; with complementary_block it
// returns instead the orthogonal complement of the symplectic class inside
// H^2, where the quantum product acts by -6 I and the grading residue by I.
ExampleBuild build_example(ExampleId id, bool complementary_block = false);

struct PipelineOptions {
  std::optional<GradingVector> grading;
  std::optional<int> dim_c;
  long order = 12;
  bool check_duality = true;
};

struct PipelineError {
  std::string stage;
  std::string what;
};

struct DualityCheck {
  bool checked = false;
  bool lambda_negated = false;     // dual lambda multiset is the negation
  bool exponents_negated = false;  // exponents pair up as mod-1 negations under lambda -> -lambda
};

struct PipelineReport {
  RationalConnection input;
  std::vector<std::string> chart_trail;
  std::optional<ExpTypeReport> exp_type;  // computed on the Q-side form
  std::optional<MonodromySummary> monodromy;
  std::optional<ScalarOperator> op_q, op_Q;
  std::optional<NewtonPolygon> newton_q, newton_Q;
  DualityCheck duality;
  std::optional<int> jordan_bound;  // dim_c + 1 when dim_c given
  bool jordan_bound_ok = true;
  std::vector<PipelineError> errors;
};

// Runs grading gauge (if given), both chart changes, the exponential-type
// splitting on the Q-side, Newton polygons from cyclic vectors in both
// charts, and the duality comparison. Stage failures are recorded in
// errors and never abort the remaining stages.
PipelineReport analyze_pipeline(const RationalConnection& conn, const PipelineOptions& opt);

}  // namespace fconn
