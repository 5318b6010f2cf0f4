#pragma once

#include <string>

#include <json.hpp>

#include "fconn/dga.hpp"
#include "fconn/exptype.hpp"
#include "fconn/gaussmanin.hpp"
#include "fconn/localmodel.hpp"
#include "fconn/ncft.hpp"
#include "fconn/newton.hpp"
#include "fconn/quantum.hpp"
#include "fconn/toymodel.hpp"
#include "fconn/weyl.hpp"

namespace fconn {

// Ordered so that emitted reports keep a stable key order across runs.
using Json = nlohmann::ordered_json;

// wraps the underlying parser's failures into ParseError
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

// {"error": {"type": ..., "what": ...}}; the type is the exception class
// name when the message carries one as a prefix
Json error_to_json(const std::exception& e);

// Rational <-> "p" or "p/q" (integer JSON numbers also accepted on input)
Json json_of(const Rational& r);
Rational rational_from_json(const Json& j);

// Poly <-> coefficient array, constant term first
Json json_of(const Poly& p);
Poly poly_from_json(const Json& j, const std::string& var);

// RatFunc <-> {"num": [...], "den": [...]} (a lone array means den = 1)
Json json_of(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j, const std::string& var);

Json json_of(const RMatrix& m);
RMatrix rmatrix_from_json(const Json& j);

// {"var": ..., "matrix": [[RatFunc, ...], ...]}
Json json_of(const RationalConnection& conn);
RationalConnection connection_from_json(const Json& j);

// {"var": ..., "coeffs": [a_0 .. a_{r-1}]}; the monic leading a_r is implied
Json json_of(const ScalarOperator& op);
ScalarOperator operator_from_json(const Json& j);

Json json_of(const NewtonPolygon& np);
Json json_of(const JordanData& jd);
Json json_of(const ExpTypeReport& rep);
Json json_of(const MonodromySummary& ms);
Json json_of(const PipelineReport& rep);

// {"vars": [x, dx], "terms": [{"j": ..., "k": ..., "c": ...}, ...]}
Json json_of(const WeylElement& w);
WeylElement weyl_from_json(const Json& j);

// {"u": [[...]], "v": [[...]], "sigma": ...}
Json json_of(const LocalModel& m);
LocalModel local_model_from_json(const Json& j);
Json json_of(const FlandersReport& rep);

// {"var": ..., "min_exp": ..., "coeffs": [...]}
Json json_of(const LaurentPoly& w);
LaurentPoly laurent_from_json(const Json& j);
Json json_of(const GMSingularity& s);
Json json_of(const GMReport& rep);

// dimensions per degree plus the two degree-annotated matrix lists
Json json_of(const ToyInput& in);
ToyInput toy_input_from_json(const Json& j);
Json json_of(const ToyDModuleReport& rep);

// {"basis": [...], "degrees": [...], "unit": ..., "products": [[i,j,k,c],...],
//  "differential": [[i,j,c],...], "w": [...]}
Json json_of(const FiniteDGA& a);
FiniteDGA dga_from_json(const Json& j);
Json json_of(const NcftReport& rep);

}  // namespace fconn
