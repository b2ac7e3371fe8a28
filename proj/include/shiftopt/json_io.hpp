#pragma once

#include <json.hpp>

#include "shiftopt/cocycle.hpp"
#include "shiftopt/dbar.hpp"
#include "shiftopt/experiments.hpp"
#include "shiftopt/jsr.hpp"
#include "shiftopt/lyapunov.hpp"
#include "shiftopt/measures.hpp"
#include "shiftopt/perturb.hpp"
#include "shiftopt/symbolic.hpp"
#include "shiftopt/weights.hpp"

namespace shiftopt {

// Key order is part of the output contract (byte-identical reruns), so
// everything goes through ordered_json.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "shiftopt/1";

// Exact scalars travel as "p/q" strings and survive a round trip bit for
// bit; floating scalars travel as JSON numbers. Integers and strings parse
// back as exact.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json sequence_to_json(const BiSequence& z);
BiSequence sequence_from_json(const Json& j);

Json weight_to_json(const WeightFunction& phi);
WeightFunction weight_from_json(const Json& j);

Json measure_to_json(const MeasureSpec& mu);
MeasureSpec measure_from_json(const Json& j);

Json subshift_to_json(const SubshiftSpec& spec);
SubshiftSpec subshift_from_json(const Json& j);

Json plan_to_json(const PerturbationPlan& plan);
PerturbationPlan plan_from_json(const Json& j);

Json bounds_to_json(const Bounds& b);
Json jsr_upper_to_json(const JsrUpper& r);
Json jsr_lower_to_json(const JsrLower& r);
Json lyapunov_upper_to_json(const LyapunovUpper& r);
Json mc_to_json(const McResult& r);
Json coupling_to_json(const CouplingLP& lp);
Json upper_inequality_to_json(const UpperInequalityReport& r);
Json growth_to_json(const GrowthReport& r);
Json gurvits_to_json(const GurvitsReport& r);
Json tech_strictly_to_json(const TechStrictlyReport& r);
Json nomather_to_json(const NomatherReport& r);
Json sandwich_to_json(const SandwichReport& r);

}  // namespace shiftopt
