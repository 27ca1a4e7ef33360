#pragma once

#include "slelab/algebra/pbw_vector.hpp"
#include "slelab/algebra/verma.hpp"
#include "slelab/bridge/cft_bridge.hpp"
#include "slelab/flow/loewner.hpp"
#include "slelab/stochastic/experiments.hpp"

#include <json.hpp>

#include <string>

namespace slelab::io {

using Json = nlohmann::ordered_json;

/// {"level", "c", "delta", "terms": [{"partition": [...], "coeff": "p/q"}]};
/// coefficients and parameters are polynomial strings.
Json to_json(const algebra::PBWVector& v);
algebra::PBWVector pbw_from_json(const Json& j);

Json to_json(const algebra::GramMatrix& g);
Json to_json(const bridge::NullSolution& s);
Json to_json(const bridge::SingularSolution& s);
Json to_json(const stochastic::ExperimentReport& r);

Json to_json(const flow::TraceCurve& curve);
flow::TraceCurve trace_from_json(const Json& j);
std::string trace_csv(const flow::TraceCurve& curve);
flow::TraceCurve trace_from_csv(const std::string& text);

Json to_json(const flow::HullGrid& hull);
std::string hull_csv(const flow::HullGrid& hull);

}  // namespace slelab::io
