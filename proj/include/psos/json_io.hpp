#pragma once

#include <json.hpp>

#include "psos/certifier.hpp"
#include "psos/reduction.hpp"

namespace psos {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "padic-sos/1";

/// Coefficients in ascending degree as "num/den" strings.
Json to_json(const RatPoly& f);
RatPoly poly_from_json(const Json& j);

Json to_json(const PositivityCertificate& c);
Json to_json(const NewtonDiagram& d);
Json to_json(const RootStatus& s);
Json to_json(const Evidence& e);
Json to_json(const Sos4Certificate& c);
Json to_json(const ReductionResult& r);
Json to_json(const NonTermination& n);
Json to_json(const PickyObstruction& p);
Json to_json(const Inconclusive& i);

/// Status string of a dispatch outcome: "ok", "non-termination" or "inconclusive".
std::string status_of(const DispatchOutcome& o);
Json to_json(const DispatchOutcome& o);

}  // namespace psos
