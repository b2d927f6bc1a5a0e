#pragma once

#include <nlohmann/json.hpp>

#include "bpw/functor.hpp"
#include "bpw/gmod.hpp"
#include "bpw/grading.hpp"
#include "bpw/linalg.hpp"
#include "bpw/mforacle.hpp"
#include "bpw/qalg.hpp"
#include "bpw/stable.hpp"
#include "bpw/tilting.hpp"

// JSON encodings picked up by nlohmann::json through argument-dependent lookup.
namespace bpw {

void to_json(nlohmann::json& j, const WeightSystem& ws);           // {"p": [...]}
void to_json(nlohmann::json& j, const GradeElement& a);            // {"coeffs": [...], "level": l}
void to_json(nlohmann::json& j, const StableObject& o);
void to_json(nlohmann::json& j, const HomAnswer& h);               // integer or null
void to_json(nlohmann::json& j, const IntMatrix& m);               // array of rows
void to_json(nlohmann::json& j, const GradedModule& m);
void to_json(nlohmann::json& j, const HomSample& s);
void to_json(nlohmann::json& j, const AdjunctionSample& s);
void to_json(nlohmann::json& j, const RecollementReport& r);
void to_json(nlohmann::json& j, const FamilySpec& f);              // its text form
void to_json(nlohmann::json& j, const TiltingFamily& f);
void to_json(nlohmann::json& j, const TiltingReport& r);
void to_json(nlohmann::json& j, const GlueReport& r);
void to_json(nlohmann::json& j, const IntPolynomial& p);
void to_json(nlohmann::json& j, const AlgebraPresentation& a);
void to_json(nlohmann::json& j, const InvariantCheck& c);
void to_json(nlohmann::json& j, const HomProfile& p);
void to_json(nlohmann::json& j, const AuditDisagreement& d);
void to_json(nlohmann::json& j, const AuditReport& r);

}  // namespace bpw
