#pragma once

#include <json.hpp>

#include "coxkit/classify.hpp"
#include "coxkit/root_system.hpp"
#include "coxkit/verify.hpp"

namespace coxkit {

// JSON views of the public objects.  Scalars serialize as "p/q" strings,
// golden-field values as {"a": "p/q", "b": "p/q"}.
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json root_system_json(const RootSystem& rs);
nlohmann::json report_json(const VerificationReport& r);
nlohmann::json classification_json(const CoxGroup& g,
                                   const ClassificationRecord& rec);
nlohmann::json dn_report_json(const DnIntersectionReport& rep);

}  // namespace coxkit
