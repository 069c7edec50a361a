#pragma once

// JSON forms of the reports. Rationals are "p/q" strings, cyclotomic numbers
// are {order, coeffs} on the power basis, weights are (E0, s) pairs and depth
// vectors eta are simple-root coordinates {a1, a2}.

#include "uqrep/sl2/uqsl2.hpp"
#include "uqrep/so5/uqso5.hpp"

#include <json.hpp>

namespace uqrep::io {

using nlohmann::json;

inline constexpr const char* kSchema = "uqrep-report/1";

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const cyclo::CycloNumber& x);
cyclo::CycloNumber cyclo_from_json(const json& j);

json matrix_to_json(const Matrix<cyclo::CycloNumber>& m);
Matrix<cyclo::CycloNumber> matrix_from_json(const json& j);

/// Weight lambda = E0 beta_3 + s beta_2 as {"E0", "s"}.
json weight_to_json(const b2::Weight& w);
b2::Weight weight_from_json(const json& j);
/// Physical lowest weight mu = E0 beta_3 - s beta_2 as {"E0", "s"}.
json lowest_to_json(const b2::Weight& mu);
b2::Weight lowest_from_json(const json& j);
json eta_to_json(const b2::Weight& eta);
b2::Weight eta_from_json(const json& j);

json to_json(const so5::UnitarityInfo& u);
so5::UnitarityInfo unitarity_from_json(const json& j);

json to_json(const so5::IrrepReport& r);
so5::IrrepReport report_from_json(const json& j);

json to_json(const so5::DetCheck& d);
json to_json(const so5::LowestWeight& w);
json to_json(const so5::TruncatedSO23& t);
json to_json(const so5::CompactStructure& c);
json to_json(const so5::VermaWeightSpace& v);

json to_json(const sl2::Irrep2& v);
json to_json(const sl2::Unitarity2& u);
json to_json(const sl2::VLabel& v);
json to_json(const sl2::Decomposition2& d);
json to_json(const sl2::TruncatedResult& t);

/// {"schema", "command", "config", "result"}.
json envelope(const std::string& command, const json& config, const json& result);

}  // namespace uqrep::io
