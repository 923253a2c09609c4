#pragma once

#include "m1n/cremona.hpp"
#include "m1n/curves.hpp"
#include "m1n/divisor_class.hpp"
#include "m1n/hain.hpp"
#include "m1n/reid_tai.hpp"
#include "m1n/sym.hpp"
#include "m1n/torsion.hpp"

#include <json.hpp>

namespace m1n {

using Json = nlohmann::json;

// Shared schemas. Rationals serialize as lowest-terms "p/q" strings with
// q > 0 ("0/1" for zero); subsets as sorted label arrays.

Json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

Json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const Json& j);

Json signature_to_json(const Signature& a);
Signature signature_from_json(const Json& j);

Json family_to_json(const FamilyData& f);
FamilyData family_from_json(const Json& j);

Json sym_divisor_to_json(const SymDivisorClass& d);
SymDivisorClass sym_divisor_from_json(const Json& j);

Json trace_to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const Json& j);

Json certificate_to_json(const CertificateReport& r);

Json age_profile_to_json(const AgeProfile& p);
AgeProfile age_profile_from_json(const Json& j);
Json reid_tai_report_to_json(const ReidTaiReport& r);

Json orbits_to_json(const std::vector<MonodromyOrbit>& orbits);

Json sym_constraints_to_json(const SymConstraintsReport& r);

} // namespace m1n
