#pragma once

#include <string>

#include "uradius/radii.hpp"
#include "uradius/verify.hpp"

namespace uradius {

// Wire names; stable output contract.
const char* method_name(RadiusMethod m);
const char* quantity_name(Quantity q);
const char* verdict_name(Verdict v);
const char* spacing_name(Spacing s);

// Inverse lookups for CLI flags; throw DomainError on unknown names.
Quantity quantity_from_name(const std::string& name);
Spacing spacing_from_name(const std::string& name);

// {"value", "method", "bracket", "tol"}; bracket is null for closed forms.
std::string to_json(const RadiusResult& r);

// {"verdict", "sup_modulus", "witness":[re,im], "quantity", "grid":{...}}
std::string to_json(const MembershipReport& r);

}  // namespace uradius
