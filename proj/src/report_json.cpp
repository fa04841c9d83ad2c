#include "uradius/report_json.hpp"

#include "json.hpp"

namespace uradius {

const char* method_name(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::closed_form_thm1: return "closed_form_thm1";
    case RadiusMethod::half_a2: return "half_a2";
    case RadiusMethod::bisection_eq11: return "bisection_eq11";
  }
  return "unknown";
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::U: return "U";
    case Quantity::FPrimeMinus1: return "f_prime_minus_1";
    case Quantity::ZfpOverFMinus1: return "zfp_over_f_minus_1";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  return v == Verdict::holds_on_grid ? "holds_on_grid" : "violated";
}

const char* spacing_name(Spacing s) {
  return s == Spacing::uniform_r ? "uniform_r" : "uniform_r_squared";
}

Quantity quantity_from_name(const std::string& name) {
  if (name == "U") return Quantity::U;
  if (name == "f_prime_minus_1") return Quantity::FPrimeMinus1;
  if (name == "zfp_over_f_minus_1") return Quantity::ZfpOverFMinus1;
  throw DomainError("unknown quantity: " + name);
}

Spacing spacing_from_name(const std::string& name) {
  if (name == "uniform_r") return Spacing::uniform_r;
  if (name == "uniform_r_squared") return Spacing::uniform_r_squared;
  throw DomainError("unknown spacing: " + name);
}

std::string to_json(const RadiusResult& r) {
  nlohmann::json j;
  j["value"] = r.value;
  j["method"] = method_name(r.method);
  if (r.bracket)
    j["bracket"] = {(*r.bracket)[0], (*r.bracket)[1]};
  else
    j["bracket"] = nullptr;
  j["tol"] = r.tol;
  return j.dump();
}

std::string to_json(const MembershipReport& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["sup_modulus"] = r.sup_modulus;
  j["witness"] = {r.witness.real(), r.witness.imag()};
  j["quantity"] = quantity_name(r.quantity);
  j["grid"] = {{"radius", r.grid.radius},
               {"n_radii", r.grid.n_radii},
               {"n_angles", r.grid.n_angles},
               {"spacing", spacing_name(r.grid.spacing)}};
  return j.dump();
}

}  // namespace uradius
