#include "uradius/series_io.hpp"

#include "json.hpp"

namespace uradius {

TruncatedSeries parse_series_literal(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SeriesParseError(std::string("series literal: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    throw SeriesParseError("series literal: expected a non-empty array of [re, im] pairs");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw SeriesParseError("series literal: each entry must be a [re, im] number pair");
    coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return TruncatedSeries(std::move(coeffs));
}

std::string emit_series_literal(const TruncatedSeries& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const Complex& c : s.coeffs()) j.push_back({c.real(), c.imag()});
  return j.dump();
}

TruncatedSeries with_order(const TruncatedSeries& s, int order) {
  if (order < 0) throw DomainError("with_order: order must be >= 0");
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(0.0, 0.0));
  for (int n = 0; n <= std::min(order, s.order()); ++n) c[n] = s.coeff(n);
  return TruncatedSeries(std::move(c));
}

}  // namespace uradius
