#pragma once

#include <string>

#include "uradius/series.hpp"

namespace uradius {

// Series literal: JSON array of [re, im] pairs, index = power of z,
// e.g. [[0,0],[1,0],[0.5,0]] for z + 0.5 z^2.

// Throws SeriesParseError on malformed input.
TruncatedSeries parse_series_literal(const std::string& text);

std::string emit_series_literal(const TruncatedSeries& s);

// Zero-pads (or re-truncates) to the given order. Padding treats the
// literal as an exact polynomial.
TruncatedSeries with_order(const TruncatedSeries& s, int order);

}  // namespace uradius
