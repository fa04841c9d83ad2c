#pragma once

#include <stdexcept>
#include <string>

namespace uradius {

// Argument outside the hypothesis range of the formula being evaluated.
// The message names the violated hypothesis.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// reciprocal() of a series whose constant term is exactly zero.
struct ZeroConstantTerm : std::domain_error {
  explicit ZeroConstantTerm(const std::string& msg) : std::domain_error(msg) {}
};

// The transform g = ((z/f) - 1)/(-a2) is undefined when a2 vanishes.
struct VanishingA2 : std::domain_error {
  explicit VanishingA2(const std::string& msg) : std::domain_error(msg) {}
};

// Schwarz-bound validation failed: the function does not admit the
// class-U representation numerically.
struct NotInU : std::runtime_error {
  explicit NotInU(const std::string& msg) : std::runtime_error(msg) {}
};

// Pointwise evaluation hit a zero of z/f(z) at a sample point.
struct PoleAtSample : std::runtime_error {
  explicit PoleAtSample(const std::string& msg) : std::runtime_error(msg) {}
};

// 1 - a2 z - z w(z) vanishes on the validation grid; the reconstructed f
// would have a pole inside the disk of interest.
struct ZeroDenominator : std::runtime_error {
  explicit ZeroDenominator(const std::string& msg) : std::runtime_error(msg) {}
};

// Root finder could not establish a sign change.
struct NoBracket : std::runtime_error {
  explicit NoBracket(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed series literal.
struct SeriesParseError : std::runtime_error {
  explicit SeriesParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uradius
