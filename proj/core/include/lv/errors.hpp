#pragma once

#include <stdexcept>
#include <string>

namespace lv {

// Bad input (wrong dimensions, non-prime modulus, value out of range).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search would exceed its hard budget.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A verified identity failed: the math is wrong, or the code is.
struct LemmaViolationError : std::runtime_error {
  explicit LemmaViolationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lv
