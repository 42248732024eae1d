#pragma once

#include <stdexcept>
#include <string>

namespace ballean {

/// Raised for malformed inputs: window mismatches, unknown point ids,
/// generator parameters out of range. Violations of mathematical properties
/// are never raised; they are reported.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ballean
