#pragma once

#include <stdexcept>
#include <string>

namespace orthospec {

// Bad or inconsistent configuration input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix with complex or (nearly) repeated spectrum where a loxodromic one is required.
struct LoxodromyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cross ratio evaluated on a quadruple outside its domain.
struct DegenerateQuadruple : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked mathematical invariant does not hold.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace orthospec
