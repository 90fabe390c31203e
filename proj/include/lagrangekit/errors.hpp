#ifndef LAGRANGEKIT_ERRORS_HPP
#define LAGRANGEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lagrangekit {

// Error taxonomy. The CLI maps these onto exit codes: config/schema
// problems -> 2, numerical failures (NonUnisolvent, SingularSystem) -> 3.

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonUnisolvent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lagrangekit

#endif
