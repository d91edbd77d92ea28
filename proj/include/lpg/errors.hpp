#pragma once

#include <stdexcept>
#include <string>

namespace lpg {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller misused the API (mismatched series variables, wrong tree kind, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularDivision : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedBranch : std::domain_error {
  using std::domain_error::domain_error;
};

struct CompositionError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace lpg
