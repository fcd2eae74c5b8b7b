#pragma once

#include <stdexcept>
#include <string>

namespace duact {

// An iterative method failed to reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An evaluation point or integration path is too close to a singular locus.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input (Pfaffian documents, points files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested combination is not supported (e.g. no closed form).
struct NotAvailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A least-squares design matrix lost column rank.
struct RankDeficiencyError : std::runtime_error {
  int nullity;
  RankDeficiencyError(const std::string& what, int null_dim)
      : std::runtime_error(what), nullity(null_dim) {}
};

}  // namespace duact
