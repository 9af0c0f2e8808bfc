#pragma once

#include <stdexcept>

namespace charvar {

// Error taxonomy shared across the library. The CLI maps all of these to
// exit code 2; anything rejected at argument-parsing time exits 1 instead.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value precondition failed (off-surface point, non-unit generator, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// A criterion was evaluated outside its hypotheses (boundary trace at +-2).
struct HypothesisViolation : Error {
  using Error::Error;
};

// A construction hit a rank-deficient or ill-conditioned configuration.
struct DegenerateConfiguration : Error {
  using Error::Error;
};

// Input data is internally inconsistent (not realizable as trace data).
struct InconsistentInput : Error {
  using Error::Error;
};

// Iteration drifted off the surface beyond the allowed residual.
struct DriftError : Error {
  using Error::Error;
};

}  // namespace charvar
