#pragma once

#include <stdexcept>
#include <string>

namespace lcf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element id was passed that does not exist in the graph.
struct UnknownElement : Error {
  using Error::Error;
};

/// An enumeration exceeded its configured node budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// A theorem hypothesis required for the result to be meaningful fails.
struct HypothesisViolated : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

/// A structural rule of an extension step is broken.
struct MalformedStep : Error {
  using Error::Error;
};

/// A cover fails one of its validity invariants.
struct InvalidCover : Error {
  using Error::Error;
};

struct ParamsInvalid : Error {
  using Error::Error;
};

}  // namespace lcf
