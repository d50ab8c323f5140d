#pragma once

#include <stdexcept>
#include <string>

namespace surfbraid {

// All recoverable usage errors derive from Error so the CLI can map them to
// exit code 2 uniformly.  Internal invariant violations use assert instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
  using Error::Error;
};

struct ParseError : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct UndeclaredSymbol : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct ClosedSurfaceUnsupported : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct NonOrientableUnsupported : InvalidParams {
  using InvalidParams::InvalidParams;
};

// Word problem strategy cannot decide a required equality (e.g. a rewrite
// system that was never completed).
struct StrategyUnavailable : Error {
  using Error::Error;
};

struct NotConfluent : StrategyUnavailable {
  using StrategyUnavailable::StrategyUnavailable;
};

struct NotClosed : Error {
  using Error::Error;
};

struct NotSquare : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct NotSupported : Error {
  using Error::Error;
};

struct NotNormal : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct NotInvariant : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct TooLarge : InvalidParams {
  using InvalidParams::InvalidParams;
};

struct BudgetTooLarge : InvalidParams {
  using InvalidParams::InvalidParams;
};

}  // namespace surfbraid
