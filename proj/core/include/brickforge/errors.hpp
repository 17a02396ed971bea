#pragma once

#include <stdexcept>
#include <string>

namespace brickforge {

// Every library failure is a subclass of Error so callers can catch one type.
// The CLI maps UsageError to exit code 2 and everything else to 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotCrystallographic : Error {
  using Error::Error;
};
struct NotFinite : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotARoot : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct EmptyComplex : Error {
  using Error::Error;
};
struct NotFlippable : Error {
  using Error::Error;
};
struct NotInFacet : Error {
  using Error::Error;
};
struct NoCover : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct DimensionTooLarge : Error {
  using Error::Error;
};
struct FunctionalNotNonnegative : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};

// Internal consistency assertion that stays on in release builds.  Theorem
// checks depend on these post-conditions actually being verified.
inline void check(bool cond, const char* what) {
  if (!cond) throw Error(std::string("internal check failed: ") + what);
}

}  // namespace brickforge
