#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace diffract {

/// Dense element index. The identity is always index 0.
using Element = std::uint32_t;

enum class Errc {
  IndexOutOfRange,
  NotAGroup,
  NotAPermutation,
  GroupTooLarge,
  UnknownBuiltin,
  ParamOutOfRange,
  NotARepresentativeSystem,
  NotARepresentative,
  RequiresTransversal,
  InvalidSpectrum,
  FibrationMismatch,
  UnknownLawId,
  TooLargeForExhaustive,
  ParseError,
  UnknownElement,
};

const char *to_string(Errc code);

/// Single exception type for the library; `code()` drives CLI exit codes.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

enum class GroupViolation { NonLatinSquare, NoIdentity, NonAssociative, MissingInverse };

const char *to_string(GroupViolation v);

/// Raised by the group validator. `witness` holds the first violating
/// triple (a, b, c); unused slots repeat the last meaningful index.
class NotAGroupError : public Error {
public:
  NotAGroupError(GroupViolation reason, Element a, Element b, Element c,
                 const std::string &message)
      : Error(Errc::NotAGroup, message), reason_(reason), witness_{a, b, c} {}

  GroupViolation reason() const noexcept { return reason_; }
  const std::array<Element, 3> &witness() const noexcept { return witness_; }

private:
  GroupViolation reason_;
  std::array<Element, 3> witness_;
};

} // namespace diffract
