#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latkit {

enum class ErrorKind {
  DuplicateName,
  UnknownName,
  CyclicCovers,
  RedundantCover,
  NotALattice,
  NoBoundedStructure,
  TooLarge,
  InvalidParameter,
  NotSemidistributive,
  NotAnArrow,
  NotJoinIrreducible,
  NotMeetIrreducible,
  InvalidInterval,
  InvalidElement,
  NotAPartialOrder,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind drives CLI exit codes.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latkit
