#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curv {

enum class ErrorKind {
  InvalidVertex,
  InvalidGraph,
  NotAnEdge,
  NotRegular,
  NotAmplyRegular,
  Disconnected,
  NotPrime,
  NotPrimePower,
  NotPaleyOrder,
  TooLarge,
  UnknownFamily,
  InvalidParams,
  InvalidMeasure,
  InfiniteDistance,
  InvalidIdleness,
  UnbalancedSides,
  UseBOneCheck,
  DegenerateParameters,
  NotSrgParameters,
  InfeasibleParameters,
  InvalidPair,
  InvalidOrder,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curv
