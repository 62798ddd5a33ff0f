#include "curv/error.hpp"

namespace curv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotAmplyRegular: return "NotAmplyRegular";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotPaleyOrder: return "NotPaleyOrder";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::InfiniteDistance: return "InfiniteDistance";
    case ErrorKind::InvalidIdleness: return "InvalidIdleness";
    case ErrorKind::UnbalancedSides: return "UnbalancedSides";
    case ErrorKind::UseBOneCheck: return "UseBOneCheck";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::NotSrgParameters: return "NotSrgParameters";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace curv
