#include "holo/error.hpp"

namespace holo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonInvertibleStep: return "NonInvertibleStep";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::InvalidAxis: return "InvalidAxis";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::ZeroOnContour: return "ZeroOnContour";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

}  // namespace holo
