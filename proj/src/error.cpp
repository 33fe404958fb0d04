#include "heatfix/error.hpp"

#include "heatfix/grid.hpp"

#include <algorithm>

namespace heatfix {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::NotPng:
    case ErrorKind::BadImage:
    case ErrorKind::Parse:
    case ErrorKind::Order:
    case ErrorKind::GridFormat:
      return kExitInput;
    case ErrorKind::InvalidWindow:
    case ErrorKind::WindowTooLarge:
    case ErrorKind::InvalidArgument:
      return kExitParameter;
    case ErrorKind::DimensionMismatch:
      return kExitDimension;
    case ErrorKind::ZeroMass:
    case ErrorKind::ZeroVariance:
      return kExitDegenerate;
  }
  return kExitInput;
}

double total(const Map& m) noexcept {
  double sum = 0.0;
  for (double v : m.values()) sum += v;
  return sum;
}

double max_value(const Map& m) noexcept {
  if (m.empty()) return 0.0;
  return *std::max_element(m.values().begin(), m.values().end());
}

}  // namespace heatfix
