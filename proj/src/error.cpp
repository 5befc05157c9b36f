// SPDX-License-Identifier: Apache-2.0
#include "creepwave/error.hpp"
#include "creepwave/types.hpp"

namespace creepwave {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Range: return "range";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::Validity: return "validity";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Degenerate: return "degenerate";
  }
  return "unknown";
}

const char* to_string(Orientation o) noexcept {
  return o == Orientation::CounterClockwise ? "ccw" : "cw";
}

}  // namespace creepwave
