#include "xytr/errors.hpp"

namespace xytr {

const char* rejection_name(Rejection r) {
  switch (r) {
    case Rejection::IrrationalRamification:
      return "IrrationalRamification";
    case Rejection::NonSimpleRamification:
      return "NonSimpleRamification";
    case Rejection::CoincidingRamification:
      return "CoincidingRamification";
    case Rejection::RegularityViolation:
      return "RegularityViolation";
  }
  return "UnknownRejection";
}

}  // namespace xytr
