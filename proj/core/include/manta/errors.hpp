#pragma once

#include <stdexcept>
#include <string>

namespace manta {

// Every failure raised by the library derives from Error so callers can
// catch the whole family; the concrete type names the contract that broke.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MANTA_DEFINE_ERROR(Name)           \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

MANTA_DEFINE_ERROR(InvalidInput);
MANTA_DEFINE_ERROR(DegenerateTriangle);
MANTA_DEFINE_ERROR(InvalidTriangulation);
MANTA_DEFINE_ERROR(MismatchedPointSet);
MANTA_DEFINE_ERROR(NonSimplePolygon);
MANTA_DEFINE_ERROR(NoTriangulation);
MANTA_DEFINE_ERROR(TooLarge);
MANTA_DEFINE_ERROR(CapExceeded);
MANTA_DEFINE_ERROR(EdgeAlreadyPresent);
MANTA_DEFINE_ERROR(VertexOnSegment);
MANTA_DEFINE_ERROR(SegmentOutsideHull);
MANTA_DEFINE_ERROR(RoundLimitExceeded);
MANTA_DEFINE_ERROR(InvalidParams);
MANTA_DEFINE_ERROR(ClaimViolated);
MANTA_DEFINE_ERROR(CannotPlace);
MANTA_DEFINE_ERROR(PerturbationBreaksClaim);

#undef MANTA_DEFINE_ERROR

}  // namespace manta
