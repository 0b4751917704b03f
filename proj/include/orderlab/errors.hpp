#pragma once

#include <stdexcept>

namespace orderlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ORDERLAB_ERROR(NAME)                  \
  struct NAME : Error {                       \
    using Error::Error;                       \
    NAME() : Error(#NAME) {}                  \
  }

ORDERLAB_ERROR(NonDistinct);
ORDERLAB_ERROR(UnknownId);
ORDERLAB_ERROR(UnresolvedKernelElement);
ORDERLAB_ERROR(StepCapExceeded);
ORDERLAB_ERROR(DegenerateTriple);
ORDERLAB_ERROR(NotHyperbolic);
ORDERLAB_ERROR(CapExceeded);
ORDERLAB_ERROR(OrbitNotClosed);
ORDERLAB_ERROR(IndistinguishableElements);
ORDERLAB_ERROR(NonExactLift);
ORDERLAB_ERROR(UnresolvableProduct);
ORDERLAB_ERROR(RelationNotSatisfied);
ORDERLAB_ERROR(NonTransverse);
ORDERLAB_ERROR(DegenerateCorner);
ORDERLAB_ERROR(InconsistentEdgePairing);
ORDERLAB_ERROR(OrbitNotProper);
ORDERLAB_ERROR(NotProper);
ORDERLAB_ERROR(TangencyAtZero);
ORDERLAB_ERROR(TangentMismatch);
ORDERLAB_ERROR(RefinementLimit);
ORDERLAB_ERROR(UsageError);

#undef ORDERLAB_ERROR

}  // namespace orderlab
