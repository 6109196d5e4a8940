#pragma once

#include <stdexcept>
#include <string>

namespace tvl {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define TVL_ERROR(Name) \
  struct Name : Error { \
    using Error::Error;  \
  };

// group construction
TVL_ERROR(NotAGroup)
TVL_ERROR(IdentityNotFirst)
TVL_ERROR(NotAPermutation)
TVL_ERROR(ClosureTooLarge)
TVL_ERROR(UnsupportedParameter)
TVL_ERROR(NotCentral)
TVL_ERROR(NotIsomorphism)

// structure
TVL_ERROR(NotASubgroup)
TVL_ERROR(NotNormal)
TVL_ERROR(NotAbelian)
TVL_ERROR(NotPrime)
TVL_ERROR(TooManyClasses)

// transversals
TVL_ERROR(NotATransversal)
TVL_ERROR(ConditionsFail)
TVL_ERROR(IntersectionNotTrivial)
TVL_ERROR(SearchSpaceTooLarge)
TVL_ERROR(FactorizationFails)
TVL_ERROR(NotCentralChain)
TVL_ERROR(NotPrimeOrder)
TVL_ERROR(NotInvariantTransversal)

// cocycles
TVL_ERROR(CocycleIdentityFailed)
TVL_ERROR(SubgroupMismatch)

// files
TVL_ERROR(SchemaError)

/// A verified postcondition did not hold; always indicates a bug.
TVL_ERROR(InternalVerificationFailed)

#undef TVL_ERROR

}  // namespace tvl
