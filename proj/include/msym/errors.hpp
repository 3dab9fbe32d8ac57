#pragma once

#include <stdexcept>
#include <string>

namespace msym {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error { using Error::Error; };
struct IdentityMap : Error { using Error::Error; };
struct NotFiniteOrder : Error { using Error::Error; };
struct AnchorNotFixed : Error { using Error::Error; };
struct InfiniteStabilizer : Error { using Error::Error; };
struct ToleranceBreakdown : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct UnrecognizedGroup : Error { using Error::Error; };
struct ClosureFailure : Error { using Error::Error; };
struct NotInvariantUnderGroup : Error { using Error::Error; };
struct SeedOnExceptionalOrbit : Error { using Error::Error; };
struct InvalidRecipe : Error { using Error::Error; };
struct InvalidLabel : Error { using Error::Error; };
struct NotInKn : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };
struct UnsupportedSigma : Error { using Error::Error; };
struct NotStabilizerElement : Error { using Error::Error; };
struct InconsistentContext : Error { using Error::Error; };
struct TrivialStabilizer : Error { using Error::Error; };
struct NonIntegralMultiplicity : Error { using Error::Error; };
struct InconsistentCensus : Error { using Error::Error; };
struct DegenerateLambda : Error { using Error::Error; };

}  // namespace msym
