#ifndef HPMS_ERRORS_HPP
#define HPMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hpms {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series_core
struct ZeroSeries : Error { using Error::Error; };
struct NotSimpleBranch : Error { using Error::Error; };
struct AnchorMismatch : Error { using Error::Error; };
struct PoleAtInfinity : Error { using Error::Error; };
struct DenominatorVanishes : Error { using Error::Error; };

// curve_lab
struct DegenerateFiber : Error { using Error::Error; };
struct StepCollapse : Error { using Error::Error; };
struct SheetAmbiguity : Error { using Error::Error; };

// hp_solver
struct TruncationTooShort : Error { using Error::Error; };
struct EmptyNullspace : Error { using Error::Error; };

// monodromy
struct PermutationCollision : Error { using Error::Error; };

// reconstruction
struct DenominatorNearZero : Error { using Error::Error; };
struct SingularMinor : Error { using Error::Error; };
struct NoUsableN : Error { using Error::Error; };

}  // namespace hpms

#endif
