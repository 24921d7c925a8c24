#include "cantorfull/error.hpp"

namespace cantorfull {

const char *error_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::empty_subshift: return "EmptySubshift";
    case ErrorCode::non_primitive_substitution: return "NonPrimitiveSubstitution";
    case ErrorCode::bad_continued_fraction: return "BadContinuedFraction";
    case ErrorCode::depth_cap_exceeded: return "DepthCapExceeded";
    case ErrorCode::not_implemented_seed: return "NotImplementedSeed";
    case ErrorCode::not_minimal: return "NotMinimal";
    case ErrorCode::not_aperiodic: return "NotAperiodic";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::engine_mismatch: return "EngineMismatch";
    case ErrorCode::partial_table: return "PartialTable";
    case ErrorCode::not_injective: return "NotInjective";
    case ErrorCode::not_surjective: return "NotSurjective";
    case ErrorCode::not_bijective: return "NotBijective";
    case ErrorCode::displacement_cap_exceeded: return "DisplacementCapExceeded";
    case ErrorCode::memory_cap_exceeded: return "MemoryCapExceeded";
    case ErrorCode::not_good: return "NotGood";
    case ErrorCode::overlap: return "OverlapError";
    case ErrorCode::not_omniscient: return "NotOmniscient";
    case ErrorCode::fixed_point_found: return "FixedPointFound";
    case ErrorCode::surplus_violated: return "SurplusViolated";
    case ErrorCode::odometer_like: return "OdometerLike";
    case ErrorCode::search_exhausted: return "SearchExhausted";
    case ErrorCode::window_too_small: return "WindowTooSmall";
    case ErrorCode::stabilizer_violated: return "StabilizerViolated";
    case ErrorCode::range_unavailable: return "RangeUnavailable";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::semantic_error: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const &message, std::string witness)
  : std::runtime_error(std::string(error_name(code)) + ": " + message),
    _code(code),
    _witness(std::move(witness))
{}

}  // namespace cantorfull
