#ifndef CANTORFULL_ERROR_HPP
#define CANTORFULL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cantorfull {

enum class ErrorCode {
  empty_subshift,
  non_primitive_substitution,
  bad_continued_fraction,
  depth_cap_exceeded,
  not_implemented_seed,
  not_minimal,
  not_aperiodic,
  cap_exceeded,
  precondition_violated,
  engine_mismatch,
  partial_table,
  not_injective,
  not_surjective,
  not_bijective,
  displacement_cap_exceeded,
  memory_cap_exceeded,
  not_good,
  overlap,
  not_omniscient,
  fixed_point_found,
  surplus_violated,
  odometer_like,
  search_exhausted,
  window_too_small,
  stabilizer_violated,
  range_unavailable,
  syntax_error,
  semantic_error
};

// stable identifier, e.g. "EmptySubshift"
const char *error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const &message, std::string witness = "");

  ErrorCode code() const { return _code; }
  std::string const &witness() const { return _witness; }

 private:
  ErrorCode _code;
  std::string _witness;
};

}  // namespace cantorfull

#endif  // CANTORFULL_ERROR_HPP
