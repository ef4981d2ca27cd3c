#ifndef SOLW_ERRORS_HPP
#define SOLW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solw {

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

#define SOLW_DEFINE_ERROR(NAME)                                                \
  struct NAME : Error {                                                        \
    explicit NAME(const std::string &msg) : Error(#NAME ": " + msg) {}         \
  }

SOLW_DEFINE_ERROR(CapExceeded);
SOLW_DEFINE_ERROR(ParentTooLarge);
SOLW_DEFINE_ERROR(NotCentral);
SOLW_DEFINE_ERROR(ScaleExceeded);
SOLW_DEFINE_ERROR(PrimeSearchFailed);
SOLW_DEFINE_ERROR(ExtensionHypothesisFails);
SOLW_DEFINE_ERROR(ParamsInvalid);
SOLW_DEFINE_ERROR(ClosureCap);
SOLW_DEFINE_ERROR(SpecUnavailable);
SOLW_DEFINE_ERROR(MissingRow);
SOLW_DEFINE_ERROR(OverdeterminedMismatch);
SOLW_DEFINE_ERROR(DuplicateAbscissa);
SOLW_DEFINE_ERROR(SchemaViolation);
SOLW_DEFINE_ERROR(UnsupportedIndex);

#undef SOLW_DEFINE_ERROR

// internal invariant failure; indicates a bug, not bad input
struct Internal : Error {
  explicit Internal(const std::string &msg) : Error("internal: " + msg) {}
};

inline void check(bool cond, const std::string &msg) {
  if (!cond) throw Internal(msg);
}

} // namespace solw

#endif
