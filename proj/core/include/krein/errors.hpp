#pragma once

#include <stdexcept>
#include <string>

namespace krein {

// Base for every failure raised by the library. `code()` is a stable
// machine-readable tag used in CLI error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define KREIN_DEFINE_ERROR(Name, Tag)                         \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what) : Error(Tag, what) {} \
  };

KREIN_DEFINE_ERROR(DomainError, "DomainError")
KREIN_DEFINE_ERROR(IntegrationFailure, "IntegrationFailure")
KREIN_DEFINE_ERROR(NonDecayingTail, "NonDecayingTail")
KREIN_DEFINE_ERROR(TruncationUnconverged, "TruncationUnconverged")
KREIN_DEFINE_ERROR(BranchAmbiguous, "BranchAmbiguous")
KREIN_DEFINE_ERROR(RootNotBracketed, "RootNotBracketed")
KREIN_DEFINE_ERROR(IdentityViolated, "IdentityViolated")
KREIN_DEFINE_ERROR(SummabilityFailed, "SummabilityFailed")
KREIN_DEFINE_ERROR(TailMassTooLarge, "TailMassTooLarge")
KREIN_DEFINE_ERROR(DenominatorVanishes, "DenominatorVanishes")
KREIN_DEFINE_ERROR(ZeroOnContour, "ZeroOnContour")
KREIN_DEFINE_ERROR(PoleEncountered, "PoleEncountered")

#undef KREIN_DEFINE_ERROR

}  // namespace krein
