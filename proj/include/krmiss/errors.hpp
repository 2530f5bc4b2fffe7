#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace krmiss {

// Every failure surfaced by the library carries a stable error name that the
// CLI prints verbatim. Catch krmiss::Error to handle all of them.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define KRMISS_ERROR(NAME)                                        \
  struct NAME : Error {                                           \
    explicit NAME(const std::string& what) : Error(#NAME, what) {} \
  }

KRMISS_ERROR(NotPositiveDefinite);
KRMISS_ERROR(Singular);
KRMISS_ERROR(DimensionMismatch);
KRMISS_ERROR(DegenerateData);
KRMISS_ERROR(ParseError);
KRMISS_ERROR(SchemaViolation);
KRMISS_ERROR(EmptyFile);
KRMISS_ERROR(NonPositiveLog);
KRMISS_ERROR(ZeroVariance);
KRMISS_ERROR(BadSize);
KRMISS_ERROR(AllObservedOrAllMissing);
KRMISS_ERROR(TooFewCompleteCases);
KRMISS_ERROR(RankDeficientBasis);
KRMISS_ERROR(SingleClass);
KRMISS_ERROR(NoCompleteCases);
KRMISS_ERROR(NoConvergence);
KRMISS_ERROR(BadSettingId);
KRMISS_ERROR(BadGrid);
KRMISS_ERROR(Empty);
KRMISS_ERROR(BadArgument);
KRMISS_ERROR(IoError);

#undef KRMISS_ERROR

}  // namespace krmiss
