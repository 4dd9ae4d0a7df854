#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropical {

enum class Errc {
  kInvalidArgument,
  kIndexOutOfRange,
  kSingularMatrix,
  kSizeLimit,
  kTooLarge,
  kMarkedEdgeMissing,
  kDisjointnessViolation,
  kInfeasibleWeight,
  kNotRegular,
  kInfeasible,
  kEssentialEdgeViolation,
  kNoFiniteBijection,
  kInfeasibleEdge,
  kNotOptimalInput,
  kPreconditionCycleCount,
  kIdentityNotOptimal,
  kNotEqualityCase,
  kParseError,
};

std::string_view errc_name(Errc code);

// Every library failure is reported through this type; `code()` is what
// callers branch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by priority validation; carries the offending (i, j) entries of C
// as 0-based (row-in-I, col-in-J) positions.
class EssentialEdgeError : public Error {
 public:
  EssentialEdgeError(std::vector<std::pair<std::size_t, std::size_t>> offending,
                     const std::string& what)
      : Error(Errc::kEssentialEdgeViolation, what),
        offending_(std::move(offending)) {}

  const std::vector<std::pair<std::size_t, std::size_t>>& offending() const {
    return offending_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> offending_;
};

}  // namespace tropical
