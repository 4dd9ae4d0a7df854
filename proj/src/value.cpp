#include "tropical/value.hpp"

#include <cstdint>
#include <sstream>

#include "tropical/error.hpp"

namespace tropical {

std::string to_string(TropValue v) {
  if (v.is_neg_inf()) return "-inf";
  const double x = v.value();
  if (std::nearbyint(x) == x && std::fabs(x) < 9.0e15) {
    return std::to_string(static_cast<std::int64_t>(x));
  }
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, TropValue v) {
  return os << to_string(v);
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kSizeLimit: return "SizeLimit";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kMarkedEdgeMissing: return "MarkedEdgeMissing";
    case Errc::kDisjointnessViolation: return "DisjointnessViolation";
    case Errc::kInfeasibleWeight: return "InfeasibleWeight";
    case Errc::kNotRegular: return "NotRegular";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kEssentialEdgeViolation: return "EssentialEdgeViolation";
    case Errc::kNoFiniteBijection: return "NoFiniteBijection";
    case Errc::kInfeasibleEdge: return "InfeasibleEdge";
    case Errc::kNotOptimalInput: return "NotOptimalInput";
    case Errc::kPreconditionCycleCount: return "PreconditionCycleCount";
    case Errc::kIdentityNotOptimal: return "IdentityNotOptimal";
    case Errc::kNotEqualityCase: return "NotEqualityCase";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tropical
