#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropical/adjoint.hpp"
#include "tropical/error.hpp"
#include "tropical/value.hpp"

namespace tropical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitSizeLimit = 4;
inline constexpr int kExitParse = 64;

int exit_code_for(Errc code);

struct GlobalOptions {
  double epsilon = kDefaultEpsilon;
  std::size_t cap = kDefaultCompoundCap;
  bool verbose = false;
};

// One run: the JSON report for stdout, a human-readable rendering for
// stderr (filled only when verbose), and the process exit code.
struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string verbose_text;
};

// Index lists are 1-based comma lists as typed on the command line. For
// jacobi, rows/cols select rows and columns of adj(M).
CommandResult cmd_perm(const std::string& matrix_path, const GlobalOptions& opt);
CommandResult cmd_adjoint(const std::string& matrix_path, bool witnesses,
                          const GlobalOptions& opt);
CommandResult cmd_supervise(const std::string& matrix_path,
                            const std::string& rows, const std::string& cols,
                            const std::string& priority_path,
                            const GlobalOptions& opt);
CommandResult cmd_jacobi(const std::string& matrix_path,
                         const std::string& rows, const std::string& cols,
                         bool recover, const GlobalOptions& opt);
CommandResult cmd_compound(const std::string& matrix_path, std::size_t k,
                           const std::optional<std::string>& rows,
                           const std::optional<std::string>& cols,
                           const GlobalOptions& opt);

}  // namespace tropical::cli
