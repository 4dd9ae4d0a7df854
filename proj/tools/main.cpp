#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tropical/cli/commands.hpp"

using namespace tropical::cli;

int main(int argc, char** argv) {
  CLI::App app{"Max-plus assignment toolkit: permanents, adjoints, compounds, "
               "supervised assignments and Jacobi checks"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--epsilon", opt.epsilon, "Tolerance for comparing finite values")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cap", opt.cap, "Entry cap for full compound matrices");
  app.add_flag("--verbose", opt.verbose, "Human-readable tables on stderr");
  app.fallthrough();

  std::string matrix, rows, cols, priority;
  std::optional<std::string> c_rows, c_cols;
  std::size_t k = 0;
  bool witnesses = false, recover = false;

  auto* perm = app.add_subcommand("perm", "Tropical permanent and an optimal permutation");
  perm->add_option("matrix", matrix, "Matrix file")->required();

  auto* adj = app.add_subcommand("adjoint", "Tropical adjoint");
  adj->add_option("matrix", matrix, "Matrix file")->required();
  adj->add_flag("--witnesses", witnesses, "Emit an optimal bijection per entry");

  auto* sup = app.add_subcommand("supervise", "k assignments with supervisions I on J");
  sup->add_option("matrix", matrix, "Matrix file")->required();
  sup->add_option("--rows", rows, "Supervised workers I, 1-based comma list")->required();
  sup->add_option("--cols", cols, "Tasks J, 1-based comma list")->required();
  sup->add_option("--priority", priority, "k x k priority matrix file")->required();

  auto* jac = app.add_subcommand("jacobi", "Check the tropical Jacobi identity");
  jac->add_option("matrix", matrix, "Matrix file")->required();
  jac->add_option("--rows", rows, "Rows of adj(M), 1-based comma list")->required();
  jac->add_option("--cols", cols, "Columns of adj(M), 1-based comma list")->required();
  jac->add_flag("--recover", recover, "In the equality case, build supervised assignments");

  auto* cmp = app.add_subcommand("compound", "k-th compound matrix or one of its entries");
  cmp->add_option("matrix", matrix, "Matrix file")->required();
  cmp->add_option("--k", k, "Subset size")->required();
  cmp->add_option("--rows", c_rows, "Row subset, 1-based comma list");
  cmp->add_option("--cols", c_cols, "Column subset, 1-based comma list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  CommandResult res;
  if (*perm) {
    res = cmd_perm(matrix, opt);
  } else if (*adj) {
    res = cmd_adjoint(matrix, witnesses, opt);
  } else if (*sup) {
    res = cmd_supervise(matrix, rows, cols, priority, opt);
  } else if (*jac) {
    res = cmd_jacobi(matrix, rows, cols, recover, opt);
  } else {
    res = cmd_compound(matrix, k, c_rows, c_cols, opt);
  }
  std::cout << res.report.dump(2) << std::endl;
  if (opt.verbose) std::cerr << res.verbose_text;
  return res.exit_code;
}
