#include <gtest/gtest.h>

#include "tropical/adjoint.hpp"
#include "tropical/cli/commands.hpp"
#include "tropical/cli/matrix_file.hpp"

using namespace tropical;
using namespace tropical::cli;
using nlohmann::json;

namespace {

std::string data(const char* name) { return std::string(TEST_DATA_DIR "/") + name; }

const GlobalOptions kOpt{};

json pairs(std::vector<std::pair<int, int>> p) {
  json out = json::array();
  for (const auto& [a, b] : p) out.push_back({a, b});
  return out;
}

// Sum of m over 1-based edge pairs.
TropValue replay(const json& matrix, const json& edges) {
  TropValue total(0);
  for (const auto& e : edges) {
    const json& v = matrix[e[0].get<int>() - 1][e[1].get<int>() - 1];
    total = tmul(total, v.is_string() ? kNegInf : TropValue(v.get<double>()));
  }
  return total;
}

}  // namespace

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(Errc::kParseError), 64);
  EXPECT_EQ(exit_code_for(Errc::kSingularMatrix), 2);
  EXPECT_EQ(exit_code_for(Errc::kInfeasible), 2);
  EXPECT_EQ(exit_code_for(Errc::kSizeLimit), 4);
  EXPECT_EQ(exit_code_for(Errc::kEssentialEdgeViolation), 3);
  EXPECT_EQ(exit_code_for(Errc::kInvalidArgument), 3);
}

TEST(CmdPerm, Examples) {
  const CommandResult example = cmd_perm(data("supervision_example.txt"), kOpt);
  EXPECT_EQ(example.exit_code, 0);
  EXPECT_EQ(example.report["command"], "perm");
  EXPECT_EQ(example.report["value"], 11);
  EXPECT_EQ(example.report["witness"], pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  EXPECT_EQ(replay(example.report["inputs"]["matrix"], example.report["witness"]), TropValue(11));
  EXPECT_TRUE(example.report["timing"].contains("elapsed_ms"));

  const CommandResult a = cmd_perm(data("normalized_a.txt"), kOpt);
  EXPECT_EQ(a.report["value"], 0);
  EXPECT_EQ(a.report["witness"], pairs({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));

  const CommandResult ragged = cmd_perm(data("ragged.txt"), kOpt);
  EXPECT_EQ(ragged.exit_code, 64);
  EXPECT_EQ(ragged.report["error"]["code"], "ParseError");
  EXPECT_EQ(ragged.report["exit_code"], 64);

  EXPECT_EQ(cmd_perm(data("singular_1x1.txt"), kOpt).exit_code, 2);
}

TEST(CmdAdjoint, ExamplesAndWitnessReplay) {
  const CommandResult r = cmd_adjoint(data("normalized_a.txt"), true, kOpt);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["adjoint"],
            json::parse("[[0,-1,-2,-2],[-3,0,-1,-1],[-3,-4,0,-3],[-2,-3,0,0]]"));
  EXPECT_EQ(parse_matrix(r.report["matrix_file"].get<std::string>()),
            adjoint(read_matrix_file(data("normalized_a.txt"))).adj);
  ASSERT_EQ(r.report["witnesses"].size(), 16u);
  for (const auto& w : r.report["witnesses"]) {
    EXPECT_EQ(replay(r.report["inputs"]["matrix"], w["edges"]),
              TropValue(w["value"].get<double>()));
  }

  const CommandResult example = cmd_adjoint(data("supervision_example.txt"), false, kOpt);
  EXPECT_EQ(example.report["adjoint"],
            json::parse("[[9,10,6,12],[10,9,5,11],[5,6,2,6],[8,7,5,9]]"));
  EXPECT_FALSE(example.report.contains("witnesses"));

  EXPECT_EQ(cmd_adjoint(data("one_by_one.txt"), false, kOpt).exit_code, 3);
}

TEST(CmdSupervise, Examples) {
  const CommandResult r =
      cmd_supervise(data("supervision_example.txt"), "2,4", "1,2", data("priority_favour_first.txt"), kOpt);
  ASSERT_EQ(r.exit_code, 0);
  const json& res = r.report["result"];
  EXPECT_EQ(res["supervision"], pairs({{2, 1}, {4, 2}}));
  EXPECT_EQ(res["base_value"], 21);
  EXPECT_EQ(res["priority_value"], 3);
  EXPECT_EQ(res["assignments"][0]["permutation"], json::parse("[2,1,4,3]"));
  EXPECT_EQ(res["assignments"][1]["permutation"], json::parse("[1,3,4,2]"));
  const json& m = r.report["inputs"]["matrix"];
  double base = 0;
  for (const auto& a : res["assignments"]) {
    const auto& sup = a["supervised_edge"];
    base += replay(m, a["edges"]).value() -
            m[sup[0].get<int>() - 1][sup[1].get<int>() - 1].get<double>();
  }
  EXPECT_EQ(base, 21);

  const CommandResult anti =
      cmd_supervise(data("supervision_example.txt"), "2,4", "1,2", data("priority_antidiag.txt"), kOpt);
  EXPECT_EQ(anti.report["result"]["supervision"], pairs({{2, 2}, {4, 1}}));

  const CommandResult stray =
      cmd_supervise(data("normalized_a.txt"), "1,2,3", "2,3,4", data("priority_stray.txt"), kOpt);
  EXPECT_EQ(stray.exit_code, 3);
  EXPECT_EQ(stray.report["error"]["code"], "EssentialEdgeViolation");
  // Six of the nine entries are off the unique optimum.
  EXPECT_EQ(stray.report["offending"].size(), 6u);

  EXPECT_EQ(cmd_supervise(data("supervision_example.txt"), "2,0", "1,2", data("priority_favour_first.txt"), kOpt)
                .exit_code,
            64);
}

TEST(CmdJacobi, Triptych) {
  const CommandResult a = cmd_jacobi(data("normalized_a.txt"), "2,3,4", "1,2,3", true, kOpt);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.report["lhs"], -2);
  EXPECT_EQ(a.report["rhs_minor"], -2);
  EXPECT_TRUE(a.report["equality"].get<bool>());
  EXPECT_FALSE(a.report["multiplicity"].get<bool>());
  EXPECT_EQ(a.report["recovery"]["base_value"], -2);

  const CommandResult b = cmd_jacobi(data("normalized_a.txt"), "1,3,4", "1,2,3", true, kOpt);
  EXPECT_EQ(b.report["lhs"], -3);
  EXPECT_EQ(b.report["rhs_minor"], -7);
  EXPECT_FALSE(b.report["equality"].get<bool>());
  EXPECT_TRUE(b.report["multiplicity"].get<bool>());
  EXPECT_TRUE(b.report["recovery"].is_null());
  const json adj = cmd_adjoint(data("normalized_a.txt"), false, kOpt).report["adjoint"];
  ASSERT_EQ(b.report["witnesses"].size(), 2u);
  for (const auto& w : b.report["witnesses"]) EXPECT_EQ(replay(adj, w), TropValue(-3));

  const CommandResult c = cmd_jacobi(data("normalized_a.txt"), "3,4", "1,2", true, kOpt);
  EXPECT_EQ(c.report["lhs"], -6);
  EXPECT_EQ(c.report["rhs_minor"], -6);
  EXPECT_TRUE(c.report["equality"].get<bool>());
  EXPECT_TRUE(c.report["multiplicity"].get<bool>());
  EXPECT_EQ(c.report["recovery"]["supervision"], pairs({{1, 4}, {2, 3}}));
  EXPECT_EQ(c.report["inputs"]["rows"], json::parse("[3,4]"));
}

TEST(CmdCompound, Examples) {
  const CommandResult e = cmd_compound(data("supervision_example_adjoint.txt"), 2, "1,2", "2,4", kOpt);
  ASSERT_EQ(e.exit_code, 0);
  EXPECT_EQ(e.report["value"], 21);
  EXPECT_EQ(replay(e.report["inputs"]["matrix"], e.report["witness"]), TropValue(21));

  const CommandResult k1 = cmd_compound(data("supervision_example.txt"), 1, std::nullopt, std::nullopt, kOpt);
  EXPECT_EQ(k1.report["values"], k1.report["inputs"]["matrix"]);
  EXPECT_EQ(k1.report["row_subsets"][2], json::parse("[3]"));

  const CommandResult big = cmd_compound(data("zeros_40.txt"), 20, std::nullopt, std::nullopt, kOpt);
  EXPECT_EQ(big.exit_code, 4);
  EXPECT_EQ(big.report["error"]["code"], "SizeLimit");

  GlobalOptions tight;
  tight.cap = 10;
  EXPECT_EQ(cmd_compound(data("supervision_example.txt"), 2, std::nullopt, std::nullopt, tight).exit_code, 4);
  EXPECT_EQ(cmd_compound(data("supervision_example.txt"), 2, "1", "2,4", kOpt).exit_code, 3);
}

TEST(Verbose, TextGoesToSeparateChannel) {
  GlobalOptions v;
  v.verbose = true;
  const CommandResult r = cmd_perm(data("supervision_example.txt"), v);
  EXPECT_FALSE(r.verbose_text.empty());
  EXPECT_TRUE(cmd_perm(data("supervision_example.txt"), kOpt).verbose_text.empty());
}
