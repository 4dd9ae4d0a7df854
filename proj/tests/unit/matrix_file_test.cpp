#include <gtest/gtest.h>

#include "tropical/cli/matrix_file.hpp"
#include "tropical/error.hpp"

using namespace tropical;
using namespace tropical::cli;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

}  // namespace

TEST(ParseMatrix, TokensAndComments) {
  const TropMatrix m = parse_matrix(
      "# header\n"
      "  1  -2 *\n"
      "\n"
      "   # indented comment\n"
      "-INF +3 0.5\n");
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(0, 0), TropValue(1));
  EXPECT_EQ(m(0, 1), TropValue(-2));
  EXPECT_TRUE(m(0, 2).is_neg_inf());
  EXPECT_TRUE(m(1, 0).is_neg_inf());
  EXPECT_EQ(m(1, 1), TropValue(3));
  EXPECT_EQ(m(1, 2), TropValue(0.5));
}

TEST(ParseMatrix, WindowsLineEndings) {
  const TropMatrix m = parse_matrix("1 2\r\n3 4\r\n");
  EXPECT_EQ(m, (TropMatrix{{1, 2}, {3, 4}}));
}

TEST(ParseMatrix, Errors) {
  EXPECT_EQ(code_of([] { parse_matrix("1 2\n3\n"); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { parse_matrix(""); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { parse_matrix("# only a comment\n\n"); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { parse_matrix("1 x\n"); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { parse_matrix("1 2abc\n"); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { parse_matrix("inf 0\n"); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { parse_matrix("nan 0\n"); }), Errc::kParseError);
}

TEST(ReadMatrixFile, FromDisk) {
  const TropMatrix m = read_matrix_file(TEST_DATA_DIR "/supervision_example.txt");
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m(2, 3), TropValue(6));
  EXPECT_EQ(code_of([] { read_matrix_file(TEST_DATA_DIR "/ragged.txt"); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { read_matrix_file(TEST_DATA_DIR "/missing.txt"); }), Errc::kParseError);
}

TEST(FormatMatrix, RoundTrips) {
  const TropMatrix m{{1, kNegInf, -2.25}, {0, 7, -9}};
  const std::string text = format_matrix(m);
  EXPECT_EQ(text, "1 -inf -2.25\n0 7 -9\n");
  EXPECT_EQ(parse_matrix(text), m);
}

TEST(ParseIndexList, StaysOneBased) {
  EXPECT_EQ(parse_index_list("2,4,1"), (std::vector<std::size_t>{2, 4, 1}));
  EXPECT_EQ(parse_index_list(" 3 , 1 "), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(parse_index_list("7"), (std::vector<std::size_t>{7}));
}

TEST(ParseIndexList, Errors) {
  for (const char* bad : {"", "0", "1,,2", "1,a", "-1", "1,", "2.5"}) {
    EXPECT_EQ(code_of([&] { parse_index_list(bad); }), Errc::kParseError) << bad;
  }
}
