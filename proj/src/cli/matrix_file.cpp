#include "tropical/cli/matrix_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tropical/error.hpp"

namespace tropical::cli {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

TropValue parse_token(std::string_view tok, std::size_t line) {
  if (tok == "*" || iequals(tok, "-inf")) return kNegInf;
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double x = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), x);
  if (ec != std::errc() || end != digits.data() + digits.size() ||
      !std::isfinite(x)) {
    throw Error(Errc::kParseError, "line " + std::to_string(line) +
                                       ": bad token '" + std::string(tok) + "'");
  }
  return x;
}

}  // namespace

TropMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<TropValue>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tok;
    std::vector<TropValue> row;
    while (fields >> tok) {
      if (row.empty() && tok.front() == '#') break;
      row.push_back(parse_token(tok, line_no));
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::kParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(rows.front().size()) + " entries, got " +
                      std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::kParseError, "no matrix rows found");
  return TropMatrix::from_rows(rows);
}

TropMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const TropMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || v == 0) {
      throw Error(Errc::kParseError,
                  "bad index list '" + std::string(text) + "' (1-based, comma separated)");
    }
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

}  // namespace tropical::cli
