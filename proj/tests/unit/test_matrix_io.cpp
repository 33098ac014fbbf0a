#include <doctest.h>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/matrix_io.hpp"

using namespace cayleyqc;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    (void)parse_matrix(text);
    FAIL("expected a parse error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("parse the text format") {
  const auto m = parse_matrix("# Hamming\n3 7\n1 0 1 0 1 0 1\n\n0 1 1 0 0 1 1\n# mid\n0 0 0 1 1 1 1\n");
  CHECK(m == BitMatrix::from_strings({"1010101", "0110011", "0001111"}));
  CHECK(parse_matrix("2 2\n1 0\n0 1").rows() == 2);
  CHECK(parse_matrix(format_matrix(m)) == m);
}

TEST_CASE("parse errors carry line and column") {
  expect_parse_error("", 1, 1);
  expect_parse_error("2\n1 0\n", 1, 1);
  expect_parse_error("x 2\n", 1, 1);
  expect_parse_error("2 2\n1 0\n0 2\n", 3, 3);
  expect_parse_error("2 2\n1 0\n0 1 1\n", 3, 5);
  expect_parse_error("2 2\n1 0\n", 3, 1);
  expect_parse_error("1 2\n1 0\n1 1\n", 3, 1);
}

TEST_CASE("missing file") { CHECK_THROWS_AS((void)read_matrix_file("/nonexistent/h.txt"), ParseError); }
