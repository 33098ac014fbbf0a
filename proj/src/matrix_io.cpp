#include "cayleyqc/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok.text) + "'", line, tok.column);
  }
  return value;
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  BitMatrix m;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    last_line = line_no;

    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError("header must be 'r n'", line_no, tokens.front().column);
      }
      rows = parse_count(tokens[0], line_no);
      cols = parse_count(tokens[1], line_no);
      m = BitMatrix(0, cols);
      have_header = true;
      continue;
    }

    if (m.rows() == rows) {
      throw ParseError("more than the declared " + std::to_string(rows) + " rows", line_no, tokens.front().column);
    }
    if (tokens.size() != cols) {
      const std::size_t col = tokens.size() > cols ? tokens[cols].column : line.size() + 1;
      throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()),
                       line_no, col);
    }
    BitVector row(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& tok = tokens[j];
      if (tok.text == "1") {
        row.set(j);
      } else if (tok.text != "0") {
        throw ParseError("entry must be 0 or 1, got '" + std::string(tok.text) + "'", line_no, tok.column);
      }
    }
    m.append_row(std::move(row));
  }

  if (!have_header) throw ParseError("missing 'r n' header", last_line, 1);
  if (m.rows() != rows) {
    throw ParseError("declared " + std::to_string(rows) + " rows but found " + std::to_string(m.rows()), last_line,
                     1);
  }
  return m;
}

BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m.get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace cayleyqc
