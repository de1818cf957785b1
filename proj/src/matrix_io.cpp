#include "torsionforge/matrix_io.hpp"

#include "torsionforge/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace torsionforge {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
      continue;
    }
    Token tok{{}, line, column};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      tok.text.push_back(text[i]);
      ++i;
      ++column;
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

BigInt parse_integer(const Token& tok) {
  std::string_view s = tok.text;
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = s.size() > start;
  for (std::size_t k = start; ok && k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) ok = false;
  }
  if (!ok) throw ParseError("expected an integer, found '" + tok.text + "'", tok.line, tok.column);
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits);
}

std::size_t parse_count(const Token& tok, const char* what) {
  BigInt v = parse_integer(tok);
  if (v < 0 || !v.fits_ulong_p()) {
    throw ParseError(std::string("invalid ") + what + " '" + tok.text + "'", tok.line, tok.column);
  }
  return v.get_ui();
}

BigInt json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<unsigned long long>()))
                                  : BigInt(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) {
      throw ParseError("matrix entry '" + v.get<std::string>() + "' is not an integer", 0, 0);
    }
    return out;
  }
  throw ParseError("matrix entry " + v.dump() + " is not an integer", 0, 0);
}

IntMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0, 0);
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("JSON matrix must be an object with a \"rows\" array", 0, 0);
  }
  const auto& rows = doc["rows"];
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
  IntMatrix out(static_cast<Index>(m), static_cast<Index>(n));
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("row " + std::to_string(i + 1) + " does not have " + std::to_string(n) +
                           " entries",
                       0, 0);
    }
    for (std::size_t j = 0; j < n; ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) = json_integer(rows[i][j]);
    }
  }
  return out;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty matrix input", 1, 1);
  if (text[first] == '{') return parse_matrix_json(text);

  auto tokens = tokenize(text);
  if (tokens.size() < 2 || tokens[1].line != tokens[0].line) {
    const Token& t = tokens[0];
    throw ParseError("header must be 'rows cols'", t.line, t.column);
  }
  const std::size_t rows = parse_count(tokens[0], "row count");
  const std::size_t cols = parse_count(tokens[1], "column count");
  const std::size_t expected = rows * cols;
  if (tokens.size() - 2 < expected) {
    const Token& last = tokens.back();
    throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(tokens.size() - 2),
                     last.line, last.column + last.text.size());
  }
  if (tokens.size() - 2 > expected) {
    const Token& extra = tokens[2 + expected];
    throw ParseError("unexpected trailing token '" + extra.text + "'", extra.line, extra.column);
  }
  IntMatrix out(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t k = 0; k < expected; ++k) {
    out(static_cast<Index>(k / cols), static_cast<Index>(k % cols)) = parse_integer(tokens[2 + k]);
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntMatrix read_matrix(const std::filesystem::path& path) { return parse_matrix(read_text(path)); }

std::string format_matrix(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_json(const IntMatrix& m) {
  // Entries that fit in 64 bits are plain numbers; larger ones are decimal
  // strings.
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p()) {
        row.push_back(m(i, j).get_si());
      } else {
        row.push_back(m(i, j).get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", rows}}.dump() + "\n";
}

}  // namespace torsionforge
