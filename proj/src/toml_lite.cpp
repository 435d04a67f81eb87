#include "divpos/toml_lite.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "divpos/error.hpp"

namespace divpos::toml_lite {

using nlohmann::ordered_json;

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  int line = 1;

  ordered_json root = ordered_json::object();
  ordered_json* table = nullptr;  // current insertion target

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, "toml line " + std::to_string(line) + ": " + msg);
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  char take() {
    const char c = s[pos++];
    if (c == '\n') ++line;
    return c;
  }

  void skip_inline_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  void skip_comment() {
    if (peek() == '#') {
      while (!done() && peek() != '\n') ++pos;
    }
  }

  // whitespace, comments and newlines (used between statements and inside arrays)
  void skip_filler() {
    for (;;) {
      skip_inline_ws();
      skip_comment();
      if (!done() && peek() == '\n') { take(); continue; }
      if (!done() && peek() == '\r') { ++pos; continue; }
      break;
    }
  }

  void expect_end_of_statement() {
    skip_inline_ws();
    skip_comment();
    if (done()) return;
    if (peek() == '\r') ++pos;
    if (done() || peek() == '\n') return;
    error("unexpected trailing characters");
  }

  std::string bare_or_quoted_key() {
    skip_inline_ws();
    if (peek() == '"') return basic_string();
    std::string key;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
      key += take();
    }
    if (key.empty()) error("expected key");
    return key;
  }

  std::vector<std::string> key_path() {
    std::vector<std::string> path{bare_or_quoted_key()};
    skip_inline_ws();
    while (peek() == '.') {
      take();
      path.push_back(bare_or_quoted_key());
      skip_inline_ws();
    }
    return path;
  }

  std::string basic_string() {
    if (take() != '"') error("expected '\"'");
    std::string out;
    for (;;) {
      if (done()) error("unterminated string");
      char c = take();
      if (c == '"') break;
      if (c == '\n') error("newline in string");
      if (c == '\\') {
        if (done()) error("unterminated escape");
        const char e = take();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: error("unsupported escape");
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  ordered_json value() {
    skip_inline_ws();
    const char c = peek();
    if (c == '"') return basic_string();
    if (c == '[') return array();
    if (c == '{') return inline_table();
    if (c == 't' || c == 'f') {
      if (s.substr(pos, 4) == "true") { pos += 4; return true; }
      if (s.substr(pos, 5) == "false") { pos += 5; return false; }
      error("expected boolean");
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    error("expected a value");
  }

  ordered_json integer() {
    std::string digits;
    if (peek() == '+' || peek() == '-') digits += take();
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.empty() || digits == "+" || digits == "-") error("expected digits");
    if (!done() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      error("floats are not supported; write exact numbers as strings");
    }
    errno = 0;
    const long long v = std::strtoll(digits.c_str(), nullptr, 10);
    if (errno != 0) error("integer out of range");
    return v;
  }

  ordered_json array() {
    take();  // '['
    ordered_json out = ordered_json::array();
    skip_filler();
    if (peek() == ']') { take(); return out; }
    for (;;) {
      out.push_back(value());
      skip_filler();
      if (peek() == ',') {
        take();
        skip_filler();
        if (peek() == ']') { take(); return out; }
        continue;
      }
      if (peek() == ']') { take(); return out; }
      error("expected ',' or ']' in array");
    }
  }

  ordered_json inline_table() {
    take();  // '{'
    ordered_json out = ordered_json::object();
    skip_inline_ws();
    if (peek() == '}') { take(); return out; }
    for (;;) {
      const std::vector<std::string> path = key_path();
      skip_inline_ws();
      if (take() != '=') error("expected '=' in inline table");
      insert(out, path, value());
      skip_inline_ws();
      if (peek() == ',') { take(); skip_inline_ws(); continue; }
      if (peek() == '}') { take(); return out; }
      error("expected ',' or '}' in inline table");
    }
  }

  static void insert(ordered_json& obj, const std::vector<std::string>& path, ordered_json v) {
    ordered_json* target = &obj;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      ordered_json& next = (*target)[path[i]];
      if (next.is_null()) next = ordered_json::object();
      if (!next.is_object()) fail(ErrorCode::ParseError, "toml: key '" + path[i] + "' is not a table");
      target = &next;
    }
    if (target->contains(path.back())) {
      fail(ErrorCode::ParseError, "toml: duplicate key '" + path.back() + "'");
    }
    (*target)[path.back()] = std::move(v);
  }

  // Navigate a [header] path from the root, creating tables; descends into
  // the last element of any array-of-tables on the way.
  ordered_json* navigate(const std::vector<std::string>& path, bool array_of_tables) {
    ordered_json* target = &root;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool last = i + 1 == path.size();
      ordered_json& next = (*target)[path[i]];
      if (last && array_of_tables) {
        if (next.is_null()) next = ordered_json::array();
        if (!next.is_array()) error("key '" + path[i] + "' is not an array of tables");
        next.push_back(ordered_json::object());
        return &next.back();
      }
      if (next.is_null()) next = ordered_json::object();
      if (next.is_array()) {
        if (next.empty()) error("empty array of tables '" + path[i] + "'");
        target = &next.back();
      } else if (next.is_object()) {
        target = &next;
      } else {
        error("key '" + path[i] + "' is not a table");
      }
    }
    return target;
  }

  void run() {
    table = &root;
    for (;;) {
      skip_filler();
      if (done()) break;
      if (peek() == '[') {
        take();
        const bool array_of_tables = peek() == '[';
        if (array_of_tables) take();
        const std::vector<std::string> path = key_path();
        skip_inline_ws();
        if (take() != ']') error("expected ']'");
        if (array_of_tables && take() != ']') error("expected ']]'");
        table = navigate(path, array_of_tables);
        expect_end_of_statement();
        continue;
      }
      const std::vector<std::string> path = key_path();
      skip_inline_ws();
      if (done() || take() != '=') error("expected '='");
      insert(*table, path, value());
      expect_end_of_statement();
    }
  }
};

}  // namespace

ordered_json parse(std::string_view text) {
  Parser p{};
  p.s = text;
  p.run();
  return std::move(p.root);
}

}  // namespace divpos::toml_lite
