// Character cursor shared by the hand-written recursive-descent parsers.

#ifndef U1_SRC_TEXT_CURSOR_HPP
#define U1_SRC_TEXT_CURSOR_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "u1/errors.hpp"

namespace u1::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  struct Mark {
    std::size_t pos;
    int line;
    int column;
  };

  Mark mark() const { return {pos_, line_, column_}; }
  void reset(Mark m) {
    pos_ = m.pos;
    line_ = m.line;
    column_ = m.column;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Next character without skipping whitespace.
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool looking_at(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!looking_at(token)) return false;
    for (std::size_t i = 0; i < token.size(); ++i) advance();
    return true;
  }

  // Accepts a keyword only when it is not the prefix of a longer identifier.
  bool accept_keyword(std::string_view word) {
    if (!looking_at(word)) return false;
    const char next = peek_raw(word.size());
    if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'" + found());
  }

  bool at_identifier() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string peek_identifier() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
      ++end;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string identifier(const char* what) {
    std::string id = peek_identifier();
    if (id.empty()) fail(std::string("expected ") + what + found());
    for (std::size_t i = 0; i < id.size(); ++i) advance();
    return id;
  }

  unsigned integer(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what + found());
    }
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 1000000000ULL) fail("integer too large");
      advance();
    }
    return static_cast<unsigned>(value);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return ", found '" + std::string(1, text_[pos_]) + "'";
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace u1::detail

#endif  // U1_SRC_TEXT_CURSOR_HPP
