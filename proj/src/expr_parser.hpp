#pragma once

#include <string>
#include <vector>

#include "solvspec/scalar.hpp"

namespace solvspec::detail {

struct Token {
  enum Type { Number, Ident, Punct, End } type;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& text);

// Recursive descent over the scalar grammar; shared with the guard language.
class ExprParser {
 public:
  ExprParser(const std::string& source, std::vector<Token> tokens)
      : src_(source), toks_(std::move(tokens)) {}

  Scalar parse_expr();
  const Token& peek(size_t ahead = 0) const;
  bool accept(const std::string& punct);
  void expect(const std::string& punct);
  bool at_end() const { return peek().type == Token::End; }
  size_t position() const { return pos_; }
  void reset(size_t p) { pos_ = p; }
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  Scalar parse_term();
  Scalar parse_unary();
  Scalar parse_power();
  Scalar parse_atom();

  std::string src_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace solvspec::detail
