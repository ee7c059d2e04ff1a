#include "core/eval.hpp"

#include <cctype>

#include "core/inference.hpp"
#include "core/ranges.hpp"

namespace ftopa {

namespace {

class ExprParser {
 public:
  ExprParser(const Algebra& alg, std::string_view text) : alg_(alg), text_(text) {}

  PRange parse() {
    PRange result = expression();
    skip_spaces();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "' at position " +
                       std::to_string(pos_ + 1));
    }
    return result;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void expected(std::string_view what) {
    throw ParseError("expected " + std::string(what) + " at position " +
                     std::to_string(pos_ + 1));
  }

  PRange expression() {
    PRange acc = term();
    for (;;) {
      if (eat('*')) {
        acc = range_product(alg_, acc, term());
      } else if (eat('/')) {
        acc = range_solve(alg_, acc, term());
      } else {
        return acc;
      }
    }
  }

  PRange term() {
    skip_spaces();
    if (pos_ >= text_.size()) expected("a belief literal");
    const char c = text_[pos_];
    if (c == 'i') {
      ++pos_;
      if (!eat('[')) expected("'[' after 'i'");
      PRange inner = expression();
      if (!eat(']')) expected("']'");
      return range_inverse(alg_, inner);
    }
    if (c == '(') {
      ++pos_;
      PRange inner = expression();
      if (!eat(')')) expected("')'");
      return inner;
    }
    if (c == '[') {
      ++pos_;
      PValue lo = value_literal();
      if (!eat(',')) expected("','");
      PValue up = value_literal();
      if (!eat(']')) expected("']'");
      if (lo > up) {
        throw ParseError("range endpoints out of probability order at position " +
                         std::to_string(pos_));
      }
      return PRange(lo, up);
    }
    return PRange(value_literal());
  }

  PValue value_literal() {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != 'e') expected("a literal like 'e3'");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) expected("digits after 'e'");
    try {
      return alg_.value(std::stoi(std::string(text_.substr(start, pos_ - start))));
    } catch (const std::out_of_range&) {
      throw ParseError("index too large at position " + std::to_string(start));
    }
  }

  const Algebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PRange eval_expression(const Algebra& alg, std::string_view text) {
  return ExprParser(alg, text).parse();
}

}  // namespace ftopa
