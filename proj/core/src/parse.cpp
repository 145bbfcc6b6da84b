#include <cctype>

#include "qsym/coeff.hpp"

namespace qsym {
namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    RatFunc r = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  RatFunc expr() {
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    RatFunc r = term();
    if (negate) r = -r;
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = power();
    while (true) {
      skip_space();
      if (pos_ == text_.size()) return r;
      char c = text_[pos_];
      if (c == '*') {
        ++pos_;
        r *= power();
      } else if (c == '/') {
        std::size_t at = pos_++;
        RatFunc d = power();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else if (c == '(' || c == 'q' || c == 't') {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    skip_space();
    std::size_t at = pos_;
    long e = integer();
    if (e > 1000) throw ParseError("exponent too large", at);
    if (negative && base.is_zero()) throw ParseError("zero to a negative power", at);
    return base.pow(negative ? -static_cast<int>(e) : static_cast<int>(e));
  }

  RatFunc primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (c == 'q') {
      ++pos_;
      return RatFunc::q();
    }
    if (c == 't') {
      ++pos_;
      return RatFunc::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rat(std::string(text_.substr(start, pos_ - start))));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    if (pos_ - start > 6) throw ParseError("integer too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return ExprParser(text).parse(); }

Rat parse_rat(std::string_view text) {
  RatFunc r = parse_ratfunc(text);
  auto c = r.as_constant();
  if (!c) throw ParseError("expected a rational number", 0);
  return *c;
}

}  // namespace qsym
