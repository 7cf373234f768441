#include "hgterm/parse.hpp"

#include <cctype>
#include <string>

#include "hgterm/errors.hpp"

namespace hgterm {

namespace {

class Parser {
 public:
  // arity == 0 selects the univariate grammar with variable t
  Parser(std::string_view text, std::size_t arity, bool univariate)
      : text_(text), arity_(univariate ? 1 : arity), univariate_(univariate) {}

  // Top-level product kept in factored form; a top-level sum is one factor.
  std::vector<std::pair<MultiPoly, unsigned>> parse_product() {
    std::vector<std::pair<MultiPoly, unsigned>> out;
    bool negate = false;
    while (peek('-') || peek('+')) {
      if (text_[pos_] == '-') negate = !negate;
      ++pos_;
    }
    while (true) {
      MultiPoly base = primary();
      unsigned e = 1;
      if (peek('^')) {
        ++pos_;
        skip_ws();
        const std::string d = digits();
        if (d.empty()) fail("exponent must be a nonnegative integer literal");
        if (d.size() > 4) fail("exponent too large");
        e = static_cast<unsigned>(std::stoul(d));
      }
      out.emplace_back(std::move(base), e);
      if (!peek('*')) break;
      ++pos_;
    }
    skip_ws();
    if (pos_ != text_.size()) {
      pos_ = 0;
      return {{parse(), 1u}};
    }
    if (negate) out.emplace_back(MultiPoly::constant(arity_, -1), 1u);
    return out;
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    skip_ws();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == 'z' || c == 't' || std::isdigit(static_cast<unsigned char>(c))) {
        fail("implicit multiplication is not allowed");
      }
    }
    return acc;
  }

  MultiPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer literal");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::string den = digits();
        if (den.empty()) fail("expected denominator after '/'");
        if (Int(den) == 0) fail("zero denominator");
        lit += "/" + den;
      }
      return MultiPoly::constant(arity_, parse_rat(lit));
    }
    if (univariate_ && c == 't') {
      ++pos_;
      return MultiPoly::variable(1, 0);
    }
    if (!univariate_ && c == 'z') {
      ++pos_;
      const std::string idx = digits();
      if (idx.empty()) fail("expected variable index after 'z'");
      const auto i = std::stoul(idx);
      if (i < 1 || i > arity_) fail("variable z" + idx + " outside arity " + std::to_string(arity_));
      return MultiPoly::variable(arity_, i - 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t arity_;
  bool univariate_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t arity) {
  return Parser(text, arity, false).parse();
}

std::vector<std::pair<MultiPoly, unsigned>> parse_product(std::string_view text,
                                                          std::size_t arity) {
  return Parser(text, arity, false).parse_product();
}

UniPoly parse_unipoly(std::string_view text) {
  const MultiPoly p = Parser(text, 1, true).parse();
  std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(p.total_degree(), 0) + 1), Rat(0));
  for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
  return UniPoly(std::move(coeffs));
}

}  // namespace hgterm
