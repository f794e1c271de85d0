#pragma once

// Surface syntax for polynomials:
//
//   poly   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := ident ('^' uint)? | '(' poly ')' ('^' uint)? | '0' | '1'
//   ident  := [A-Za-z][A-Za-z0-9_']*
//
// Whitespace between tokens is ignored. Printing emits the same grammar in
// canonical term order, so print(parse(print(p))) == print(p).

#include <cctype>
#include <string>
#include <string_view>

#include "f2coh/error.hpp"
#include "f2coh/polynomial.hpp"

namespace f2coh {

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, TablePtr table)
      : text_(text), table_(std::move(table)) {}

  Polynomial parse() {
    Polynomial p = poly();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial poly() {
    Polynomial p = term();
    while (accept('+')) p += term();
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 65535) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent");
    return static_cast<unsigned>(value);
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = poly();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) return inner.pow(exponent());
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("only the constants 0 and 1 exist over F2");
      return c == '0' ? Polynomial(table_) : Polynomial::one(table_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      auto index = table_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      unsigned e = 1;
      if (accept('^')) e = exponent();
      return Polynomial(table_,
                        generator_monomial(*table_, *index,
                                           static_cast<std::uint16_t>(e)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  TablePtr table_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const TablePtr& table) {
  return detail::ExpressionParser(text, table).parse();
}

inline std::string to_string(const Monomial& m, const GeneratorTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!m.exponents[i]) continue;
    if (!out.empty()) out += '*';
    out += table.name(i);
    if (m.exponents[i] > 1) out += '^' + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(m, *p.table());
  }
  return out;
}

}  // namespace f2coh
