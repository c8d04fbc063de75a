#include "mvq/parser.hpp"

#include <cctype>

#include "mvq/errors.hpp"

namespace mvq {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term term_only() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

  Quasiequation quasiequation() {
    Quasiequation q;
    skip_ws();
    if (!lookahead("=>")) {
      q.premises.push_back(parse_equation());
      while (true) {
        skip_ws();
        if (!consume_if('&')) break;
        q.premises.push_back(parse_equation());
      }
    }
    expect_arrow();
    skip_ws();
    if (peek() == 'V' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      q.conclusion = parse_variety_atom();
    } else {
      q.conclusion = parse_equation();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& message) { throw parse_error(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume_if(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool lookahead(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (!consume_if(c)) fail(std::string("expected ") + what);
  }

  void expect_arrow() {
    skip_ws();
    if (!lookahead("=>")) fail("expected '=>'");
    pos_ += 2;
  }

  unsigned parse_nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
    unsigned long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1'000'000'000ul) fail("natural number too large");
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  Term parse_term() {
    Term t = parse_factor();
    while (true) {
      skip_ws();
      if (!consume_if('+')) break;
      t = t_add(std::move(t), parse_factor());
    }
    return t;
  }

  Term parse_factor() {
    skip_ws();
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return t_neg(parse_factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const unsigned value = parse_nat();
      skip_ws();
      if (consume_if('*')) return t_scalar(value, parse_factor());
      if (value == 0) return t_zero();
      if (value == 1) return t_one();
      pos_ = at;
      fail("unbound constant: naturals other than 0 and 1 must multiply a term");
    }
    if (c == 'x' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      return t_var(static_cast<int>(parse_nat()));
    }
    if (c == '(') {
      ++pos_;
      Term t = parse_term();
      expect(')', "')'");
      return t;
    }
    fail("expected a term");
  }

  Equation parse_equation() {
    Term lhs = parse_term();
    skip_ws();
    if (lookahead("=>")) fail("expected '=' before '=>'");
    expect('=', "'='");
    Term rhs = parse_term();
    return {std::move(lhs), std::move(rhs)};
  }

  VarietyAtom parse_variety_atom() {
    VarietyAtom atom;
    ++pos_;  // 'V'
    expect('[', "'['");
    atom.moduli.push_back(static_cast<int>(parse_nat()));
    while (true) {
      skip_ws();
      if (!consume_if(',')) break;
      atom.moduli.push_back(static_cast<int>(parse_nat()));
    }
    for (int m : atom.moduli) {
      if (m < 1) fail("variety atom moduli must be positive");
    }
    expect(']', "']'");
    expect('(', "'('");
    skip_ws();
    if (peek() != 'x') fail("expected a variable");
    ++pos_;
    atom.var = static_cast<int>(parse_nat());
    expect(')', "')'");
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).term_only(); }

Quasiequation parse_quasiequation(std::string_view text) { return Parser(text).quasiequation(); }

}  // namespace mvq
