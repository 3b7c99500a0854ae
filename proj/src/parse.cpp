#include "detsing/parse.hpp"

#include <cctype>

#include "detsing/error.hpp"

namespace detsing {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

  PolyQ run() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    PolyQ p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw DsError(ErrorCode::Parse,
                  "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  PolyQ expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    PolyQ acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  PolyQ factor() {
    PolyQ base = atom();
    if (eat('^')) {
      unsigned e = exponent();
      base = base.pow(e);
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') fail("chained '^' needs parentheses");
    }
    return base;
  }

  PolyQ atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected operand");
    char c = s_[pos_];
    if (c == '-') {  // unary minus binds to the atom
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      PolyQ p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  PolyQ literal() {
    mpz_class num = integer();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected integer denominator");
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      Rat q(num, den);
      q.canonicalize();
      return PolyQ::from_rat(ring_, q);
    }
    return PolyQ::from_rat(ring_, Rat(num));
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip_ws();
    mpz_class e = integer();
    if (e < 0 || e > 60000) fail("exponent out of range");
    return static_cast<unsigned>(e.get_ui());
  }

  PolyQ variable() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx)
      throw DsError(ErrorCode::UnknownVariable,
                    "unknown variable '" + name + "' at position " +
                        std::to_string(start));
    return PolyQ::variable(ring_, *idx);
  }

  const std::string& s_;
  RingPtr ring_;
  size_t pos_ = 0;
};

}  // namespace

PolyQ parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace detsing
