#include "galois/parse.hpp"

#include <cctype>
#include <optional>

namespace galois {

namespace {

constexpr std::size_t kMaxExponent = 100000;

struct Value {
  Polynomial poly;
  // Set when the value is a bare integer literal, so that "1/2" over F_2
  // can be reported as a coefficient outside the field.
  std::optional<Integer> literal;
};

Polynomial power(Polynomial base, std::size_t e) {
  Polynomial out = Polynomial::constant(base.field().one());
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Field& field, bool allow_x) : text_(text), field_(field), allow_x_(allow_x) {}

  Polynomial run() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return std::move(v.poly);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      if (accept('+')) {
        acc = {acc.poly + term().poly, std::nullopt};
      } else if (accept('-')) {
        acc = {acc.poly - term().poly, std::nullopt};
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (accept('*')) {
        acc = {acc.poly * unary().poly, std::nullopt};
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Value d = unary();
        if (d.poly.degree() > 0) throw ParseError("division by a non-constant", at);
        if (d.poly.is_zero()) {
          if (d.literal && !d.literal->is_zero()) {
            throw ParseError("coefficient with denominator " + d.literal->to_string() + " is not in " +
                                 field_.base_field().name(),
                             at);
          }
          throw ParseError("zero denominator", at);
        }
        acc = {acc.poly * d.poly.leading().inverse(), std::nullopt};
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) return {-unary().poly, std::nullopt};
    if (accept('+')) return unary();
    return pow();
  }

  Value pow() {
    Value base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const Integer e = Integer::parse(text_.substr(start, pos_ - start));
    if (e > Integer(static_cast<long>(kMaxExponent))) throw ParseError("exponent too large", at);
    return {power(std::move(base.poly), static_cast<std::size_t>(e.to_int64())), std::nullopt};
  }

  Value atom() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return {std::move(v.poly), std::nullopt};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer n = Integer::parse(text_.substr(start, pos_ - start));
      return {Polynomial::constant(field_.from_rational(Rational(n))), n};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "x") {
        if (!allow_x_) throw ParseError("the variable x is not allowed in a field element", start);
        return {Polynomial::x(field_), std::nullopt};
      }
      for (std::size_t i = 1; i <= field_.level(); ++i) {
        if (field_.ancestor(i).generator_name() == name) return {Polynomial::constant(field_.generator(i)), std::nullopt};
      }
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Field& field_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field) { return Parser(text, field, true).run(); }

FieldElement parse_element(std::string_view text, const Field& field) {
  Polynomial p = Parser(text, field, false).run();
  return p.is_zero() ? field.zero() : p.coefficient(0);
}

}  // namespace galois
