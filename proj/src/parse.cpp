#include "gorlef/error.hpp"
#include "gorlef/polynomial.hpp"

#include <cctype>

namespace gorlef {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n_vars, Field field, char var)
      : text_(text), n_vars_(n_vars), field_(field), var_(var) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  Polynomial expr() {
    Polynomial sum(n_vars_, field_);
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial t = term();
    sum += negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = term();
      if (c == '+') {
        sum += next;
      } else {
        sum -= next;
      }
    }
    return sum;
  }

  bool starts_factor(char c) const {
    return c == var_ || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial term() {
    Polynomial product = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        product = product * factor();
      } else if (starts_factor(c)) {
        product = product * factor();
      } else {
        break;
      }
    }
    return product;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = integer();
      if (!e.fits_uint_p() || e > 1000) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == var_) {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected variable index", pos_);
      }
      mpz_class idx = integer();
      if (!idx.fits_ulong_p() || idx.get_ui() >= n_vars_) {
        throw ParseError("unknown variable " + std::string(1, var_) + idx.get_str(), at);
      }
      return Polynomial::variable(n_vars_, field_, idx.get_ui());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("expected denominator", pos_);
        }
        std::size_t den_at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", den_at);
      }
      return Polynomial::constant(n_vars_, field_, field_.from_fraction(num, den));
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unknown variable '") + c + "'", pos_);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t n_vars_;
  Field field_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t n_vars, Field field, char var) {
  return Parser(text, n_vars, field, var).parse();
}

std::size_t infer_variable_count(std::string_view text, char var) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != var) continue;
    std::size_t j = i + 1;
    std::size_t idx = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      idx = idx * 10 + static_cast<std::size_t>(text[j] - '0');
      any = true;
      ++j;
    }
    if (any) count = std::max(count, idx + 1);
  }
  return count;
}

}  // namespace gorlef
