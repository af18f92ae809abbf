#ifndef GORLEF_POLYNOMIAL_HPP
#define GORLEF_POLYNOMIAL_HPP

#include "gorlef/field.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gorlef {

// Exponent vector over variables x0..xn. Differential operators y_i = d/dx_i use the
// same representation; only the printing prefix differs.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  unsigned degree() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string(char var = 'x') const;

 private:
  std::vector<std::uint32_t> exps_;
};

// Graded lexicographic order with x0 > x1 > ... > xn. Used as a "greater" comparator so
// ordered containers iterate from the leading monomial down.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// All monomials of degree d in n_vars variables, leading monomial first.
std::vector<Monomial> monomial_basis(std::size_t n_vars, unsigned d);

std::size_t binomial(std::size_t n, std::size_t k);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

  Polynomial() = default;
  Polynomial(std::size_t n_vars, Field field) : n_vars_(n_vars), field_(field) {}

  static Polynomial constant(std::size_t n_vars, Field field, const Scalar& c);
  static Polynomial variable(std::size_t n_vars, Field field, std::size_t index);
  static Polynomial monomial(const Monomial& m, Field field, const Scalar& c = Scalar(1));

  std::size_t n_vars() const noexcept { return n_vars_; }
  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Adds c * m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  // Degree shared by all terms, or nullopt for mixed degrees. The zero polynomial
  // reports nullopt.
  std::optional<unsigned> homogeneous_degree() const;
  int total_degree() const;  // -1 for zero

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  Scalar eval(std::span<const Scalar> point) const;
  // Substitutes subs[i] for variable i; all substitutes share a ring.
  Polynomial compose(std::span<const Polynomial> subs) const;
  // Same terms with coefficients mapped into another field.
  Polynomial over_field(Field field) const;

  std::string to_string(char var = 'x') const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t n_vars_ = 0;
  Field field_;
  TermMap terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Scalar eval_at(const Polynomial& p, std::span<const Scalar> point);

// Grammar: sums of terms; a term is a product of coefficients (integer or a/b) and
// variable powers x<i>^<e>. '*' is optional between factors and parentheses group
// subexpressions. Whitespace is ignored. Throws ParseError on malformed text or
// unknown variables and DomainError on coefficients that are not invertible mod p.
Polynomial parse_poly(std::string_view text, std::size_t n_vars, Field field = Field::rational(),
                      char var = 'x');

// Largest variable index mentioned in the text plus one (0 if none).
std::size_t infer_variable_count(std::string_view text, char var = 'x');

}  // namespace gorlef

#endif  // GORLEF_POLYNOMIAL_HPP
