#include "gorlef/field.hpp"

#include "gorlef/error.hpp"

#include <charconv>

namespace gorlef {

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) {
    throw DomainError("prime field characteristic out of range: " + std::to_string(p));
  }
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw DomainError("field characteristic is not prime: " + std::to_string(p));
  }
  Field f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::invalid_argument, "bad field: " + std::string(text));
    }
    return prime(p);
  }
  throw Error(ErrorCode::invalid_argument, "bad field: " + std::string(text));
}

Scalar Field::normalize(const Scalar& value) const {
  if (kind_ == Kind::rational) return value;
  return from_fraction(value.get_num(), value.get_den());
}

Scalar Field::from_int(long long value) const {
  if (kind_ == Kind::rational) return Scalar(static_cast<long>(value));
  return from_integer(mpz_class(static_cast<long>(value)));
}

Scalar Field::from_integer(const mpz_class& value) const {
  if (kind_ == Kind::rational) return Scalar(value);
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == Kind::rational) {
    if (den == 0) throw DomainError("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class d;
  mpz_fdiv_r(d.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  if (d == 0) {
    throw DomainError("coefficient denominator not invertible in " + to_string());
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  mpz_class r = num * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar Field::inverse(const Scalar& value) const {
  if (value == 0) throw DomainError("division by zero");
  if (kind_ == Kind::rational) return Scalar(1) / value;
  return from_fraction(value.get_den(), value.get_num());
}

std::uint64_t Field::to_residue(const Scalar& value) const {
  Scalar r = normalize(value);
  return mpz_get_ui(r.get_num_mpz_t());
}

std::string Field::to_string() const {
  if (kind_ == Kind::rational) return "rational";
  return "fp:" + std::to_string(p_);
}

std::string scalar_to_string(const Scalar& value) { return value.get_str(); }

}  // namespace gorlef
