#ifndef GORLEF_FIELD_HPP
#define GORLEF_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gorlef {

// Every coefficient is carried as a GMP rational. Over a prime field the value is
// kept as its canonical integer representative in [0, p).
using Scalar = mpq_class;

class Field {
 public:
  enum class Kind { rational, prime };

  Field() = default;
  static Field rational() { return Field{}; }
  // Throws DomainError unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  // Accepts "rational" or "fp:<p>".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar normalize(const Scalar& value) const;
  Scalar from_int(long long value) const;
  Scalar from_integer(const mpz_class& value) const;
  // num/den in this field; throws DomainError when den is not invertible.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  Scalar inverse(const Scalar& value) const;

  std::uint64_t to_residue(const Scalar& value) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

 private:
  Kind kind_ = Kind::rational;
  std::uint64_t p_ = 0;
};

std::string scalar_to_string(const Scalar& value);

}  // namespace gorlef

#endif  // GORLEF_FIELD_HPP
