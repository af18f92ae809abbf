#include "gorlef/polynomial.hpp"

#include "gorlef/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gorlef {

Monomial Monomial::variable(std::size_t n_vars, std::size_t index) {
  Monomial m(n_vars);
  m.exps_.at(index) = 1;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

std::string Monomial::to_string(char var) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var + 1 == current.n_vars()) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n_vars, unsigned d) {
  std::vector<Monomial> out;
  if (n_vars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(binomial(n_vars - 1 + d, d));
  Monomial current(n_vars);
  enumerate(0, d, current, out);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Polynomial Polynomial::constant(std::size_t n_vars, Field field, const Scalar& c) {
  Polynomial p(n_vars, field);
  p.add_term(Monomial(n_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, Field field, std::size_t index) {
  if (index >= n_vars) throw DomainError("variable index out of range");
  Polynomial p(n_vars, field);
  p.add_term(Monomial::variable(n_vars, index), Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, Field field, const Scalar& c) {
  Polynomial p(m.n_vars(), field);
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.n_vars() != n_vars_) throw DomainError("monomial variable count mismatch");
  Scalar value = field_.normalize(c);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (inserted) return;
  it->second = field_.normalize(it->second + value);
  if (it->second == 0) terms_.erase(it);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Grlex keeps the highest degree first.
  return static_cast<int>(terms_.begin()->first.degree());
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_) throw DomainError("polynomials live in different rings");
  if (field_ != other.field_) throw DomainError("polynomials over different fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  Scalar k = field_.normalize(c);
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = field_.normalize(v * k);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  r *= Scalar(-1);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.n_vars_, a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.n_vars_ == b.n_vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_vars_, field_, Scalar(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= n_vars_) throw DomainError("variable index out of range");
  Polynomial r(n_vars_, field_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * m[var]);
  }
  return r;
}

Scalar Polynomial::eval(std::span<const Scalar> point) const {
  if (point.size() != n_vars_) {
    throw DomainError("evaluation point has " + std::to_string(point.size()) +
                      " coordinates, expected " + std::to_string(n_vars_));
  }
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return field_.normalize(total);
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs) const {
  if (subs.size() != n_vars_) throw DomainError("substitution length mismatch");
  if (subs.empty()) return *this;
  const std::size_t target_vars = subs.front().n_vars();
  for (const auto& s : subs) {
    if (s.n_vars() != target_vars || s.field() != field_) {
      throw DomainError("substitutes must share a ring");
    }
  }
  // Cache powers of each substitute.
  std::vector<std::vector<Polynomial>> powers(n_vars_);
  Polynomial result(target_vars, field_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target_vars, field_, c);
    for (std::size_t i = 0; i < n_vars_; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target_vars, field_, Scalar(1)));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * subs[i]);
      term = term * cache[m[i]];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::over_field(Field field) const {
  Polynomial r(n_vars_, field);
  for (const auto& [m, c] : terms_) r.add_term(m, field.from_fraction(c.get_num(), c.get_den()));
  return r;
}

std::string Polynomial::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = c;
    bool negative = c < 0;
    if (negative) mag = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool is_one = m.degree() == 0;
    if (is_one) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << m.to_string(var);
    } else {
      out << mag.get_str() << '*' << m.to_string(var);
    }
  }
  return out.str();
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Scalar eval_at(const Polynomial& p, std::span<const Scalar> point) { return p.eval(point); }

}  // namespace gorlef
