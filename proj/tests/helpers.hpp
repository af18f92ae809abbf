#ifndef GORLEF_TESTS_HELPERS_HPP
#define GORLEF_TESTS_HELPERS_HPP

#include "oracle.hpp"

#include "gorlef/algebra.hpp"
#include "gorlef/matrix.hpp"
#include "gorlef/polynomial.hpp"
#include "gorlef/random.hpp"

#include <string>
#include <vector>

namespace testing {

inline const char* kPerazzo = "x0*x3^2 + 2*x1*x3*x4 + x2*x4^2";
inline const char* kFermat4 = "x0^3 + x1^3 + x2^3 + x3^3";

inline gorlef::Polynomial poly(const std::string& text, std::size_t n,
                               gorlef::Field f = gorlef::Field::rational()) {
  return gorlef::parse_poly(text, n, f);
}

inline std::vector<gorlef::Polynomial> polys(const std::vector<std::string>& texts, std::size_t n,
                                             gorlef::Field f = gorlef::Field::rational()) {
  std::vector<gorlef::Polynomial> out;
  for (const auto& t : texts) out.push_back(gorlef::parse_poly(t, n, f));
  return out;
}

inline gorlef::GradedAlgebra monomial_ci(std::size_t n = 5, gorlef::Field f = gorlef::Field::rational()) {
  std::vector<gorlef::Polynomial> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(gorlef::Polynomial::variable(n, f, i).pow(2));
  return gorlef::GradedAlgebra::from_regular_sequence(g);
}

// Uniform integer in [lo, hi] as an exact scalar.
inline gorlef::Scalar uni(gorlef::Rng& rng, long lo, long hi) {
  return gorlef::Scalar(static_cast<long>(rng.uniform(lo, hi)));
}

inline oracle::Poly to_oracle(const gorlef::Polynomial& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) {
    oracle::Exps e(m.exponents().begin(), m.exponents().end());
    out[e] = c;
  }
  return out;
}

inline gorlef::Polynomial from_oracle(const oracle::Poly& p, std::size_t n) {
  gorlef::Polynomial out(n, gorlef::Field::rational());
  for (const auto& [e, c] : p) {
    std::vector<std::uint32_t> ex(e.begin(), e.end());
    out.add_term(gorlef::Monomial(ex), c);
  }
  return out;
}

inline std::vector<oracle::Row> to_rows(const gorlef::Matrix& m) {
  std::vector<oracle::Row> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

inline gorlef::Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int box,
                                    int zero_bias = 0) {
  std::uniform_int_distribution<int> d(-box, box);
  std::uniform_int_distribution<int> z(0, 9);
  gorlef::Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? 0 : d(rng);
  return m;
}

}  // namespace testing

#endif  // GORLEF_TESTS_HELPERS_HPP
