#include "helpers.hpp"

#include "gorlef/error.hpp"

#include <doctest.h>

using namespace gorlef;
using testing::poly;

TEST_CASE("parse the Perazzo cubic") {
  Polynomial f = poly(testing::kPerazzo, 5);
  CHECK(f.term_count() == 3);
  CHECK(f.homogeneous_degree() == 3u);
  CHECK(f.coefficient(Monomial({0, 1, 0, 1, 1})) == 2);
  CHECK(f.coefficient(Monomial({1, 0, 0, 2, 0})) == 1);
  CHECK(f.coefficient(Monomial({0, 0, 1, 0, 2})) == 1);
}

TEST_CASE("parse zero and cancellation") {
  CHECK(poly("0", 3).is_zero());
  CHECK(poly("x0^3 - x0^3", 1).is_zero());
  CHECK(poly("0", 3).terms().empty());
  CHECK(poly("x0^3 - x0^3", 1).total_degree() == -1);
}

TEST_CASE("parse grammar") {
  CHECK(poly("2x0x1", 2) == poly("2*x0*x1", 2));
  CHECK(poly("(x0+x1)^2", 2) == poly("x0^2 + 2*x0*x1 + x1^2", 2));
  CHECK(poly("3/2*x0 - 1/2*x0", 1) == poly("x0", 1));
  CHECK(poly("-x0 + x1", 2).coefficient(Monomial({1, 0})) == -1);
  CHECK(poly("  x0 *  x1 ", 2) == poly("x0*x1", 2));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(poly("x0 +", 1), ParseError);
  CHECK_THROWS_AS(poly("", 1), ParseError);
  CHECK_THROWS_AS(poly("x5", 2), ParseError);
  CHECK_THROWS_AS(poly("x0 ** 2", 1), ParseError);
  CHECK_THROWS_AS(poly("(x0 + x1", 2), ParseError);
  try {
    poly("x0 + ?", 1);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(e.code() == ErrorCode::parse);
  }
}

TEST_CASE("coefficient not invertible mod p") {
  CHECK_THROWS_AS(poly("1/7*x0", 1, Field::prime(7)), DomainError);
  CHECK(poly("1/2*x0", 1, Field::prime(7)) == poly("4*x0", 1, Field::prime(7)));
}

TEST_CASE("fields") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("fp:101").characteristic() == 101);
  CHECK_THROWS_AS(Field::prime(100), DomainError);
  CHECK_THROWS_AS(Field::prime(1), DomainError);
  CHECK_THROWS(Field::parse("fp:abc"));
  CHECK_THROWS(Field::parse("reals"));
  Field f = Field::prime(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(15) == 1);
  CHECK(f.inverse(f.from_int(3)) == 5);
  CHECK(f.to_residue(f.from_int(-8)) == 6);
  CHECK_THROWS_AS(f.inverse(f.from_int(0)), DomainError);
}

TEST_CASE("poly_mul examples") {
  CHECK(poly_mul(poly("x0+x1", 2), poly("x0-x1", 2)) == poly("x0^2 - x1^2", 2));
  Polynomial p = poly(testing::kPerazzo, 5);
  CHECK(poly_mul(p, Polynomial::constant(5, Field::rational(), 1)) == p);
  CHECK(poly_mul(poly("x0*x3", 5), poly("x3*x4", 5)) == poly("x0*x3^2*x4", 5));
}

TEST_CASE("monomial_basis") {
  CHECK(monomial_basis(5, 2).size() == 15);
  auto one = monomial_basis(5, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].degree() == 0);
  auto b = monomial_basis(2, 3);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == Monomial({3, 0}));
  CHECK(b[1] == Monomial({2, 1}));
  CHECK(b[2] == Monomial({1, 2}));
  CHECK(b[3] == Monomial({0, 3}));
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned d = 0; d <= 8; ++d) CHECK(monomial_basis(n, d).size() == binomial(n - 1 + d, d));
}

TEST_CASE("monomial_basis agrees with the oracle enumeration") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 4; ++d) {
      auto ours = monomial_basis(n, d);
      auto theirs = oracle::exponents(n, d);
      REQUIRE(ours.size() == theirs.size());
      for (std::size_t i = 0; i < ours.size(); ++i) {
        oracle::Exps e(ours[i].exponents().begin(), ours[i].exponents().end());
        CHECK(e == theirs[i]);
      }
    }
  }
}

TEST_CASE("eval_at examples") {
  Polynomial f = poly(testing::kPerazzo, 5);
  std::vector<Scalar> pt{1, 0, 0, 1, 0};
  CHECK(eval_at(f, pt) == 1);
  std::vector<Scalar> zero(5, 0);
  CHECK(eval_at(f, zero) == 0);
  std::vector<Scalar> p2{2, 3};
  CHECK(eval_at(poly("x0*x1", 2), p2) == 6);
  std::vector<Scalar> bad{1};
  CHECK_THROWS_AS(eval_at(f, bad), DomainError);
}

TEST_CASE("ring laws against the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    oracle::Poly a = oracle::random_form(n, 1 + trial % 3, rng, 5);
    oracle::Poly b = oracle::random_form(n, 2, rng, 5);
    oracle::Poly c = oracle::random_form(n, 1, rng, 5);
    Polynomial pa = testing::from_oracle(a, n), pb = testing::from_oracle(b, n),
               pc = testing::from_oracle(c, n);
    CHECK(testing::to_oracle(pa * pb) == oracle::mul(a, b));
    CHECK(pa * pb == pb * pa);
    CHECK((pa * pb) * pc == pa * (pb * pc));
    CHECK(pa * (pb + pc) == pa * pb + pa * pc);
    for (std::size_t v = 0; v < n; ++v) CHECK(testing::to_oracle(pa.derivative(v)) == oracle::diff(a, v));
    std::vector<Scalar> pt;
    for (std::size_t i = 0; i < n; ++i) pt.push_back(static_cast<int>(rng() % 7) - 3);
    CHECK(pa.eval(pt) == oracle::eval(a, pt));
  }
}

TEST_CASE("homogeneity of evaluation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 4;
    Polynomial p = testing::from_oracle(oracle::random_form(3, d, rng, 9), 3);
    std::vector<Scalar> v{Scalar(rng() % 5), Scalar(-2), Scalar(1, 3)};
    const Scalar t(3, 2);
    std::vector<Scalar> tv;
    for (const auto& x : v) tv.push_back(t * x);
    Scalar td = 1;
    for (int i = 0; i < d; ++i) td *= t;
    CHECK(eval_at(p, tv) == td * eval_at(p, v));
  }
}

TEST_CASE("print and parse round-trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial p = testing::from_oracle(oracle::random_form(4, 1 + trial % 4, rng, 9), 4);
    p *= Scalar(1, 1 + trial % 3);
    CHECK(parse_poly(p.to_string(), 4) == p);
    CHECK(parse_poly(p.to_string(), 4).to_string() == p.to_string());
  }
  CHECK(poly("x1 + x0^2", 2).to_string() == "x0^2 + x1");
}

TEST_CASE("Frobenius over F_7") {
  Field f = Field::prime(7);
  Polynomial lhs = poly("x0 + x1", 2, f).pow(7);
  CHECK(lhs == poly("x0^7 + x1^7", 2, f));
  CHECK(poly("3*x0", 1, f).pow(6) == poly("x0^6", 1, f));
}

TEST_CASE("compose and over_field") {
  Polynomial p = poly("x0*x1", 2);
  std::vector<Polynomial> subs{poly("x0 + x1", 2), poly("x0 - x1", 2)};
  CHECK(p.compose(subs) == poly("x0^2 - x1^2", 2));
  Polynomial q = poly("1/2*x0 + 9*x1", 2).over_field(Field::prime(7));
  CHECK(q == poly("4*x0 + 2*x1", 2, Field::prime(7)));
}

TEST_CASE("infer_variable_count") {
  CHECK(infer_variable_count("x0 + x4^2") == 5);
  CHECK(infer_variable_count("3") == 0);
  CHECK(infer_variable_count("x12*x1") == 13);
}
