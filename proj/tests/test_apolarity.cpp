#include "helpers.hpp"

#include "gorlef/apolarity.hpp"

#include <doctest.h>

using namespace gorlef;
using testing::poly;

namespace {

// Double inclusion of spans, by coordinates over the monomials of the given degree.
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t n, unsigned d) {
  const auto mons = monomial_basis(n, d);
  auto vec = [&](const Polynomial& p) {
    Vector v;
    for (const auto& m : mons) v.push_back(p.coefficient(m));
    return v;
  };
  std::vector<Vector> va, vb;
  for (const auto& p : a) va.push_back(vec(p));
  for (const auto& p : b) vb.push_back(vec(p));
  for (const auto& v : va)
    if (!coords_in_span(v, vb)) return false;
  for (const auto& v : vb)
    if (!coords_in_span(v, va)) return false;
  return true;
}

const std::vector<std::string> kPerazzoAnn2{"x0^2",      "x0*x1", "x0*x2",         "x0*x4",
                                            "x1^2",      "x1*x2", "x2^2",          "x2*x3",
                                            "x0*x3 - x1*x4", "x1*x3 - x2*x4"};

}  // namespace

TEST_CASE("contract examples") {
  CHECK(contract(poly("x0", 1), poly("x0^2", 1)) == poly("2*x0", 1));
  Polynomial f = poly(testing::kPerazzo, 5);
  CHECK(contract(poly("x0^2", 5), f).is_zero());
  CHECK(contract(poly("x3^2", 5), f) == poly("2*x0", 5));
  CHECK(contract(poly("x0*x3^2", 5), f) == poly("2", 5));
  CHECK(contract(poly("x1*x3*x4", 5), f) == poly("2", 5));
  CHECK(contract(poly("x2*x4^2", 5), f) == poly("2", 5));
}

TEST_CASE("contract is an action") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial g = testing::from_oracle(oracle::random_form(3, 4, rng, 5), 3);
    Polynomial d1 = testing::from_oracle(oracle::random_form(3, 1, rng, 5), 3);
    Polynomial d2 = testing::from_oracle(oracle::random_form(3, 2, rng, 5), 3);
    CHECK(contract(d1 * d2, g) == contract(d1, contract(d2, g)));
  }
}

TEST_CASE("catalecticant examples") {
  for (unsigned i = 0; i <= 4; ++i) CHECK(rank(catalecticant(poly("x0^4", 3), i).map) == 1);
  Polynomial f = poly(testing::kPerazzo, 5);
  CHECK(rank(catalecticant(f, 2).map) == 5);
  Catalecticant c3 = catalecticant(f, 3);
  CHECK(c3.map.rows() == 1);
  CHECK(c3.map.cols() == 35);
  CHECK(rank(c3.map) == 1);
  const auto ops = monomial_basis(5, 3);
  std::vector<Monomial> nonzero;
  for (std::size_t j = 0; j < ops.size(); ++j)
    if (c3.map(0, j) != 0) nonzero.push_back(ops[j]);
  REQUIRE(nonzero.size() == 3);
  CHECK(nonzero[0] == Monomial({1, 0, 0, 2, 0}));
  CHECK(nonzero[1] == Monomial({0, 1, 0, 1, 1}));
  CHECK(nonzero[2] == Monomial({0, 0, 1, 0, 2}));
}

TEST_CASE("catalecticant ranks match the partials oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const int d = 3 + trial % 3;
    oracle::Poly g = oracle::random_form(n, d, rng, 4);
    if (trial % 4 == 0) g = oracle::mul(oracle::random_form(n, 1, rng, 3), oracle::random_form(n, d - 1, rng, 3));
    Polynomial pg = testing::from_oracle(g, n);
    if (pg.is_zero()) continue;
    const auto h = oracle::inverse_system_hilbert(g, n, d);
    for (int i = 0; i <= d; ++i) {
      const std::size_t r = rank(catalecticant(pg, i).map);
      CHECK(r == h[i]);
      CHECK(r == rank(catalecticant(pg, d - i).map));
      CHECK(annihilator_piece(pg, i).size() + r == binomial(n - 1 + i, i));
    }
  }
}

TEST_CASE("annihilator_piece examples") {
  Polynomial f = poly(testing::kPerazzo, 5);
  CHECK(annihilator_piece(f, 1).empty());
  auto ann2 = annihilator_piece(f, 2);
  CHECK(ann2.size() == 10);
  CHECK(same_span(ann2, testing::polys(kPerazzoAnn2, 5), 5, 2));
  for (const auto& d : ann2) CHECK(contract(d, f).is_zero());
  auto a = annihilator_piece(poly("x0^3", 2), 1);
  CHECK(same_span(a, {poly("x1", 2)}, 2, 1));
}

TEST_CASE("is_cone examples") {
  CHECK_FALSE(is_cone(poly(testing::kPerazzo, 5)));
  CHECK(is_cone(poly("x0^3", 5)));
  CHECK_FALSE(is_cone(poly(testing::kFermat4, 4)));
  CHECK(is_cone(poly("(x0 + x1)^3 + x2^3", 3)));
}
