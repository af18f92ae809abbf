#include "helpers.hpp"

#include "gorlef/apolarity.hpp"
#include "gorlef/error.hpp"
#include "gorlef/gnlab.hpp"

#include <doctest.h>

using namespace gorlef;
using testing::poly;

namespace {

using HV = std::vector<std::size_t>;

void structural_gates(const GradedAlgebra& a) {
  CHECK(a.is_hilbert_symmetric());
  CHECK(a.is_standard());
  CHECK(a.dim(a.socle_degree()) == 1);
  for (unsigned s = 0; s <= a.socle_degree(); ++s) CHECK(a.pairing_check(s).perfect);
}

// Element of the squarefree oracle with the same value as a class in the monomial CI.
oracle::Squarefree::Element to_squarefree(const GradedAlgebra& a, const AlgebraElement& e) {
  oracle::Squarefree::Element out;
  const auto& basis = a.basis(e.degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (e.coords[i] == 0) continue;
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < basis[i].n_vars(); ++v) {
      REQUIRE(basis[i][v] <= 1);
      if (basis[i][v]) s |= 1u << v;
    }
    out[s] = e.coords[i];
  }
  return out;
}

}  // namespace

TEST_CASE("from_inverse_system examples") {
  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5));
  CHECK(p.hilbert() == HV{1, 5, 5, 1});
  CHECK(p.socle_degree() == 3);
  CHECK(GradedAlgebra::from_inverse_system(poly("x0^4", 1)).hilbert() == HV{1, 1, 1, 1, 1});
  CHECK(GradedAlgebra::from_inverse_system(poly("x0*x1", 2)).hilbert() == HV{1, 2, 1});
  CHECK_THROWS_AS(GradedAlgebra::from_inverse_system(poly("0", 2)), DomainError);
  CHECK_THROWS_AS(GradedAlgebra::from_inverse_system(poly("x0^2 + x1", 2)), DomainError);
}

TEST_CASE("from_regular_sequence examples") {
  GradedAlgebra ci = testing::monomial_ci();
  CHECK(ci.hilbert() == HV{1, 5, 10, 10, 5, 1});
  CHECK(ci.socle_degree() == 5);
  auto fermat = GradedAlgebra::from_regular_sequence(testing::polys({"3*x0^2", "3*x1^2", "3*x2^2", "3*x3^2"}, 4));
  CHECK(fermat.hilbert() == HV{1, 4, 6, 4, 1});
  try {
    GradedAlgebra::from_regular_sequence(testing::polys({"x0^2", "x0*x1", "x1^2", "x2^2", "x3^2"}, 5));
    FAIL("accepted a non-regular sequence");
  } catch (const NotRegularSequence& e) {
    CHECK(e.code() == ErrorCode::not_regular_sequence);
    CHECK(e.degree() >= 2);
  }
  CHECK_THROWS_AS(GradedAlgebra::from_regular_sequence(testing::polys({"x0^2", "x1^2"}, 3)), DomainError);
}

TEST_CASE("complete intersection Hilbert functions") {
  CHECK(complete_intersection_hilbert({2, 2, 2, 2, 2}) == HV{1, 5, 10, 10, 5, 1});
  CHECK(complete_intersection_hilbert({2, 3}) == HV{1, 2, 2, 1});
  auto a = GradedAlgebra::from_regular_sequence(testing::polys({"x0^2 + x1^2", "x0*x1*x2", "x2^2 - x0*x1"}, 3));
  CHECK(a.hilbert() == complete_intersection_hilbert({2, 3, 2}));
  structural_gates(a);
}

TEST_CASE("Hilbert function matches the catalecticant oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const int d = 3 + trial % 3;
    oracle::Poly g = oracle::random_form(n, d, rng, 5);
    Polynomial pg = testing::from_oracle(g, n);
    if (pg.is_zero()) continue;
    GradedAlgebra a = GradedAlgebra::from_inverse_system(pg);
    const auto h = oracle::inverse_system_hilbert(g, n, d);
    CHECK(a.hilbert() == HV(h.begin(), h.end()));
    for (int i = 0; i <= d; ++i) CHECK(a.dim(i) == rank(catalecticant(pg, i).map));
    structural_gates(a);
  }
}

TEST_CASE("reduce examples") {
  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5));
  AlgebraElement y0y3 = p.reduce(poly("x0*x3", 5));
  CHECK(std::count(y0y3.coords.begin(), y0y3.coords.end(), Scalar(0)) + 1 ==
        static_cast<long>(y0y3.coords.size()));
  AlgebraElement sigma = p.reduce(poly("x0*x3^2", 5));
  CHECK_FALSE(sigma.is_zero());
  CHECK(p.reduce(poly("x1*x3*x4", 5)) == sigma);
  CHECK(p.reduce(poly("x2*x4^2", 5)) == sigma);
  CHECK(p.reduce(poly("x0^2", 5)).is_zero());
  GradedAlgebra ci = testing::monomial_ci();
  for (const auto& g : ci.generators()) CHECK(ci.reduce(g).is_zero());
  CHECK(ci.reduce(poly("x0*x1", 5), 2) == ci.reduce(poly("x1*x0", 5)));
  CHECK(ci.reduce(poly("0", 5), 2).is_zero());
  CHECK_THROWS_AS(ci.reduce(poly("0", 5)), DomainError);
}

TEST_CASE("power examples") {
  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5));
  CHECK(p.power(p.variable(2), 0) == p.one());
  CHECK(p.power(p.variable(0), 2).is_zero());
  GradedAlgebra ci = testing::monomial_ci();
  AlgebraElement x = ci.add(ci.variable(0), ci.variable(1));
  CHECK(ci.power(x, 2) == ci.reduce(poly("2*x0*x1", 5)));
  CHECK(ci.power(x, 3).is_zero());
  CHECK_THROWS_AS(ci.power(x, 6), DomainError);
}

TEST_CASE("multiplication agrees with the squarefree oracle") {
  GradedAlgebra ci = testing::monomial_ci();
  oracle::Squarefree sq{5};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Scalar> c1, c2;
    for (int i = 0; i < 5; ++i) {
      c1.push_back(static_cast<long>(rng() % 11) - 5);
      c2.push_back(static_cast<long>(rng() % 11) - 5);
    }
    AlgebraElement l1 = ci.linear_form(c1), l2 = ci.linear_form(c2);
    auto o1 = sq.linear(c1), o2 = sq.linear(c2);
    AlgebraElement prod = ci.multiply(ci.power(l1, 2), l2);
    auto oprod = sq.multiply(sq.multiply(o1, o1), o2);
    std::erase_if(oprod, [](const auto& kv) { return kv.second == 0; });
    CHECK(to_squarefree(ci, prod) == oprod);
    for (unsigned i = 0; i + 1 <= 5; ++i) {
      CHECK(rank(ci.mul_map(l1, i)) == oracle::rank(sq.mul_map(o1, 1, i)));
    }
    AlgebraElement l1sq = ci.power(l1, 2);
    CHECK(rank(ci.mul_map(l1sq, 1)) == oracle::rank(sq.mul_map(sq.multiply(o1, o1), 2, 1)));
  }
}

TEST_CASE("mul_map examples") {
  GradedAlgebra ci = testing::monomial_ci();
  CHECK(rank(ci.mul_map(ci.variable(0), 1)) == 4);
  CHECK(ci.mul_map(ci.zero(1), 2).is_zero());
  CHECK_THROWS_AS(ci.mul_map(ci.variable(0), 5), DomainError);
  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5));
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> c;
    for (int i = 0; i < 5; ++i) c.push_back(testing::uni(rng, -10, 10));
    CHECK(rank(p.mul_map(p.linear_form(c), 1)) <= 4);
  }
}

TEST_CASE("mul_map is bilinear") {
  GradedAlgebra ci = GradedAlgebra::from_regular_sequence(
      testing::polys({"x0^2 + x1*x2", "x1^2 - x0*x3", "x2^2 + 3*x0*x1", "x3^2 + x1*x2"}, 4));
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto rnd = [&](unsigned deg) {
      Vector v(ci.dim(deg));
      for (auto& x : v) x = testing::uni(rng, -5, 5);
      return ci.element(deg, v);
    };
    AlgebraElement a = rnd(1), b = rnd(1);
    const Scalar s = testing::uni(rng, -4, 4), t = testing::uni(rng, -4, 4);
    for (unsigned i = 0; i < ci.socle_degree(); ++i) {
      Matrix lhs = ci.mul_map(ci.add(ci.scale(a, s), ci.scale(b, t)), i);
      CHECK(lhs == s * ci.mul_map(a, i) + t * ci.mul_map(b, i));
    }
    AlgebraElement c = rnd(2);
    CHECK(ci.multiply(ci.multiply(a, b), c) == ci.multiply(a, ci.multiply(b, c)));
    CHECK(ci.multiply(a, c) == ci.multiply(c, a));
  }
}

TEST_CASE("pairing examples") {
  GradedAlgebra ci = testing::monomial_ci();
  PairingCheck p1 = ci.pairing_check(1);
  CHECK(p1.perfect);
  REQUIRE(p1.matrix.rows() == 5);
  REQUIRE(p1.matrix.cols() == 5);
  for (std::size_t r = 0; r < 5; ++r) {
    int nonzero = 0;
    for (std::size_t c = 0; c < 5; ++c) {
      if (p1.matrix(r, c) != 0) {
        ++nonzero;
        CHECK(p1.matrix(r, c) == 1);
      }
    }
    CHECK(nonzero == 1);
  }
  PairingCheck p0 = ci.pairing_check(0);
  CHECK(p0.matrix.rows() == 1);
  CHECK(p0.matrix(0, 0) != 0);
  CHECK_THROWS_AS(ci.pairing_check(6), DomainError);
  structural_gates(ci);
  structural_gates(GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5)));
}

TEST_CASE("quotient_by_ann examples") {
  GradedAlgebra ci = testing::monomial_ci();
  GradedAlgebra q = ci.quotient_by_ann(ci.variable(0));
  CHECK(q.socle_degree() == 4);
  CHECK(q.hilbert() == HV{1, 4, 6, 4, 1});
  structural_gates(q);
  GradedAlgebra q2 = ci.quotient_by_ann(ci.reduce(poly("x0*x1", 5)));
  CHECK(q2.hilbert() == HV{1, 3, 3, 1});
  AlgebraElement sigma = ci.reduce(poly("x0*x1*x2*x3*x4", 5));
  GradedAlgebra k = ci.quotient_by_ann(sigma);
  CHECK(k.socle_degree() == 0);
  CHECK(k.hilbert() == HV{1});
  CHECK_THROWS_AS(ci.quotient_by_ann(ci.zero(1)), DomainError);

  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5));
  Rng rng(13);
  std::vector<Scalar> c;
  for (int i = 0; i < 5; ++i) c.push_back(testing::uni(rng, -10, 10));
  AlgebraElement x = p.linear_form(c);
  GradedAlgebra px = p.quotient_by_ann(x);
  CHECK(px.socle_degree() == 2);
  CHECK(px.is_hilbert_symmetric());
  for (unsigned i = 0; i <= 2; ++i) CHECK(px.dim(i) == p.dim(i) - kernel_dim(p, x, i));
}

TEST_CASE("over_field keeps the Hilbert function") {
  GradedAlgebra ci = testing::monomial_ci();
  GradedAlgebra f = ci.over_field(Field::prime(101));
  CHECK(f.field().characteristic() == 101);
  CHECK(f.hilbert() == ci.hilbert());
  CHECK_THROWS_AS(ci.quotient_by_ann(ci.variable(0)).over_field(Field::prime(101)), DomainError);
}

TEST_CASE("algebra json") {
  GradedAlgebra a = GradedAlgebra::from_inverse_system(poly("x0*x1", 2));
  auto j = a.to_json();
  CHECK(j["hilbert"] == nlohmann::json({1, 2, 1}));
  CHECK(j.dump() == a.to_json().dump());
}
