#include "helpers.hpp"

#include "gorlef/apolarity.hpp"
#include "gorlef/corpus.hpp"
#include "gorlef/gnlab.hpp"
#include "gorlef/error.hpp"
#include "gorlef/lefschetz.hpp"

#include <doctest.h>

using namespace gorlef;
using testing::poly;

TEST_CASE("monomial CI probes") {
  GradedAlgebra ci = testing::monomial_ci();
  std::vector<Scalar> ones(5, 1);
  AlgebraElement l = ci.linear_form(ones);
  CHECK(rank(ci.mul_map(ci.power(l, 3), 1)) == 5);
  CHECK(rank(ci.mul_map(ci.power(l, 1), 2)) == 10);

  oracle::Squarefree sq{5};
  auto ol = sq.linear(std::vector<oracle::Q>(5, 1));
  auto l3 = sq.multiply(ol, sq.multiply(ol, ol));
  CHECK(oracle::rank(sq.mul_map(l3, 3, 1)) == 5);

  ProbeReport r = lefschetz_probe(ci, LefschetzKind::strong, 1);
  CHECK(r.holds());
  CHECK(r.certified);
  CHECK(r.target_rank == 5);
  REQUIRE(r.witness.has_value());
  CHECK(rank(ci.mul_map(ci.power(*r.witness, 3), 1)) == 5);
  CHECK(lefschetz_probe(ci, LefschetzKind::strong, 2).max_rank == 10);
  CHECK(lefschetz_probe(ci, LefschetzKind::weak, 1).holds());
}

TEST_CASE("Perazzo SLP_1 fails with max rank 4") {
  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly(testing::kPerazzo, 5));
  CHECK(lefschetz_exponent(p, LefschetzKind::strong, 1) == 1);
  ProbeReport r = lefschetz_probe(p, LefschetzKind::strong, 1, 16, 7);
  CHECK_FALSE(r.holds());
  CHECK(r.max_rank == 4);
  CHECK(r.target_rank == 5);
  CHECK(r.certified);
  auto det = symbolic_lefschetz_determinant(p, LefschetzKind::strong, 1);
  REQUIRE(det.has_value());
  CHECK(det->is_zero());
  CHECK_FALSE(lefschetz_probe(p, LefschetzKind::weak, 1).holds());
}

TEST_CASE("probe range checks and witnesses") {
  GradedAlgebra ci = testing::monomial_ci();
  CHECK_THROWS_AS(lefschetz_probe(ci, LefschetzKind::strong, 3), DomainError);
  CHECK_THROWS_AS(lefschetz_probe(ci, LefschetzKind::weak, 5), DomainError);
  ProbeReport r = lefschetz_probe(ci, LefschetzKind::weak, 2, 4, 9);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(r.witness->is_zero());
  for (const auto& c : r.witness->coords) {
    CHECK(c >= -10);
    CHECK(c <= 10);
  }
}

TEST_CASE("probes are deterministic in the seed") {
  GradedAlgebra p = GradedAlgebra::from_inverse_system(poly("x0^3 + x0*x1*x2 + x2^3 - x1^2*x0", 3));
  for (unsigned k = 0; k <= 1; ++k) {
    auto a = lefschetz_probe(p, LefschetzKind::strong, k, 8, 123).to_json().dump();
    auto b = lefschetz_probe(p, LefschetzKind::strong, k, 8, 123).to_json().dump();
    CHECK(a == b);
  }
}

TEST_CASE("rank of a composition is bounded by its factors") {
  GradedAlgebra ci = GradedAlgebra::from_regular_sequence(
      testing::polys({"x0^2 + x1*x2", "x1^2 - x0*x3", "x2^2 + 3*x0*x1", "x3^2 + x1*x2"}, 4));
  Rng rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Scalar> c;
    for (int i = 0; i < 4; ++i) c.push_back(testing::uni(rng, -10, 10));
    AlgebraElement l = ci.linear_form(c);
    for (unsigned m = 1; m + 1 <= ci.socle_degree(); ++m) {
      Matrix step = ci.mul_map(l, m);
      Matrix first = ci.mul_map(ci.power(l, m), 0);
      Matrix both = ci.mul_map(ci.power(l, m + 1), 0);
      CHECK(both == step * first);
      CHECK(rank(both) <= std::min(rank(step), rank(first)));
    }
    Matrix a = ci.mul_map(l, 1), b = ci.mul_map(l, 2);
    CHECK(rank(b * a) <= std::min(rank(a), rank(b)));
    CHECK(b * a == ci.mul_map(ci.power(l, 2), 1));
  }
}

TEST_CASE("symbolic power map agrees with evaluation") {
  GradedAlgebra ci = GradedAlgebra::from_regular_sequence(testing::polys({"x0^2", "x1^2 + x0*x2", "x2^2"}, 3));
  PolynomialMatrix m = symbolic_power_map(ci, 1, 1);
  Rng rng(4);
  for (int t = 0; t < 4; ++t) {
    std::vector<Scalar> c;
    for (int i = 0; i < 3; ++i) c.push_back(testing::uni(rng, -5, 5));
    CHECK(m.evaluate(c, ci.field()) == ci.mul_map(ci.linear_form(c), 1));
  }
}

TEST_CASE("hessian examples") {
  CHECK(hessian(poly("x0*x1", 2)).det == poly("-1", 2));
  HessianReport p = hessian(poly(testing::kPerazzo, 5));
  CHECK(p.vanishes);
  CHECK(p.det.is_zero());
  HessianReport f = hessian(poly(testing::kFermat4, 4));
  CHECK_FALSE(f.vanishes);
  CHECK(f.det == poly("1296*x0*x1*x2*x3", 4));
  CHECK_THROWS_AS(hessian(poly("x0*x6", 7)), DomainError);
}

TEST_CASE("hessian is symmetric and matches the derivative oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + trial % 3;
    oracle::Poly g = oracle::random_form(n, 3 + trial % 2, rng, 5);
    HessianReport h = hessian(testing::from_oracle(g, n));
    CHECK(h.matrix.is_symmetric());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(testing::to_oracle(h.matrix(i, j)) == oracle::diff(oracle::diff(g, i), j));
  }
}

TEST_CASE("hessian identity examples") {
  Polynomial xy = poly("x0*x1", 2);
  GradedAlgebra a = GradedAlgebra::from_inverse_system(xy);
  std::vector<Scalar> ones2{1, 1};
  HessianIdentity id = hessian_identity_at(a, hessian(xy), ones2);
  CHECK(id.equal);
  Matrix expect(2, 2);
  expect(0, 1) = 1;
  expect(1, 0) = 1;
  CHECK(id.algebra_side == expect);
  CHECK(hessian_slp_crosscheck(xy, ones2));

  Polynomial fermat = poly(testing::kFermat4, 4);
  GradedAlgebra fa = GradedAlgebra::from_inverse_system(fermat);
  std::vector<Scalar> ones4(4, 1);
  HessianIdentity fid = hessian_identity_at(fa, hessian(fermat), ones4);
  CHECK(fid.equal);
  CHECK(fid.algebra_side == Scalar(6) * Matrix::identity(4));
  CHECK(det_ff(fid.algebra_side) != 0);

  Polynomial per = poly(testing::kPerazzo, 5);
  std::vector<Scalar> l{3, -1, 2, 5, 7};
  HessianIdentity pid = hessian_identity_at(GradedAlgebra::from_inverse_system(per), hessian(per), l);
  CHECK(pid.equal);
  CHECK(det_ff(pid.algebra_side) == 0);
  CHECK(hessian_slp_crosscheck(per, l, 8, 5));
}

TEST_CASE("hessian identity on random forms") {
  Rng rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + trial % 3;
    Polynomial g = gorlef::random_form(n, 3 + trial % 3, rng, 10);
    if (g.is_zero()) continue;
    std::vector<Scalar> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(testing::uni(rng, -10, 10));
    CHECK(hessian_slp_crosscheck(g, l, 8, trial));
  }
}

TEST_CASE("hessian vanishing is equivalent to SLP_1 failure") {
  const auto corpus = load_corpus();
  std::size_t checked = 0;
  for (const auto& entry : corpus) {
    if (entry.input.kind != AlgebraInput::Kind::form) continue;
    GradedAlgebra a = entry.build();
    const Polynomial& g = *a.form();
    if (g.n_vars() > kMaxHessianVars || is_cone(g) || a.socle_degree() < 2) continue;
    CAPTURE(entry.name);
    const bool vanishes = hessian(g).vanishes;
    ProbeReport r = lefschetz_probe(a, LefschetzKind::strong, 1, 16);
    auto det = symbolic_lefschetz_determinant(a, LefschetzKind::strong, 1);
    REQUIRE(det.has_value());
    CHECK(vanishes == !r.holds());
    CHECK(vanishes == det->is_zero());
    ++checked;
  }
  CHECK(checked >= 8);
}

TEST_CASE("SLP_1 holds on every low-codimension corpus form") {
  const auto corpus = load_corpus();
  std::size_t checked = 0;
  for (const auto& entry : corpus) {
    if (entry.input.kind != AlgebraInput::Kind::form) continue;
    GradedAlgebra a = entry.build();
    if (a.codimension() > 4 || a.socle_degree() < 2 || is_cone(*a.form())) continue;
    CAPTURE(entry.name);
    ProbeReport r = lefschetz_probe(a, LefschetzKind::strong, 1, 8);
    CHECK(r.holds());
    CHECK(r.certified);
    ++checked;
  }
  CHECK(checked >= 7);
}
