#include "gorlef/lefschetz.hpp"

#include "gorlef/apolarity.hpp"
#include "gorlef/error.hpp"
#include "gorlef/report.hpp"

namespace gorlef {

namespace {

// Skip symbolic expansion when L^e has too many monomials in the coordinates of L.
constexpr std::size_t kMaxSymbolicTerms = 5000;

AlgebraElement random_linear_element(const GradedAlgebra& a, Rng& rng) {
  const std::size_t h1 = a.dim(1);
  if (h1 == 0) throw DegenerateAlgebra("R^1 is zero");
  for (;;) {
    Vector coords(h1);
    for (auto& c : coords) c = a.field().from_int(rng.uniform(-kCoefficientBox, kCoefficientBox));
    if (!is_zero_vector(coords)) return a.element(1, std::move(coords));
  }
}

}  // namespace

std::string to_string(LefschetzKind kind) { return kind == LefschetzKind::weak ? "WLP" : "SLP"; }

unsigned lefschetz_exponent(const GradedAlgebra& a, LefschetzKind kind, unsigned k) {
  const unsigned n = a.socle_degree();
  if (kind == LefschetzKind::strong) {
    if (2 * k > n) {
      throw DomainError("SLP_" + std::to_string(k) + " needs k <= N/2 (N = " + std::to_string(n) + ")");
    }
    return n - 2 * k;
  }
  if (n == 0 || k > n - 1) {
    throw DomainError("WLP_" + std::to_string(k) + " needs k <= N-1 (N = " + std::to_string(n) + ")");
  }
  return 1;
}

std::size_t lefschetz_target_rank(const GradedAlgebra& a, LefschetzKind kind, unsigned k) {
  const unsigned e = lefschetz_exponent(a, kind, k);
  return std::min(a.dim(k), a.dim(k + e));
}

ProbeReport lefschetz_probe(const GradedAlgebra& a, LefschetzKind kind, unsigned k,
                            std::size_t trials, std::uint64_t seed, bool certify) {
  if (trials == 0) throw DomainError("probe needs at least one trial");
  const unsigned e = lefschetz_exponent(a, kind, k);
  ProbeReport report;
  report.kind = kind;
  report.k = k;
  report.target_rank = lefschetz_target_rank(a, kind, k);
  report.trials = trials;
  report.seed = seed;

  for (std::size_t t = 0; t < trials; ++t) {
    if (report.max_rank == report.target_rank && report.witness) break;
    Rng rng(seed, t);
    AlgebraElement l = random_linear_element(a, rng);
    const std::size_t r = rank(a.mul_map(a.power(l, e), k));
    if (r > report.max_rank || (!report.witness && r > 0)) {
      report.max_rank = r;
      report.witness = l;
    }
  }
  if (report.target_rank == 0) report.witness.reset();
  if (report.holds()) {
    report.certified = true;
  } else if (certify) {
    if (auto det = symbolic_lefschetz_determinant(a, kind, k)) {
      report.certified = det->is_zero();
    }
  }
  return report;
}

nlohmann::json ProbeReport::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind) + "_" + std::to_string(k);
  j["k"] = k;
  j["target_rank"] = target_rank;
  j["max_rank"] = max_rank;
  j["holds"] = holds();
  j["certified"] = certified;
  j["witness"] = witness ? gorlef::to_json(witness->coords) : nlohmann::json(nullptr);
  j["trials"] = trials;
  j["seed"] = seed;
  return j;
}

PolynomialMatrix symbolic_power_map(const GradedAlgebra& a, unsigned k, unsigned e) {
  const std::size_t h1 = a.dim(1);
  const Field& f = a.field();
  if (k + e > a.socle_degree()) throw DomainError("symbolic map leaves the algebra");
  // coords[c] is the c-th coordinate of L^j as a polynomial in l_0..l_{h1-1}.
  std::vector<Polynomial> coords{Polynomial::constant(h1, f, Scalar(1))};
  for (unsigned j = 0; j < e; ++j) {
    std::vector<Polynomial> next(a.dim(j + 1), Polynomial(h1, f));
    for (std::size_t i = 0; i < h1; ++i) {
      Vector unit(h1);
      unit[i] = 1;
      Matrix mi = a.mul_map(a.element(1, unit), j);
      Polynomial li = Polynomial::variable(h1, f, i);
      for (std::size_t r = 0; r < mi.rows(); ++r) {
        Polynomial acc(h1, f);
        for (std::size_t c = 0; c < mi.cols(); ++c) {
          if (mi(r, c) != 0 && !coords[c].is_zero()) acc += coords[c] * mi(r, c);
        }
        if (!acc.is_zero()) next[r] += li * acc;
      }
    }
    coords = std::move(next);
    std::size_t terms = 0;
    for (const auto& p : coords) terms += p.term_count();
    if (terms > kMaxSymbolicTerms * a.dim(j + 1)) throw DomainError("symbolic expansion too large");
  }
  const std::size_t rows = a.dim(k + e);
  const std::size_t cols = a.dim(k);
  PolynomialMatrix m(rows, cols, Polynomial(h1, f));
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (coords[c].is_zero()) continue;
    Vector unit(coords.size());
    unit[c] = 1;
    Matrix mc = a.mul_map(a.element(e, unit), k);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t s = 0; s < cols; ++s) {
        if (mc(r, s) != 0) m(r, s) += coords[c] * mc(r, s);
      }
    }
  }
  return m;
}

std::optional<Polynomial> symbolic_lefschetz_determinant(const GradedAlgebra& a, LefschetzKind kind,
                                                         unsigned k) {
  const unsigned e = lefschetz_exponent(a, kind, k);
  const std::size_t rows = a.dim(k + e);
  const std::size_t cols = a.dim(k);
  if (rows != cols || rows == 0 || rows > kMaxSymbolicDeterminant) return std::nullopt;
  if (binomial(a.dim(1) + e - 1, e) > kMaxSymbolicTerms) return std::nullopt;
  try {
    return det_cofactor(symbolic_power_map(a, k, e));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

HessianReport hessian(const Polynomial& form) {
  const std::size_t n = form.n_vars();
  if (n > kMaxHessianVars) {
    throw DomainError("symbolic hessian limited to " + std::to_string(kMaxHessianVars) +
                      " variables, got " + std::to_string(n));
  }
  if (!form.is_zero() && !form.homogeneous_degree()) throw DomainError("hessian of a non-homogeneous form");
  HessianReport out;
  out.matrix = PolynomialMatrix(n, n, Polynomial(n, form.field()));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial di = form.derivative(i);
    for (std::size_t j = i; j < n; ++j) {
      Polynomial dij = di.derivative(j);
      out.matrix(i, j) = dij;
      out.matrix(j, i) = dij;
    }
  }
  out.det = det_cofactor(out.matrix);
  out.vanishes = out.det.is_zero();
  return out;
}

Matrix lefschetz_form_matrix(const GradedAlgebra& a, std::span<const Scalar> l_point) {
  if (a.presentation() != PresentationKind::inverse_system || !a.form()) {
    throw DomainError("the Lefschetz bilinear form needs an inverse-system algebra");
  }
  const Polynomial& g = *a.form();
  const unsigned d = a.socle_degree();
  if (d < 2) throw DomainError("the Lefschetz bilinear form needs socle degree at least 2");
  const std::size_t n = a.n_vars();
  if (l_point.size() != n) throw DomainError("L needs one coordinate per variable");

  // Value of the socle basis monomial on G; every socle class is a multiple of it.
  const Monomial& socle_monomial = a.basis(d).at(0);
  const Polynomial socle_value = contract(Polynomial::monomial(socle_monomial, a.field()), g);
  const Scalar unit = socle_value.coefficient(Monomial(n));

  AlgebraElement lp = a.power(a.linear_form(l_point), d - 2);
  Matrix m(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    AlgebraElement li = a.multiply(lp, a.variable(i));
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement top = a.multiply(li, a.variable(j));
      m(i, j) = a.field().normalize(top.coords[0] * unit);
    }
  }
  return m;
}

HessianIdentity hessian_identity_at(const GradedAlgebra& a, const HessianReport& hess,
                                    std::span<const Scalar> l_point) {
  const unsigned d = a.socle_degree();
  if (d - 2 > kMaxFactorialDegree) throw DomainError("degree too large for the factorial factor");
  mpz_class factorial = 1;
  for (unsigned i = 2; i <= d - 2; ++i) factorial *= i;
  HessianIdentity out;
  out.algebra_side = lefschetz_form_matrix(a, l_point);
  out.hessian_side = Scalar(factorial) * hess.matrix.evaluate(l_point, a.field());
  out.equal = out.algebra_side == out.hessian_side;
  return out;
}

bool hessian_slp_crosscheck(const Polynomial& form, std::span<const Scalar> l_point,
                            std::size_t trials, std::uint64_t seed) {
  GradedAlgebra a = GradedAlgebra::from_inverse_system(form);
  HessianReport hess = hessian(form);
  if (!hessian_identity_at(a, hess, l_point).equal) return false;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    Vector point(form.n_vars());
    for (auto& c : point) c = form.field().from_int(rng.uniform(-kCoefficientBox, kCoefficientBox));
    if (!hessian_identity_at(a, hess, point).equal) return false;
  }
  return true;
}

}  // namespace gorlef
