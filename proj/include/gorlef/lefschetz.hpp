#ifndef GORLEF_LEFSCHETZ_HPP
#define GORLEF_LEFSCHETZ_HPP

#include "gorlef/algebra.hpp"
#include "gorlef/matrix.hpp"
#include "gorlef/random.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>

namespace gorlef {

enum class LefschetzKind { weak, strong };

std::string to_string(LefschetzKind kind);

inline constexpr std::size_t kDefaultTrials = 8;
inline constexpr long long kCoefficientBox = 10;
inline constexpr std::size_t kMaxHessianVars = 6;
inline constexpr unsigned kMaxFactorialDegree = 20;

struct ProbeReport {
  LefschetzKind kind = LefschetzKind::weak;
  unsigned k = 0;
  std::size_t target_rank = 0;
  std::size_t max_rank = 0;
  std::optional<AlgebraElement> witness;  // the L reaching max_rank, when max_rank > 0
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // True when the verdict is exact: a witness for a holding property, or a symbolic
  // determinant that vanishes identically for a failing one.
  bool certified = false;

  bool holds() const { return max_rank == target_rank; }
  nlohmann::json to_json() const;
};

// Exponent of L in the probed map: 1 for WLP_k, N - 2k for SLP_k.
unsigned lefschetz_exponent(const GradedAlgebra& a, LefschetzKind kind, unsigned k);
std::size_t lefschetz_target_rank(const GradedAlgebra& a, LefschetzKind kind, unsigned k);

// Samples L in R^1 with integer coordinates in [-10, 10] (zero excluded) and records the
// largest rank of L^e : R^k -> R^(k+e). One full-rank witness proves the property.
ProbeReport lefschetz_probe(const GradedAlgebra& a, LefschetzKind kind, unsigned k,
                            std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed,
                            bool certify = true);

// Matrix of L^e : R^k -> R^(k+e) with entries polynomial in the coordinates l_0..l_m of a
// generic L in R^1 (m + 1 = dim R^1).
PolynomialMatrix symbolic_power_map(const GradedAlgebra& a, unsigned k, unsigned e);

// Determinant of the symbolic probe matrix when it is square and small enough to
// expand; nullopt otherwise.
std::optional<Polynomial> symbolic_lefschetz_determinant(const GradedAlgebra& a, LefschetzKind kind,
                                                         unsigned k);

struct HessianReport {
  PolynomialMatrix matrix;
  Polynomial det;
  bool vanishes = false;
};

HessianReport hessian(const Polynomial& form);

// The bilinear form (eta, xi) -> (L^(d-2) eta xi)(G) on the variables, computed in the
// algebra Q / Ann(G).
Matrix lefschetz_form_matrix(const GradedAlgebra& a, std::span<const Scalar> l_point);

// Both sides of M_L = (d-2)! Hess(G)(L).
struct HessianIdentity {
  Matrix algebra_side;
  Matrix hessian_side;
  bool equal = false;
};

HessianIdentity hessian_identity_at(const GradedAlgebra& a, const HessianReport& hess,
                                    std::span<const Scalar> l_point);

// Checks the identity at l_point and at `trials` further random integer points.
bool hessian_slp_crosscheck(const Polynomial& form, std::span<const Scalar> l_point,
                            std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

}  // namespace gorlef

#endif  // GORLEF_LEFSCHETZ_HPP
