#ifndef GORLEF_ALGEBRA_HPP
#define GORLEF_ALGEBRA_HPP

#include "gorlef/matrix.hpp"
#include "gorlef/polynomial.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gorlef {

// Homogeneous element of R^degree in the coordinates of the chosen basis of that piece.
// Elements above the socle degree carry an empty coordinate vector (they are zero).
struct AlgebraElement {
  unsigned degree = 0;
  Vector coords;

  bool is_zero() const { return is_zero_vector(coords); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
};

enum class PresentationKind { inverse_system, regular_sequence, quotient };

std::string to_string(PresentationKind kind);

struct PairingCheck {
  bool perfect = false;
  Matrix matrix;
};

// A graded quotient R = P / I of a polynomial ring P, stored degree by degree up to
// the socle degree N. In each degree the ideal piece is kept in reduced row echelon
// form over the monomials of P^i; the non-pivot monomials form the basis of R^i and
// every monomial has a precomputed normal form in that basis.
//
// For an inverse system P is the operator ring in y_0..y_n and I = Ann(G); for a
// regular sequence P is the ring in x_0..x_n and I = (f_0, ..., f_n).
class GradedAlgebra {
 public:
  static GradedAlgebra from_inverse_system(const Polynomial& form);
  static GradedAlgebra from_regular_sequence(const std::vector<Polynomial>& generators);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const Field& field() const noexcept { return field_; }
  unsigned socle_degree() const noexcept { return socle_degree_; }
  PresentationKind presentation() const noexcept { return kind_; }
  // Variable letter used when printing elements of the ambient ring.
  char variable_letter() const noexcept { return kind_ == PresentationKind::regular_sequence ? 'x' : 'y'; }

  std::vector<std::size_t> hilbert() const;
  std::size_t dim(unsigned degree) const;
  std::size_t codimension() const { return dim(1); }

  const std::optional<Polynomial>& form() const noexcept { return form_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  // Degrees of the regular-sequence generators (empty for other presentations).
  std::vector<unsigned> generator_degrees() const;

  // Standard monomials spanning R^degree.
  const std::vector<Monomial>& basis(unsigned degree) const;
  std::string basis_label(unsigned degree, std::size_t index) const;

  AlgebraElement zero(unsigned degree) const;
  AlgebraElement one() const;
  AlgebraElement element(unsigned degree, Vector coords) const;
  // Class of the variable x_i (or y_i) in R^1.
  AlgebraElement variable(std::size_t index) const;
  // Element of R^1 with the given coordinates in the variables, i.e. sum c_i x_i.
  AlgebraElement linear_form(std::span<const Scalar> coeffs) const;

  AlgebraElement reduce(const Polynomial& p) const;
  AlgebraElement reduce(const Polynomial& p, unsigned degree) const;
  AlgebraElement reduce_monomial(const Monomial& m) const;
  Polynomial lift(const AlgebraElement& a) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(const AlgebraElement& a, const Scalar& s) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement power(const AlgebraElement& x, unsigned k) const;

  // Matrix of multiplication by alpha from R^i to R^(i + deg alpha).
  Matrix mul_map(const AlgebraElement& alpha, unsigned i) const;
  PairingCheck pairing_check(unsigned s) const;
  // R^1 * R^i spans R^(i+1) for all i < N.
  bool is_standard() const;
  bool is_hilbert_symmetric() const;

  // R / (0 : alpha). Its socle degree is N - deg(alpha).
  GradedAlgebra quotient_by_ann(const AlgebraElement& alpha) const;

  // Same algebra rebuilt from its presentation over another field.
  GradedAlgebra over_field(Field field) const;

  nlohmann::json to_json() const;

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<Vector> ideal_rows;  // RREF rows over `monomials`
    std::vector<std::size_t> ideal_pivots;
    std::vector<Monomial> basis;
    std::vector<Vector> normal_forms;  // per monomial, coordinates in `basis`
  };

  GradedAlgebra(std::size_t n_vars, Field field) : n_vars_(n_vars), field_(field) {}

  static Piece make_piece(std::size_t n_vars, unsigned degree, const std::vector<Vector>& spanning,
                          Field field);
  void check_element(const AlgebraElement& a) const;
  const Piece& piece(unsigned degree) const;
  Vector to_monomial_coords(const Polynomial& p, const Piece& pc) const;

  std::size_t n_vars_ = 0;
  Field field_;
  unsigned socle_degree_ = 0;
  PresentationKind kind_ = PresentationKind::inverse_system;
  std::optional<Polynomial> form_;
  std::vector<Polynomial> generators_;
  unsigned quotient_depth_ = 0;
  std::vector<Piece> pieces_;  // degrees 0..N
};

GradedAlgebra from_inverse_system(const Polynomial& form);
GradedAlgebra from_regular_sequence(const std::vector<Polynomial>& generators);
AlgebraElement reduce(const GradedAlgebra& a, const Polynomial& p);
Matrix mul_map(const GradedAlgebra& a, const AlgebraElement& alpha, unsigned i);
PairingCheck pairing_check(const GradedAlgebra& a, unsigned s);
GradedAlgebra quotient_by_ann(const GradedAlgebra& a, const AlgebraElement& alpha);
AlgebraElement power(const GradedAlgebra& a, const AlgebraElement& x, unsigned k);

// Coefficients of prod_i (1 + t + ... + t^(e_i - 1)), the Hilbert function of a
// complete intersection with generator degrees e_i.
std::vector<std::size_t> complete_intersection_hilbert(const std::vector<unsigned>& degrees);

}  // namespace gorlef

#endif  // GORLEF_ALGEBRA_HPP
