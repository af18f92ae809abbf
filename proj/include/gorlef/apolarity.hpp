#ifndef GORLEF_APOLARITY_HPP
#define GORLEF_APOLARITY_HPP

#include "gorlef/matrix.hpp"
#include "gorlef/polynomial.hpp"

#include <vector>

namespace gorlef {

// D applied to G as a constant-coefficient differential operator (y_i = d/dx_i), with
// no divided-power rescaling. G must be homogeneous (or zero).
Polynomial contract(const Polynomial& op, const Polynomial& form);

// Matrix of the contraction Q^i -> S^(d-i) against a fixed form of degree d.
// Columns follow monomial_basis(n, i), rows follow monomial_basis(n, d - i).
struct Catalecticant {
  Polynomial form;
  unsigned source_degree = 0;
  Matrix map;
};

Catalecticant catalecticant(const Polynomial& form, unsigned i);

// Basis of the degree-i annihilator piece Ann(G)^i as operator polynomials.
std::vector<Polynomial> annihilator_piece(const Polynomial& form, unsigned i);

// True iff some nonzero linear operator kills the form (partials are dependent).
bool is_cone(const Polynomial& form);

}  // namespace gorlef

#endif  // GORLEF_APOLARITY_HPP
