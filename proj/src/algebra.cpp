#include "gorlef/algebra.hpp"

#include "gorlef/apolarity.hpp"
#include "gorlef/error.hpp"

#include <algorithm>

namespace gorlef {

namespace {

// Large prime used to certify full rank cheaply before falling back to rational rank.
constexpr std::uint64_t kCertificatePrime = 4611686018427387847ull;  // 2^62 - 57

}  // namespace

std::string to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::inverse_system:
      return "inverse_system";
    case PresentationKind::regular_sequence:
      return "regular_sequence";
    case PresentationKind::quotient:
      return "quotient";
  }
  return "unknown";
}

std::vector<std::size_t> complete_intersection_hilbert(const std::vector<unsigned>& degrees) {
  std::vector<std::size_t> coeffs{1};
  for (unsigned e : degrees) {
    if (e == 0) throw DomainError("generator of degree 0");
    std::vector<std::size_t> next(coeffs.size() + e - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (unsigned k = 0; k < e; ++k) next[i + k] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

GradedAlgebra::Piece GradedAlgebra::make_piece(std::size_t n_vars, unsigned degree,
                                               const std::vector<Vector>& spanning, Field field) {
  Piece pc;
  pc.monomials = monomial_basis(n_vars, degree);
  for (std::size_t i = 0; i < pc.monomials.size(); ++i) pc.index.emplace(pc.monomials[i], i);
  const std::size_t dim = pc.monomials.size();

  if (!spanning.empty()) {
    Echelon e = row_echelon(Matrix::from_rows(spanning, dim, field));
    pc.ideal_rows = std::move(e.rows);
    pc.ideal_pivots = std::move(e.pivot_columns);
  }
  std::vector<long> pivot_row(dim, -1);
  for (std::size_t r = 0; r < pc.ideal_pivots.size(); ++r) {
    pivot_row[pc.ideal_pivots[r]] = static_cast<long>(r);
  }
  std::vector<std::size_t> basis_cols;
  for (std::size_t c = 0; c < dim; ++c) {
    if (pivot_row[c] < 0) basis_cols.push_back(c);
  }
  for (auto c : basis_cols) pc.basis.push_back(pc.monomials[c]);

  const std::size_t h = basis_cols.size();
  pc.normal_forms.assign(dim, Vector(h));
  for (std::size_t k = 0; k < h; ++k) pc.normal_forms[basis_cols[k]][k] = 1;
  for (std::size_t c = 0; c < dim; ++c) {
    if (pivot_row[c] < 0) continue;
    const Vector& row = pc.ideal_rows[static_cast<std::size_t>(pivot_row[c])];
    for (std::size_t k = 0; k < h; ++k) {
      const Scalar& v = row[basis_cols[k]];
      if (v != 0) pc.normal_forms[c][k] = field.normalize(-v);
    }
  }
  return pc;
}

GradedAlgebra GradedAlgebra::from_inverse_system(const Polynomial& form) {
  if (form.is_zero()) throw DomainError("inverse system of the zero form");
  auto d = form.homogeneous_degree();
  if (!d) throw DomainError("inverse system requires a homogeneous form");
  if (*d < 1) throw DomainError("inverse system requires degree at least 1");

  GradedAlgebra a(form.n_vars(), form.field());
  a.kind_ = PresentationKind::inverse_system;
  a.form_ = form;
  a.socle_degree_ = *d;
  for (unsigned i = 0; i <= *d; ++i) {
    Catalecticant cat = catalecticant(form, i);
    KernelResult kr = rank_kernel(cat.map);
    a.pieces_.push_back(make_piece(form.n_vars(), i, kr.kernel_basis, form.field()));
  }
  return a;
}

GradedAlgebra GradedAlgebra::from_regular_sequence(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw DomainError("empty generator list");
  const std::size_t n = generators.front().n_vars();
  const Field field = generators.front().field();
  if (generators.size() != n) {
    throw DomainError("need as many generators as variables (" + std::to_string(n) + "), got " +
                      std::to_string(generators.size()));
  }
  std::vector<unsigned> degrees;
  for (const auto& g : generators) {
    if (g.n_vars() != n || g.field() != field) throw DomainError("generators in different rings");
    auto e = g.homogeneous_degree();
    if (!e) throw DomainError("generators must be nonzero homogeneous forms");
    if (*e < 1) throw DomainError("generators must have degree at least 1");
    degrees.push_back(*e);
  }
  const std::vector<std::size_t> expected = complete_intersection_hilbert(degrees);
  const unsigned top = static_cast<unsigned>(expected.size() - 1);

  GradedAlgebra a(n, field);
  a.kind_ = PresentationKind::regular_sequence;
  a.generators_ = generators;
  a.socle_degree_ = top;

  auto spanning_rows = [&](unsigned i) {
    std::vector<Vector> rows;
    auto monos = monomial_basis(n, i);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (degrees[j] > i) continue;
      for (const auto& m : monomial_basis(n, i - degrees[j])) {
        Vector row(monos.size());
        for (const auto& [gm, gc] : generators[j].terms()) row[index.at(gm * m)] = gc;
        rows.push_back(std::move(row));
      }
    }
    return std::make_pair(std::move(rows), monos.size());
  };

  for (unsigned i = 0; i <= top; ++i) {
    auto [rows, dim] = spanning_rows(i);
    Piece pc = make_piece(n, i, rows, field);
    const std::size_t h = dim - pc.ideal_pivots.size();
    if (h != expected[i]) throw NotRegularSequence(static_cast<int>(i), expected[i], h);
    a.pieces_.push_back(std::move(pc));
  }

  // Artinian check: the ideal must fill the next degree.
  auto [rows, dim] = spanning_rows(top + 1);
  Matrix m = Matrix::from_rows(rows, dim, field);
  std::size_t r = 0;
  if (field.is_rational()) {
    auto modular = rank_mod_prime(m, kCertificatePrime);
    r = (modular && *modular == dim) ? dim : rank(m);
  } else {
    r = rank(m);
  }
  if (r != dim) throw NotRegularSequence(static_cast<int>(top + 1), 0, dim - r);
  return a;
}

GradedAlgebra GradedAlgebra::over_field(Field field) const {
  switch (kind_) {
    case PresentationKind::inverse_system:
      return from_inverse_system(form_->over_field(field));
    case PresentationKind::regular_sequence: {
      std::vector<Polynomial> gens;
      for (const auto& g : generators_) gens.push_back(g.over_field(field));
      return from_regular_sequence(gens);
    }
    case PresentationKind::quotient:
      break;
  }
  throw DomainError("field change is not supported for quotient algebras");
}

std::vector<unsigned> GradedAlgebra::generator_degrees() const {
  std::vector<unsigned> out;
  for (const auto& g : generators_) out.push_back(*g.homogeneous_degree());
  return out;
}

std::vector<std::size_t> GradedAlgebra::hilbert() const {
  std::vector<std::size_t> h;
  for (const auto& pc : pieces_) h.push_back(pc.basis.size());
  return h;
}

std::size_t GradedAlgebra::dim(unsigned degree) const {
  return degree < pieces_.size() ? pieces_[degree].basis.size() : 0;
}

const GradedAlgebra::Piece& GradedAlgebra::piece(unsigned degree) const {
  if (degree >= pieces_.size()) {
    throw DomainError("degree " + std::to_string(degree) + " exceeds socle degree " +
                      std::to_string(socle_degree_));
  }
  return pieces_[degree];
}

const std::vector<Monomial>& GradedAlgebra::basis(unsigned degree) const {
  return piece(degree).basis;
}

std::string GradedAlgebra::basis_label(unsigned degree, std::size_t index) const {
  return basis(degree).at(index).to_string(variable_letter());
}

void GradedAlgebra::check_element(const AlgebraElement& a) const {
  if (a.coords.size() != dim(a.degree)) {
    throw DomainError("element of degree " + std::to_string(a.degree) + " has " +
                      std::to_string(a.coords.size()) + " coordinates, expected " +
                      std::to_string(dim(a.degree)));
  }
}

AlgebraElement GradedAlgebra::zero(unsigned degree) const {
  return AlgebraElement{degree, Vector(dim(degree))};
}

AlgebraElement GradedAlgebra::one() const { return reduce_monomial(Monomial(n_vars_)); }

AlgebraElement GradedAlgebra::element(unsigned degree, Vector coords) const {
  AlgebraElement e{degree, std::move(coords)};
  check_element(e);
  for (auto& c : e.coords) c = field_.normalize(c);
  return e;
}

AlgebraElement GradedAlgebra::variable(std::size_t index) const {
  if (index >= n_vars_) throw DomainError("variable index out of range");
  return reduce_monomial(Monomial::variable(n_vars_, index));
}

AlgebraElement GradedAlgebra::linear_form(std::span<const Scalar> coeffs) const {
  if (coeffs.size() != n_vars_) throw DomainError("linear form needs one coefficient per variable");
  AlgebraElement out = zero(1);
  for (std::size_t i = 0; i < n_vars_; ++i) {
    if (coeffs[i] != 0) out = add(out, scale(variable(i), coeffs[i]));
  }
  return out;
}

Vector GradedAlgebra::to_monomial_coords(const Polynomial& p, const Piece& pc) const {
  Vector v(pc.monomials.size());
  for (const auto& [m, c] : p.terms()) v[pc.index.at(m)] = c;
  return v;
}

AlgebraElement GradedAlgebra::reduce(const Polynomial& p) const {
  if (p.is_zero()) throw DomainError("degree of the zero polynomial is undefined; pass it explicitly");
  auto d = p.homogeneous_degree();
  if (!d) throw DomainError("reduction requires a homogeneous polynomial");
  return reduce(p, *d);
}

AlgebraElement GradedAlgebra::reduce(const Polynomial& p, unsigned degree) const {
  if (p.n_vars() != n_vars_ || p.field() != field_) throw DomainError("polynomial in a different ring");
  if (degree > socle_degree_) {
    throw DomainError("degree " + std::to_string(degree) + " exceeds socle degree " +
                      std::to_string(socle_degree_));
  }
  const Piece& pc = piece(degree);
  Vector out(pc.basis.size());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != degree) throw DomainError("polynomial is not homogeneous of the given degree");
    const Vector& nf = pc.normal_forms[pc.index.at(m)];
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (nf[k] != 0) out[k] += c * nf[k];
    }
  }
  for (auto& x : out) x = field_.normalize(x);
  return AlgebraElement{degree, std::move(out)};
}

AlgebraElement GradedAlgebra::reduce_monomial(const Monomial& m) const {
  const unsigned degree = m.degree();
  if (degree > socle_degree_) return AlgebraElement{degree, {}};
  const Piece& pc = piece(degree);
  return AlgebraElement{degree, pc.normal_forms[pc.index.at(m)]};
}

Polynomial GradedAlgebra::lift(const AlgebraElement& a) const {
  check_element(a);
  Polynomial p(n_vars_, field_);
  if (a.coords.empty()) return p;
  const auto& b = basis(a.degree);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (a.coords[k] != 0) p.add_term(b[k], a.coords[k]);
  }
  return p;
}

AlgebraElement GradedAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  if (a.degree != b.degree) throw DomainError("adding elements of different degrees");
  check_element(a);
  check_element(b);
  AlgebraElement out{a.degree, Vector(a.coords.size())};
  for (std::size_t k = 0; k < a.coords.size(); ++k) {
    out.coords[k] = field_.normalize(a.coords[k] + b.coords[k]);
  }
  return out;
}

AlgebraElement GradedAlgebra::scale(const AlgebraElement& a, const Scalar& s) const {
  check_element(a);
  AlgebraElement out = a;
  for (auto& c : out.coords) c = field_.normalize(c * s);
  return out;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  check_element(a);
  check_element(b);
  const unsigned degree = a.degree + b.degree;
  if (degree > socle_degree_) return AlgebraElement{degree, {}};
  const Piece& target = piece(degree);
  const auto& ba = basis(a.degree);
  const auto& bb = basis(b.degree);
  Vector out(target.basis.size());
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coords[j] == 0) continue;
      const Scalar c = a.coords[i] * b.coords[j];
      const Vector& nf = target.normal_forms[target.index.at(ba[i] * bb[j])];
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (nf[k] != 0) out[k] += c * nf[k];
      }
    }
  }
  for (auto& x : out) x = field_.normalize(x);
  return AlgebraElement{degree, std::move(out)};
}

AlgebraElement GradedAlgebra::power(const AlgebraElement& x, unsigned k) const {
  check_element(x);
  if (x.degree != 1) throw DomainError("power expects an element of degree 1");
  if (k > socle_degree_) {
    throw DomainError("exponent " + std::to_string(k) + " exceeds socle degree " +
                      std::to_string(socle_degree_));
  }
  AlgebraElement result = one();
  for (unsigned i = 0; i < k; ++i) result = multiply(result, x);
  return result;
}

Matrix GradedAlgebra::mul_map(const AlgebraElement& alpha, unsigned i) const {
  check_element(alpha);
  const unsigned target = i + alpha.degree;
  if (target > socle_degree_) {
    throw DomainError("multiplication map R^" + std::to_string(i) + " -> R^" +
                      std::to_string(target) + " leaves the algebra (socle degree " +
                      std::to_string(socle_degree_) + ")");
  }
  const auto& src = basis(i);
  Matrix m(dim(target), src.size(), field_);
  for (std::size_t c = 0; c < src.size(); ++c) {
    AlgebraElement image = multiply(alpha, reduce_monomial(src[c]));
    for (std::size_t r = 0; r < image.coords.size(); ++r) m(r, c) = image.coords[r];
  }
  m.set_row_labels(basis(target));
  m.set_col_labels(src);
  return m;
}

PairingCheck GradedAlgebra::pairing_check(unsigned s) const {
  if (s > socle_degree_) throw DomainError("pairing degree exceeds socle degree");
  const unsigned t = socle_degree_ - s;
  const auto& left = basis(s);
  const auto& right = basis(t);
  PairingCheck out;
  out.matrix = Matrix(left.size(), right.size(), field_);
  if (dim(socle_degree_) != 1) {
    out.perfect = false;
    return out;
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      out.matrix(i, j) = reduce_monomial(left[i] * right[j]).coords[0];
    }
  }
  out.perfect = left.size() == right.size() && rank(out.matrix) == left.size();
  return out;
}

bool GradedAlgebra::is_standard() const {
  for (unsigned i = 0; i < socle_degree_; ++i) {
    std::vector<Vector> images;
    for (std::size_t v = 0; v < n_vars_; ++v) {
      AlgebraElement x = variable(v);
      for (const auto& b : basis(i)) images.push_back(multiply(x, reduce_monomial(b)).coords);
    }
    if (images.empty()) return dim(i + 1) == 0;
    if (rank(Matrix::from_columns(images, dim(i + 1), field_)) != dim(i + 1)) return false;
  }
  return true;
}

bool GradedAlgebra::is_hilbert_symmetric() const {
  auto h = hilbert();
  return std::equal(h.begin(), h.end(), h.rbegin());
}

GradedAlgebra GradedAlgebra::quotient_by_ann(const AlgebraElement& alpha) const {
  check_element(alpha);
  if (alpha.is_zero()) throw DomainError("quotient by the annihilator of zero");
  GradedAlgebra q(n_vars_, field_);
  q.kind_ = PresentationKind::quotient;
  q.form_ = form_;
  q.generators_ = generators_;
  q.quotient_depth_ = quotient_depth_ + 1;

  std::vector<Piece> pieces;
  for (unsigned i = 0; i <= socle_degree_; ++i) {
    const Piece& pc = pieces_[i];
    std::vector<Vector> rows = pc.ideal_rows;
    std::vector<Vector> kernel;
    if (i + alpha.degree <= socle_degree_) {
      kernel = rank_kernel(mul_map(alpha, i)).kernel_basis;
    } else {
      for (std::size_t k = 0; k < pc.basis.size(); ++k) {
        Vector e(pc.basis.size());
        e[k] = 1;
        kernel.push_back(std::move(e));
      }
    }
    for (const auto& k : kernel) {
      Vector row(pc.monomials.size());
      for (std::size_t b = 0; b < pc.basis.size(); ++b) {
        if (k[b] != 0) row[pc.index.at(pc.basis[b])] = k[b];
      }
      rows.push_back(std::move(row));
    }
    pieces.push_back(make_piece(n_vars_, i, rows, field_));
  }
  unsigned top = 0;
  for (unsigned i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].basis.empty()) top = i;
  }
  pieces.resize(top + 1);
  q.pieces_ = std::move(pieces);
  q.socle_degree_ = top;
  return q;
}

nlohmann::json GradedAlgebra::to_json() const {
  nlohmann::json j;
  j["n_vars"] = n_vars_;
  j["field"] = field_.to_string();
  nlohmann::json pres;
  pres["kind"] = gorlef::to_string(kind_);
  if (form_) pres["form"] = form_->to_string('x');
  if (!generators_.empty()) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators_) gens.push_back(g.to_string('x'));
    pres["generators"] = gens;
  }
  if (kind_ == PresentationKind::quotient) pres["quotient_depth"] = quotient_depth_;
  j["presentation"] = pres;
  j["socle_degree"] = socle_degree_;
  j["hilbert"] = hilbert();
  nlohmann::json bases = nlohmann::json::array();
  for (const auto& pc : pieces_) {
    nlohmann::json piece_basis = nlohmann::json::array();
    for (const auto& m : pc.basis) piece_basis.push_back(m.exponents());
    bases.push_back(piece_basis);
  }
  j["bases"] = bases;
  return j;
}

GradedAlgebra from_inverse_system(const Polynomial& form) {
  return GradedAlgebra::from_inverse_system(form);
}

GradedAlgebra from_regular_sequence(const std::vector<Polynomial>& generators) {
  return GradedAlgebra::from_regular_sequence(generators);
}

AlgebraElement reduce(const GradedAlgebra& a, const Polynomial& p) { return a.reduce(p); }

Matrix mul_map(const GradedAlgebra& a, const AlgebraElement& alpha, unsigned i) {
  return a.mul_map(alpha, i);
}

PairingCheck pairing_check(const GradedAlgebra& a, unsigned s) { return a.pairing_check(s); }

GradedAlgebra quotient_by_ann(const GradedAlgebra& a, const AlgebraElement& alpha) {
  return a.quotient_by_ann(alpha);
}

AlgebraElement power(const GradedAlgebra& a, const AlgebraElement& x, unsigned k) {
  return a.power(x, k);
}

}  // namespace gorlef
