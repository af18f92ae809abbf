#include "gorlef/apolarity.hpp"

#include "gorlef/error.hpp"

#include <unordered_map>

namespace gorlef {

namespace {

unsigned require_form_degree(const Polynomial& form) {
  if (form.is_zero()) throw DomainError("form must be nonzero");
  auto d = form.homogeneous_degree();
  if (!d) throw DomainError("form must be homogeneous");
  return *d;
}

// Falling factorial b (b-1) ... (b-a+1).
mpz_class falling(std::uint32_t b, std::uint32_t a) {
  mpz_class r = 1;
  for (std::uint32_t k = 0; k < a; ++k) r *= b - k;
  return r;
}

}  // namespace

Polynomial contract(const Polynomial& op, const Polynomial& form) {
  if (op.n_vars() != form.n_vars()) throw DomainError("operator and form in different rings");
  if (op.field() != form.field()) throw DomainError("operator and form over different fields");
  if (!form.is_zero() && !form.homogeneous_degree()) {
    throw DomainError("contraction requires a homogeneous form");
  }
  const std::size_t n = form.n_vars();
  Polynomial out(n, form.field());
  for (const auto& [dm, dc] : op.terms()) {
    for (const auto& [fm, fc] : form.terms()) {
      if (!dm.divides(fm)) continue;
      Monomial rest(n);
      mpz_class factor = 1;
      for (std::size_t i = 0; i < n; ++i) {
        rest[i] = fm[i] - dm[i];
        factor *= falling(fm[i], dm[i]);
      }
      out.add_term(rest, dc * fc * Scalar(factor));
    }
  }
  return out;
}

Catalecticant catalecticant(const Polynomial& form, unsigned i) {
  const unsigned d = require_form_degree(form);
  if (i > d) {
    throw DomainError("catalecticant degree " + std::to_string(i) + " exceeds form degree " +
                      std::to_string(d));
  }
  const std::size_t n = form.n_vars();
  auto ops = monomial_basis(n, i);
  auto targets = monomial_basis(n, d - i);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < targets.size(); ++r) row_of.emplace(targets[r], r);

  Matrix m(targets.size(), ops.size(), form.field());
  for (std::size_t c = 0; c < ops.size(); ++c) {
    Polynomial image = contract(Polynomial::monomial(ops[c], form.field()), form);
    for (const auto& [mono, coeff] : image.terms()) m(row_of.at(mono), c) = coeff;
  }
  m.set_row_labels(std::move(targets));
  m.set_col_labels(ops);
  return Catalecticant{form, i, std::move(m)};
}

std::vector<Polynomial> annihilator_piece(const Polynomial& form, unsigned i) {
  Catalecticant cat = catalecticant(form, i);
  KernelResult kr = rank_kernel(cat.map);
  const auto& ops = cat.map.col_labels();
  std::vector<Polynomial> out;
  out.reserve(kr.kernel_basis.size());
  for (const auto& k : kr.kernel_basis) {
    Polynomial p(form.n_vars(), form.field());
    for (std::size_t c = 0; c < k.size(); ++c) {
      if (k[c] != 0) p.add_term(ops[c], k[c]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool is_cone(const Polynomial& form) {
  const unsigned d = require_form_degree(form);
  if (d < 1) throw DomainError("cone test needs degree at least 1");
  return !annihilator_piece(form, 1).empty();
}

}  // namespace gorlef
