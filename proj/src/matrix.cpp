#include "gorlef/matrix.hpp"

#include "gorlef/error.hpp"

#include <bit>
#include <unordered_map>

namespace gorlef {

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows, Field field) {
  Matrix m(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row_labels(std::vector<Monomial> labels) {
  if (!labels.empty() && labels.size() != rows_) throw DomainError("row label count mismatch");
  row_labels_ = std::move(labels);
}

void Matrix::set_col_labels(std::vector<Monomial> labels) {
  if (!labels.empty() && labels.size() != cols_) throw DomainError("column label count mismatch");
  col_labels_ = std::move(labels);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match column count");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc(0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = field_.normalize(acc);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  if (a.field_ != b.field_) throw DomainError("matrix product over different fields");
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  if (!a.field_.is_rational()) {
    for (auto& v : out.data_) v = a.field_.normalize(v);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  Matrix out(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    out.data_[i] = a.field_.normalize(a.data_[i] + b.data_[i]);
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m);
  for (auto& v : out.data_) v = m.field_.normalize(v * s);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators so every entry is an integer.
IntRows to_integer_rows(const Matrix& m, std::vector<mpz_class>* scales) {
  IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scales) scales->assign(m.rows(), mpz_class(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpz_class& den = m(r, c).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& v = m(r, c);
      if (v == 0) continue;
      rows[r][c] = v.get_num() * (l / v.get_den());
    }
    if (scales) (*scales)[r] = l;
  }
  return rows;
}

// Fraction-free Gauss-Jordan. On return every pivot entry equals the last pivot used
// and all entries are integers (minors of the input).
Echelon echelon_rational(const Matrix& m) {
  IntRows a = to_integer_rows(m, nullptr);
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  Echelon result;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t found = n_rows;
    for (std::size_t i = r; i < n_rows; ++i) {
      if (a[i][c] != 0) {
        found = i;
        break;
      }
    }
    if (found == n_rows) continue;
    std::swap(a[r], a[found]);
    const mpz_class pivot = a[r][c];
    const auto& prow = a[r];
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r) continue;
      auto& row = a[i];
      const mpz_class factor = row[c];
      // Rows below the pivot are zero left of c.
      const std::size_t start = i > r ? c : 0;
      for (std::size_t j = start; j < n_cols; ++j) {
        mpz_ptr x = row[j].get_mpz_t();
        if (factor == 0) {
          if (mpz_sgn(x) == 0) continue;
          mpz_mul(x, x, pivot.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
          mpz_mul(x, x, pivot.get_mpz_t());
          mpz_sub(x, x, tmp.get_mpz_t());
        }
        if (prev != 1) mpz_divexact(x, x, prev.get_mpz_t());
      }
    }
    prev = pivot;
    result.pivot_columns.push_back(c);
    ++r;
  }
  result.rank = r;
  result.rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Vector row(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (a[i][j] == 0) continue;
      row[j] = Scalar(a[i][j], prev);
      row[j].canonicalize();
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

using ResidueRows = std::vector<std::vector<std::uint64_t>>;

ResidueRows to_residues(const Matrix& m) {
  const Field& f = m.field();
  ResidueRows rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = f.to_residue(m(r, c));
  }
  return rows;
}

Echelon echelon_prime(const Matrix& m) {
  const std::uint64_t p = m.field().characteristic();
  ResidueRows a = to_residues(m);
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  Echelon result;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t found = n_rows;
    for (std::size_t i = r; i < n_rows; ++i) {
      if (a[i][c] != 0) {
        found = i;
        break;
      }
    }
    if (found == n_rows) continue;
    std::swap(a[r], a[found]);
    const std::uint64_t inv = inv_mod(a[r][c], p);
    for (std::size_t j = c; j < n_cols; ++j) a[r][j] = mul_mod(a[r][j], inv, p);
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t factor = a[i][c];
      for (std::size_t j = c; j < n_cols; ++j) {
        std::uint64_t sub = mul_mod(factor, a[r][j], p);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
    result.pivot_columns.push_back(c);
    ++r;
  }
  result.rank = r;
  for (std::size_t i = 0; i < r; ++i) {
    Vector row(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) {
      row[j] = Scalar(mpz_class(static_cast<unsigned long>(a[i][j])));
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::uint64_t det_prime(const Matrix& m) {
  const std::uint64_t p = m.field().characteristic();
  ResidueRows a = to_residues(m);
  const std::size_t n = m.rows();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = n;
    for (std::size_t i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        found = i;
        break;
      }
    }
    if (found == n) return 0;
    if (found != c) {
      std::swap(a[c], a[found]);
      det = det == 0 ? 0 : p - det;
    }
    det = mul_mod(det, a[c][c], p);
    const std::uint64_t inv = inv_mod(a[c][c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t factor = mul_mod(a[i][c], inv, p);
      for (std::size_t j = c; j < n; ++j) {
        std::uint64_t sub = mul_mod(factor, a[c][j], p);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
  }
  return det;
}

Scalar det_rational(const Matrix& m) {
  std::vector<mpz_class> scales;
  IntRows a = to_integer_rows(m, &scales);
  const std::size_t n = m.rows();
  mpz_class prev = 1;
  mpz_class tmp;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = n;
    for (std::size_t i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        found = i;
        break;
      }
    }
    if (found == n) return Scalar(0);
    if (found != c) {
      std::swap(a[c], a[found]);
      negate = !negate;
    }
    const mpz_class pivot = a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpz_class factor = a[i][c];
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_ptr x = a[i][j].get_mpz_t();
        mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), a[c][j].get_mpz_t());
        mpz_mul(x, x, pivot.get_mpz_t());
        mpz_sub(x, x, tmp.get_mpz_t());
        mpz_divexact(x, x, prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
  }
  mpz_class scale = 1;
  for (const auto& s : scales) scale *= s;
  Scalar det(n == 0 ? mpz_class(1) : prev, scale);
  det.canonicalize();
  return negate ? Scalar(-det) : det;
}

}  // namespace

Echelon row_echelon(const Matrix& m) {
  return m.field().is_rational() ? echelon_rational(m) : echelon_prime(m);
}

KernelResult rank_kernel(const Matrix& m) {
  Echelon e = row_echelon(m);
  KernelResult out;
  out.rank = e.rank;
  out.pivot_columns = e.pivot_columns;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  const Field& f = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector k(m.cols());
    k[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) {
      const Scalar& v = e.rows[i][free];
      if (v != 0) k[e.pivot_columns[i]] = f.normalize(-v);
    }
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).rank; }

std::optional<std::size_t> rank_mod_prime(const Matrix& m, std::uint64_t p) {
  const Field fp = Field::prime(p);
  Matrix reduced(m.rows(), m.cols(), fp);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& v = m(r, c);
      if (v == 0) continue;
      mpz_class den_mod = v.get_den() % static_cast<unsigned long>(p);
      if (den_mod == 0) return std::nullopt;
      reduced(r, c) = fp.from_fraction(v.get_num(), v.get_den());
    }
  }
  return echelon_prime(reduced).rank;
}

Scalar det_ff(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.field().is_rational()) return det_rational(m);
  return Scalar(mpz_class(static_cast<unsigned long>(det_prime(m))));
}

std::optional<Vector> coords_in_span(std::span<const Scalar> v, const std::vector<Vector>& basis,
                                     Field field) {
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw DomainError("dimension mismatch in span test");
  }
  if (basis.empty()) {
    if (is_zero_vector(v)) return Vector{};
    return std::nullopt;
  }
  Matrix aug(v.size(), basis.size() + 1, field);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < v.size(); ++r) aug(r, c) = basis[c][r];
  }
  for (std::size_t r = 0; r < v.size(); ++r) aug(r, basis.size()) = v[r];
  Echelon e = row_echelon(aug);
  Vector coords(basis.size());
  for (std::size_t i = 0; i < e.rank; ++i) {
    std::size_t c = e.pivot_columns[i];
    if (c == basis.size()) return std::nullopt;
    coords[c] = e.rows[i][basis.size()];
  }
  return coords;
}

bool PolynomialMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

Matrix PolynomialMatrix::evaluate(std::span<const Scalar> point, Field field) const {
  Matrix m(rows_, cols_, field);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).eval(point);
  }
  return m;
}

Polynomial det_cofactor(const PolynomialMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > kMaxSymbolicDeterminant) {
    throw DomainError("symbolic determinant limited to " +
                      std::to_string(kMaxSymbolicDeterminant) + " rows");
  }
  if (n == 0) throw DomainError("empty polynomial matrix");
  const Polynomial& sample = m(0, 0);
  // minors[mask] = determinant of rows (n - popcount(mask))..n-1 on the columns in mask.
  std::unordered_map<unsigned, Polynomial> minors;
  minors.emplace(0u, Polynomial::constant(sample.n_vars(), sample.field(), Scalar(1)));
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::unordered_map<unsigned, Polynomial> next;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      Polynomial acc(sample.n_vars(), sample.field());
      int position = 0;
      for (std::size_t col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        const Polynomial& entry = m(row, col);
        const Polynomial& minor = minors.at(mask & ~(1u << col));
        if (!entry.is_zero() && !minor.is_zero()) {
          Polynomial term = entry * minor;
          if (position % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
        ++position;
      }
      next.emplace(mask, std::move(acc));
    }
    minors = std::move(next);
  }
  return minors.at((1u << n) - 1);
}

}  // namespace gorlef
