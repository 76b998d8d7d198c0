#include "lb/matrix.hpp"

#include <cstdint>
#include <utility>

#include "lb/error.hpp"

namespace lb {

Vector zero_vector(Ring ring, std::size_t n) { return Vector(n, Scalar::zero(ring)); }

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(ring, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_vectors(Ring ring, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch in product");
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
  Vector r = zero_vector(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void Matrix::add_row_multiple(std::size_t i, std::size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < cols_; ++k)
    if (!(*this)(j, k).is_zero()) (*this)(i, k) += c * (*this)(j, k);
}

void Matrix::add_col_multiple(std::size_t i, std::size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < rows_; ++k)
    if (!(*this)(k, j).is_zero()) (*this)(k, i) += c * (*this)(k, j);
}

void Matrix::scale_row(std::size_t i, const Scalar& c) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) *= c;
}

void Matrix::scale_col(std::size_t i, const Scalar& c) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) *= c;
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class abs_int(const Scalar& s) { return abs(s.to_integer()); }

}  // namespace

namespace {

// Reduced row echelon form over 𝔽p on machine words.
Echelon echelon_mod_p(const Matrix& m, bool with_transform) {
  const Ring ring = m.ring();
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  const u64 p = ring.modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t tcols = with_transform ? rows : 0;
  const std::size_t width = cols + tcols;
  std::vector<u64> a(rows * width, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * width + j] = m(i, j).to_integer().get_ui();
    if (with_transform) a[i * width + cols + i] = 1;
  }
  auto mulmod = [p](u64 x, u64 y) { return static_cast<u64>(static_cast<u128>(x) * y % p); };
  auto inv = [&](u64 x) {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * width + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < width; ++j) std::swap(a[piv * width + j], a[r * width + j]);
    u64 s = inv(a[r * width + c]);
    for (std::size_t j = c; j < width; ++j) a[r * width + j] = mulmod(a[r * width + j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      u64 f = a[i * width + c];
      if (f == 0) continue;
      u64 nf = p - f;
      for (std::size_t j = c; j < width; ++j) {
        u64 x = a[r * width + j];
        if (x) a[i * width + j] = (a[i * width + j] + mulmod(nf, x)) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.form = Matrix(ring, r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i * width + j]) e.form(i, j) = Scalar(ring, static_cast<long>(a[i * width + j]));
  if (with_transform) {
    e.transform = Matrix(ring, rows, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j)
        if (a[i * width + cols + j]) e.transform(i, j) = Scalar(ring, static_cast<long>(a[i * width + cols + j]));
  }
  e.pivots = std::move(pivots);
  return e;
}

}  // namespace

Echelon echelon(const Matrix& m, bool with_transform) {
  const Ring ring = m.ring();
  if (ring.kind() == RingKind::PrimeField && ring.modulus() < (1ULL << 62)) return echelon_mod_p(m, with_transform);
  Matrix a = m;
  Matrix t = with_transform ? Matrix::identity(ring, m.rows()) : Matrix();
  auto add = [&](std::size_t i, std::size_t j, const Scalar& c) {
    a.add_row_multiple(i, j, c);
    if (with_transform) t.add_row_multiple(i, j, c);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (with_transform) t.swap_rows(i, j);
  };
  auto scale = [&](std::size_t i, const Scalar& c) {
    a.scale_row(i, c);
    if (with_transform) t.scale_row(i, c);
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    if (ring.is_field()) {
      std::size_t p = r;
      while (p < a.rows() && a(p, c).is_zero()) ++p;
      if (p == a.rows()) continue;
      swap(r, p);
      scale(r, a(r, c).inverse());
      for (std::size_t i = 0; i < a.rows(); ++i)
        if (i != r && !a(i, c).is_zero()) add(i, r, -a(i, c));
    } else {
      for (;;) {
        std::size_t best = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
          if (!a(i, c).is_zero() && (best == a.rows() || abs_int(a(i, c)) < abs_int(a(best, c))))
            best = i;
        if (best == a.rows()) break;
        swap(r, best);
        bool clean = true;
        mpz_class piv = a(r, c).to_integer();
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
          if (a(i, c).is_zero()) continue;
          add(i, r, Scalar(ring, mpz_class(-floor_div(a(i, c).to_integer(), piv))));
          if (!a(i, c).is_zero()) clean = false;
        }
        if (clean) break;
      }
      if (a(r, c).is_zero()) continue;
      if (sgn(a(r, c).value()) < 0) scale(r, Scalar(ring, -1L));
      mpz_class piv = a(r, c).to_integer();
      for (std::size_t i = 0; i < r; ++i)
        if (!a(i, c).is_zero())
          add(i, r, Scalar(ring, mpz_class(-floor_div(a(i, c).to_integer(), piv))));
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.form = Matrix(ring, r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e.form(i, j) = a(i, j);
  e.pivots = std::move(pivots);
  e.transform = std::move(t);
  return e;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Vector reduce_modulo(const Echelon& e, Vector v) {
  const Ring ring = e.form.ring();
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t c = e.pivots[i];
    if (v[c].is_zero()) continue;
    Scalar q = ring.is_field()
                   ? v[c]
                   : Scalar(ring, floor_div(v[c].to_integer(), e.form(i, c).to_integer()));
    if (q.is_zero()) continue;
    for (std::size_t j = c; j < e.form.cols(); ++j)
      if (!e.form(i, j).is_zero()) v[j] -= q * e.form(i, j);
  }
  return v;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Ring ring = m.ring();
  std::vector<Vector> basis;
  if (ring.is_field()) {
    Echelon e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) continue;
      Vector v = zero_vector(ring, m.cols());
      v[f] = Scalar::one(ring);
      for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, f);
      basis.push_back(std::move(v));
    }
  } else {
    // U * M^T = [H; 0]: the rows of U against zero rows of H span ker M.
    Echelon e = echelon(m.transpose(), true);
    for (std::size_t i = e.pivots.size(); i < m.cols(); ++i) basis.push_back(e.transform.row(i));
  }
  if (basis.empty()) return basis;
  Echelon canon = echelon(Matrix::from_vectors(ring, basis, m.cols()));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < canon.form.rows(); ++i) out.push_back(canon.form.row(i));
  return out;
}

SmithForm smith_form(const Matrix& m) {
  if (m.ring().kind() != RingKind::Integers) throw DomainError("smith_form requires integer entries");
  const Ring ring = m.ring();
  Matrix a = m;
  Matrix u = Matrix::identity(ring, m.rows());
  Matrix v = Matrix::identity(ring, m.cols());
  auto row_add = [&](std::size_t i, std::size_t j, const Scalar& c) {
    a.add_row_multiple(i, j, c);
    u.add_row_multiple(i, j, c);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Scalar& c) {
    a.add_col_multiple(i, j, c);
    v.add_col_multiple(i, j, c);
  };
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = m.rows(), bj = m.cols();
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (!a(i, j).is_zero() && (bi == m.rows() || abs_int(a(i, j)) < abs_int(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m.rows()) break;
      a.swap_rows(t, bi);
      u.swap_rows(t, bi);
      a.swap_cols(t, bj);
      v.swap_cols(t, bj);
      mpz_class piv = a(t, t).to_integer();
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        row_add(i, t, Scalar(ring, mpz_class(-floor_div(a(i, t).to_integer(), piv))));
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        col_add(j, t, Scalar(ring, mpz_class(-floor_div(a(t, j).to_integer(), piv))));
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          mpz_class x = a(i, j).to_integer();
          if (x % piv != 0) {
            row_add(t, i, Scalar::one(ring));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (sgn(a(t, t).value()) < 0) {
      a.scale_row(t, Scalar(ring, -1L));
      u.scale_row(t, Scalar(ring, -1L));
    }
  }
  SmithForm s{u, a, v, {}};
  for (std::size_t t = 0; t < n; ++t) s.divisors.push_back(a(t, t).to_integer());
  return s;
}

std::optional<Vector> membership(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DomainError("membership: right-hand side has wrong length");
  const Ring ring = m.ring();
  // U * M^T = [H; 0], so M * U^T = [H^T | 0]; solve H^T y = b row by row.
  Echelon e = echelon(m.transpose(), true);
  Vector residual = b;
  Vector x = zero_vector(ring, m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t c = e.pivots[i];
    if (residual[c].is_zero()) continue;
    const Scalar& piv = e.form(i, c);
    if (!ring.is_field() && residual[c].to_integer() % piv.to_integer() != 0) return std::nullopt;
    Scalar y = residual[c] / piv;
    for (std::size_t j = c; j < e.form.cols(); ++j)
      if (!e.form(i, j).is_zero()) residual[j] -= y * e.form(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!e.transform(i, j).is_zero()) x[j] += y * e.transform(i, j);
  }
  for (const auto& r : residual)
    if (!r.is_zero()) return std::nullopt;
  return x;
}

mpz_class determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<mpq_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).value();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      mpq_class f = a[i * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
    }
  }
  if (m.ring().kind() == RingKind::PrimeField) {
    mpz_class r, p(static_cast<unsigned long>(m.ring().modulus()));
    mpz_fdiv_r(r.get_mpz_t(), det.get_num().get_mpz_t(), p.get_mpz_t());
    return r;
  }
  if (det.get_den() != 1) throw DomainError("determinant is not integral");
  return det.get_num();
}

}  // namespace lb
