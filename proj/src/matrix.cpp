#include "polar/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polar/error.hpp"

namespace polar {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols)
    throw Error(Errc::dimension_mismatch, "matrix entry count does not match shape");
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_values(Field f, const std::vector<std::vector<unsigned>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_value(rows[i][j]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix s = *this;
  for (auto& x : s.a_) x = f_.mul(c, x);
  return s;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(f_, row(i), v);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error(Errc::dimension_mismatch, "block does not fit");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (Elem x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_alternating() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != f_.neg((*this)(j, i))) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
  const Field& f = a.f_;
  Matrix c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::dimension_mismatch, "matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::dimension_mismatch, "matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
  return c;
}

Elem dot(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  Elem s = f.zero();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !v[i].is_zero()) s = f.add(s, f.mul(u[i], v[i]));
  return s;
}

Elem bilinear(const Matrix& a, std::span<const Elem> u, std::span<const Elem> v) {
  return dot(a.field(), u, a.apply(v));
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  const Field f = m.field();
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
    const Elem s = f.inv(m(lead, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = f.mul(s, m(lead, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, c).is_zero()) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(lead, j)));
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Elem determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Elem det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Elem s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Elem factor = f.mul(a(i, c), s);
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Errc::singular_matrix, "matrix is not invertible");
  return r.block(0, n, n, n);
}

Subspace eigenspace(const Matrix& a, Elem lambda) {
  if (!a.is_square()) throw Error(Errc::dimension_mismatch, "eigenspace of a non-square matrix");
  return kernel(a - Matrix::identity(a.field(), a.rows()).scaled(lambda));
}

std::map<Elem, Subspace> nonzero_eigenvalues(const Matrix& a) {
  std::map<Elem, Subspace> out;
  for (Elem lambda : a.field().elements()) {
    if (lambda.is_zero()) continue;
    Subspace s = eigenspace(a, lambda);
    if (s.dim() > 0) out.emplace(lambda, std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field f, std::size_t ambient) : basis_(std::move(f), 0, ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix m(f, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error(Errc::dimension_mismatch, "vector length differs from ambient dimension");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  return Subspace(r.block(0, 0, piv.size(), ambient));
}

Subspace Subspace::whole(Field f, std::size_t ambient) { return Subspace(Matrix::identity(std::move(f), ambient)); }

Vec Subspace::vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vec(r.begin(), r.end());
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  std::vector<Vec> vs = vectors();
  vs.emplace_back(v.begin(), v.end());
  return Subspace::span(field(), ambient_dim(), vs).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const { return sum(*this, other).dim() == dim(); }

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<Vec> vs = a.vectors();
  for (auto& v : b.vectors()) vs.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Vectors orthogonal (standard dot product) to the annihilators of both.
  const Field& f = a.field();
  Subspace ann_a = kernel(a.basis());
  Subspace ann_b = kernel(b.basis());
  Subspace ann = sum(ann_a, ann_b);
  return kernel(ann.basis().rows() ? ann.basis() : Matrix(f, 0, a.ambient_dim()));
}

Subspace complement_in(const Subspace& part, const Subspace& whole) {
  std::vector<Vec> acc = part.vectors();
  std::vector<Vec> extra;
  std::size_t have = part.dim();
  for (const Vec& w : whole.vectors()) {
    acc.push_back(w);
    const std::size_t d = Subspace::span(part.field(), part.ambient_dim(), acc).dim();
    if (d > have) {
      extra.push_back(w);
      have = d;
    } else {
      acc.pop_back();
    }
  }
  return Subspace::span(part.field(), part.ambient_dim(), extra);
}

Subspace orthogonal(const Subspace& s, const Matrix& g) {
  if (s.dim() == 0) return Subspace::whole(s.field(), s.ambient_dim());
  return kernel(s.basis() * g);
}

Matrix restrict_form(const Matrix& g, const Subspace& s) { return s.basis() * g * s.basis().transpose(); }

// ---------------------------------------------------------------------------
// Text IO

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << static_cast<unsigned>(m(i, j).v);
    }
    out << '\n';
  }
}

namespace {

Matrix read_body(std::istream& in, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long long v = 0;
      if (!(in >> v)) throw Error(Errc::parse_error, "matrix body truncated");
      if (v < 0) throw Error(Errc::parse_error, "negative matrix entry");
      m(i, j) = f.from_value(static_cast<unsigned>(v));
    }
  return m;
}

}  // namespace

Matrix read_matrix(std::istream& in, const Field& f) {
  std::size_t rows = 0, cols = 0;
  unsigned q = 0;
  if (!(in >> rows >> cols >> q)) throw Error(Errc::parse_error, "bad matrix header");
  if (q != f.q()) throw Error(Errc::parse_error, "matrix header q=" + std::to_string(q) + " does not match field");
  return read_body(in, f, rows, cols);
}

Matrix read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  unsigned q = 0;
  if (!(in >> rows >> cols >> q)) throw Error(Errc::parse_error, "bad matrix header");
  return read_body(in, Field::of_order(q), rows, cols);
}

}  // namespace polar
