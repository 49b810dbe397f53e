#pragma once

// Dense exact linear algebra over F_q.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "polar/field.hpp"

namespace polar {

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(Field f, std::size_t n);
  // Rows given as integer literals, reduced into the field with Field::from_value.
  static Matrix from_values(Field f, const std::vector<std::vector<unsigned>>& rows);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& entries() const { return a_; }

  Matrix transpose() const;
  Matrix scaled(Elem c) const;
  Vec apply(std::span<const Elem> v) const;  // this * v
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  // S^T = -S with zero diagonal.
  bool is_alternating() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field f_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

// A linear subspace of F_q^ambient, kept as the rows of a reduced row echelon basis.
// Two subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);  // zero subspace
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(Field f, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec vector(std::size_t i) const;
  std::vector<Vec> vectors() const;

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}
  Matrix basis_;
};

// Row echelon machinery. pivots receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Elem determinant(const Matrix& m);
// Throws Error(singular_matrix) when m is not invertible.
Matrix inverse(const Matrix& m);

Subspace eigenspace(const Matrix& a, Elem lambda);
// Every nonzero lambda in F_q with a nontrivial eigenspace, keyed by lambda.
std::map<Elem, Subspace> nonzero_eigenvalues(const Matrix& a);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// A complement of `part` inside `whole` built from basis vectors of `whole`.
Subspace complement_in(const Subspace& part, const Subspace& whole);
// { v : x^T g v = 0 for every x in s }.
Subspace orthogonal(const Subspace& s, const Matrix& g);
// Gram matrix B g B^T of g restricted to s, in the stored basis of s.
Matrix restrict_form(const Matrix& g, const Subspace& s);

Elem dot(const Field& f, std::span<const Elem> u, std::span<const Elem> v);
// u^T a v.
Elem bilinear(const Matrix& a, std::span<const Elem> u, std::span<const Elem> v);

// Text format: "rows cols q" then one line per row of space-separated base-p integers.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in, const Field& f);
// Reads the header first and builds the field from its q.
Matrix read_matrix(std::istream& in);

}  // namespace polar
