#pragma once

#include "lie5/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lie5 {

// Dense matrix over Q, row-major. All algorithms are exact; no pivoting
// heuristics are needed since there is no rounding.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols);
  static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator*(const Rational& s) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  bool operator==(const RatMatrix& rhs) const = default;

  bool is_zero() const;
  Rational trace() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix mat;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Canonical subspace of Q^n: basis rows in reduced row echelon form, so two
// subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  // Spans of arbitrary generating vectors; rows are reduced to RREF.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& gens);
  static Subspace full(std::size_t ambient_dim);
  static Subspace row_space(const RatMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }

  Subspace sum(const Subspace& other) const;
  bool operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
  }

  // Residue of v after eliminating the pivot coordinates (full length n;
  // zero iff v lies in the subspace).
  Vec reduce(const Vec& v) const;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;  // RREF rows
  std::vector<std::size_t> pivots_;
};

// Null space {v : m v = 0} as a canonical subspace of Q^cols.
Subspace kernel(const RatMatrix& m);

// Column space, canonicalized (RREF of the transpose).
Subspace image(const RatMatrix& m);

// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const RatMatrix& m, const Vec& b);

// Coordinates of v in the complement of `sub` spanned by the non-pivot
// coordinate axes: reduce v modulo sub, then read off the non-pivot entries.
// Zero iff v is in sub. For sub = 0 this is v itself.
Vec quotient_coords(std::size_t ambient_dim, const Subspace& sub, const Vec& v);

// Vector helpers shared across modules.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& a);
bool vec_is_zero(const Vec& v);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace lie5
