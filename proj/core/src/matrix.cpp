#include "lie5/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lie5 {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("entry count does not match rows x cols");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
    for (const auto& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::zero(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, cols);
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec RatMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec RatMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void RatMatrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in *");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch in +");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch in -");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Vec RatMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Rational RatMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << rat_to_string((*this)(i, j));
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& gens) {
  for (const auto& g : gens)
    if (g.size() != ambient_dim)
      throw std::invalid_argument("generator length mismatch");
  return row_space(RatMatrix::from_rows(gens, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(RatMatrix::identity(ambient_dim));
}

Subspace Subspace::row_space(const RatMatrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.cols());
  RatMatrix basis(r.pivots.size(), m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    basis.set_row(i, r.mat.row(i));
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(r.pivots);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient dimension mismatch in sum");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i)
    gens.push_back(other.basis_vector(i));
  return span(ambient_, gens);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector length mismatch in reduce");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational& f = r[pivots_[i]];
    if (f == 0) continue;
    Rational c = f;  // basis has 1 at its pivot
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(i, j) != 0) r[j] -= c * basis_(i, j);
  }
  return r;
}

Subspace kernel(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n);
    v[c] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat(i, c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace image(const RatMatrix& m) {
  return Subspace::row_space(m.transpose());
}

std::optional<Vec> solve(const RatMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  for (auto p : r.pivots)
    if (p == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  Vec x(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat(i, m.cols());
  return x;
}

Vec quotient_coords(std::size_t ambient_dim, const Subspace& sub, const Vec& v) {
  if (sub.ambient_dim() != ambient_dim)
    throw std::invalid_argument("subspace ambient dimension mismatch");
  Vec r = sub.reduce(v);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  Vec out;
  out.reserve(ambient_dim - sub.dim());
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) out.push_back(r[j]);
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Rational& s, const Vec& a) {
  Vec out = a;
  for (auto& x : out) x *= s;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace lie5
