#include "lie5/cohomology.hpp"

#include "lie5/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lie5 {

Representation::Representation(LieAlgebra algebra, std::size_t module_dim,
                               std::vector<RatMatrix> action)
    : algebra_(std::move(algebra)), module_dim_(module_dim),
      action_(std::move(action)) {
  if (action_.size() != algebra_.dim())
    throw IncompatibleRepresentation("need one action matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != module_dim_ || m.cols() != module_dim_)
      throw IncompatibleRepresentation("action matrix shape mismatch");
  for (std::size_t i = 0; i < algebra_.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra_.dim(); ++j) {
      RatMatrix commutator = action_[i] * action_[j] - action_[j] * action_[i];
      Vec cij = algebra_.bracket_basis(i, j);
      RatMatrix expected(module_dim_, module_dim_);
      for (std::size_t k = 0; k < algebra_.dim(); ++k)
        if (cij[k] != 0) expected = expected + action_[k] * cij[k];
      if (!(commutator == expected))
        throw IncompatibleRepresentation(
            "action is not a representation on pair (" +
            algebra_.basis_labels()[i] + ", " + algebra_.basis_labels()[j] + ")");
    }
}

Representation Representation::trivial(const LieAlgebra& L, std::size_t module_dim) {
  std::vector<RatMatrix> action(L.dim(), RatMatrix::zero(module_dim, module_dim));
  return Representation(L, module_dim, std::move(action));
}

Representation Representation::adjoint(const LieAlgebra& L) {
  std::vector<RatMatrix> action;
  for (std::size_t i = 0; i < L.dim(); ++i) action.push_back(L.adjoint_basis(i));
  return Representation(L, L.dim(), std::move(action));
}

bool Representation::operator==(const Representation& rhs) const {
  return algebra_.dim() == rhs.algebra_.dim() && module_dim_ == rhs.module_dim_ &&
         action_ == rhs.action_ &&
         algebra_.structure() == rhs.algebra_.structure();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n,
                                                        std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = i;
  if (p > n) return out;
  if (p == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(t);
    std::size_t i = p;
    while (i > 0 && t[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

namespace {

// Sorts a tuple, returning the permutation sign; 0 for repeats.
int normalize_tuple(std::vector<std::size_t>& t) {
  int s = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      s = -s;
    }
  return s;
}

std::size_t tuple_rank(const std::vector<std::vector<std::size_t>>& tuples,
                       const std::vector<std::size_t>& t) {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  return static_cast<std::size_t>(it - tuples.begin());
}

}  // namespace

Cochain::Cochain(RepPtr rep, std::size_t degree)
    : rep_(std::move(rep)), degree_(degree) {
  if (degree_ > rep_->algebra().dim())
    throw std::invalid_argument("cochain degree exceeds algebra dimension");
}

Vec Cochain::value(std::vector<std::size_t> tuple) const {
  int s = normalize_tuple(tuple);
  if (s == 0) return Vec(rep_->module_dim());
  auto it = coeffs_.find(tuple);
  if (it == coeffs_.end()) return Vec(rep_->module_dim());
  return s == 1 ? it->second : vec_scale(-1, it->second);
}

void Cochain::set_value(std::vector<std::size_t> tuple, const Vec& v) {
  if (v.size() != rep_->module_dim())
    throw std::invalid_argument("cochain value dimension mismatch");
  int s = normalize_tuple(tuple);
  if (s == 0) throw std::invalid_argument("repeated index in cochain tuple");
  Vec store = s == 1 ? v : vec_scale(-1, v);
  if (vec_is_zero(store))
    coeffs_.erase(tuple);
  else
    coeffs_[tuple] = std::move(store);
}

void Cochain::add_value(std::vector<std::size_t> tuple, const Vec& v) {
  int s = normalize_tuple(tuple);
  if (s == 0) return;
  Vec cur = Vec(rep_->module_dim());
  auto it = coeffs_.find(tuple);
  if (it != coeffs_.end()) cur = it->second;
  cur = vec_add(cur, s == 1 ? v : vec_scale(-1, v));
  if (vec_is_zero(cur))
    coeffs_.erase(tuple);
  else
    coeffs_[tuple] = std::move(cur);
}

bool Cochain::is_zero() const {
  for (const auto& [t, v] : coeffs_)
    if (!vec_is_zero(v)) return false;
  return true;
}

Vec Cochain::flat() const {
  std::size_t n = rep_->algebra().dim(), m = rep_->module_dim();
  auto tuples = increasing_tuples(n, degree_);
  Vec out(tuples.size() * m);
  for (const auto& [t, v] : coeffs_) {
    std::size_t r = tuple_rank(tuples, t);
    for (std::size_t k = 0; k < m; ++k) out[r * m + k] = v[k];
  }
  return out;
}

Cochain Cochain::from_flat(RepPtr rep, std::size_t degree, const Vec& flat) {
  std::size_t n = rep->algebra().dim(), m = rep->module_dim();
  auto tuples = increasing_tuples(n, degree);
  if (flat.size() != tuples.size() * m)
    throw std::invalid_argument("flat cochain length mismatch");
  Cochain c(std::move(rep), degree);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    Vec v(flat.begin() + r * m, flat.begin() + (r + 1) * m);
    if (!vec_is_zero(v)) c.coeffs_[tuples[r]] = std::move(v);
  }
  return c;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
  if (degree_ != rhs.degree_)
    throw std::invalid_argument("cochain degree mismatch in +");
  Cochain out = *this;
  for (const auto& [t, v] : rhs.coeffs_) out.add_value(t, v);
  return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
  return *this + rhs.scaled(-1);
}

Cochain Cochain::scaled(const Rational& s) const {
  Cochain out(rep_, degree_);
  if (s == 0) return out;
  for (const auto& [t, v] : coeffs_) out.coeffs_[t] = vec_scale(s, v);
  return out;
}

bool Cochain::operator==(const Cochain& rhs) const {
  return degree_ == rhs.degree_ && (*this - rhs).is_zero();
}

Cochain boundary(const Cochain& c) {
  const LieAlgebra& L = c.rep().algebra();
  std::size_t n = L.dim(), p = c.degree();
  if (p >= n) throw std::invalid_argument("boundary: degree must be < dim");
  Cochain out(c.rep_ptr(), p + 1);
  for (const auto& tuple : increasing_tuples(n, p + 1)) {
    Vec total(c.rep().module_dim());
    // Bracket sum over positions i < j (1-based signs (-1)^{i+j}).
    for (std::size_t i = 0; i < p + 1; ++i)
      for (std::size_t j = i + 1; j < p + 1; ++j) {
        Vec br = L.bracket_basis(tuple[i], tuple[j]);
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < p + 1; ++k)
          if (k != i && k != j) rest.push_back(tuple[k]);
        int sgn = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{(i+1)+(j+1)}
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k] == 0) continue;
          std::vector<std::size_t> t = rest;
          t.insert(t.begin(), k);
          Vec v = c.value(std::move(t));
          if (!vec_is_zero(v)) total = vec_add(total, vec_scale(Rational(sgn) * br[k], v));
        }
      }
    // Action sum over positions i (sign (-1)^{i+1}, 1-based).
    for (std::size_t i = 0; i < p + 1; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < p + 1; ++k)
        if (k != i) rest.push_back(tuple[k]);
      Vec v = c.value(rest);
      if (vec_is_zero(v)) continue;
      Vec acted = c.rep().act(tuple[i], v);
      int sgn = (i % 2 == 0) ? 1 : -1;  // (-1)^{(i+1)+1}
      total = vec_add(total, vec_scale(sgn, acted));
    }
    if (!vec_is_zero(total)) out.set_value(tuple, total);
  }
  return out;
}

RatMatrix boundary_matrix(const RepPtr& rep, std::size_t degree) {
  std::size_t n = rep->algebra().dim(), m = rep->module_dim();
  std::size_t cols = binomial(n, degree) * m;
  std::size_t rows = binomial(n, degree + 1) * m;
  RatMatrix out(rows, cols);
  auto tuples = increasing_tuples(n, degree);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (std::size_t k = 0; k < m; ++k) {
      Cochain basis(rep, degree);
      basis.set_value(tuples[t], unit_vec(m, k));
      Vec col = boundary(basis).flat();
      for (std::size_t r = 0; r < rows; ++r) out(r, t * m + k) = col[r];
    }
  return out;
}

namespace {

Subspace coboundary_space(const RepPtr& rep, std::size_t degree) {
  std::size_t n = rep->algebra().dim(), m = rep->module_dim();
  std::size_t dim_cp = binomial(n, degree) * m;
  if (degree == 0) return Subspace(dim_cp);
  return image(boundary_matrix(rep, degree - 1));
}

}  // namespace

std::size_t cohomology_dim(const RepPtr& rep, std::size_t degree) {
  std::size_t n = rep->algebra().dim(), m = rep->module_dim();
  std::size_t dim_cp = binomial(n, degree) * m;
  std::size_t rank_dp = degree < n ? rank(boundary_matrix(rep, degree)) : 0;
  std::size_t rank_prev =
      degree == 0 ? 0 : rank(boundary_matrix(rep, degree - 1));
  return dim_cp - rank_dp - rank_prev;
}

std::vector<Cochain> cohomology_reps(const RepPtr& rep, std::size_t degree) {
  std::size_t n = rep->algebra().dim(), m = rep->module_dim();
  std::size_t dim_cp = binomial(n, degree) * m;
  Subspace cocycles = degree < n ? kernel(boundary_matrix(rep, degree))
                                 : Subspace::full(dim_cp);
  Subspace cob = coboundary_space(rep, degree);
  // Reduce kernel vectors mod coboundaries; the RREF of the residues is a
  // canonical basis of a complement of B^p inside Z^p.
  std::vector<Vec> residues;
  for (std::size_t i = 0; i < cocycles.dim(); ++i)
    residues.push_back(cob.reduce(cocycles.basis_vector(i)));
  Subspace quotient = Subspace::span(dim_cp, residues);
  std::vector<Cochain> out;
  for (std::size_t i = 0; i < quotient.dim(); ++i)
    out.push_back(Cochain::from_flat(rep, degree, quotient.basis_vector(i)));
  return out;
}

bool is_cocycle(const Cochain& c) {
  if (c.degree() >= c.rep().algebra().dim()) return true;  // C^{n+1} = 0
  return boundary(c).is_zero();
}

Cochain reduce_mod_coboundaries(const Cochain& c) {
  Subspace cob = coboundary_space(c.rep_ptr(), c.degree());
  return Cochain::from_flat(c.rep_ptr(), c.degree(), cob.reduce(c.flat()));
}

}  // namespace lie5
