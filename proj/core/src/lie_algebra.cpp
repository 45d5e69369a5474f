#include "lie5/lie_algebra.hpp"

#include "lie5/errors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace lie5 {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       StructureMap structure)
    : name_(std::move(name)),
      labels_(std::move(basis_labels)),
      structure_(std::move(structure)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw std::invalid_argument("duplicate basis labels");
  for (const auto& [key, val] : structure_) {
    if (key.first >= key.second || key.second >= dim())
      throw std::invalid_argument("structure keys must satisfy i < j < dim");
    if (val.size() != dim())
      throw std::invalid_argument("structure value length mismatch");
  }
}

std::optional<std::size_t> LieAlgebra::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim());
  if (i == j) return out;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = structure_.find({i, j});
  if (it == structure_.end()) return out;
  return flip ? vec_scale(-1, it->second) : it->second;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw std::invalid_argument("bracket argument length mismatch");
  Vec out(dim());
  for (const auto& [key, val] : structure_) {
    Rational coeff = u[key.first] * v[key.second] - u[key.second] * v[key.first];
    if (coeff == 0) continue;
    for (std::size_t k = 0; k < dim(); ++k)
      if (val[k] != 0) out[k] += coeff * val[k];
  }
  return out;
}

RatMatrix LieAlgebra::adjoint_basis(std::size_t i) const {
  RatMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = bracket_basis(i, j);
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

RatMatrix LieAlgebra::adjoint(const Vec& u) const {
  RatMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = bracket(u, unit_vec(dim(), j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_first_failure() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      Vec bij = bracket_basis(i, j);
      for (std::size_t k = j + 1; k < dim(); ++k) {
        Vec s = bracket(bij, unit_vec(dim(), k));
        s = vec_add(s, bracket(bracket_basis(j, k), unit_vec(dim(), i)));
        s = vec_add(s, bracket(bracket_basis(k, i), unit_vec(dim(), j)));
        if (!vec_is_zero(s)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool LieAlgebra::jacobi_check() const { return !jacobi_first_failure(); }

Subspace LieAlgebra::center() const {
  // Stack all ad e_i; the center is the common kernel.
  RatMatrix stacked(dim() * dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    RatMatrix ad = adjoint_basis(i);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c) stacked(i * dim() + r, c) = ad(r, c);
  }
  return kernel(stacked);
}

Subspace LieAlgebra::bracket_subspaces(const Subspace& s, const Subspace& t) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      gens.push_back(bracket(s.basis_vector(i), t.basis_vector(j)));
  return Subspace::span(dim(), gens);
}

namespace {

// Terms until stabilization. The first derived/central term is always
// included, then terms are appended while they keep shrinking.
std::vector<Subspace> series(const LieAlgebra& L,
                             bool lower_central) {
  std::vector<Subspace> out;
  Subspace full = Subspace::full(L.dim());
  out.push_back(full);
  Subspace next = L.bracket_subspaces(full, full);
  out.push_back(next);
  while (!(out[out.size() - 1] == out[out.size() - 2])) {
    const Subspace& last = out.back();
    Subspace term = lower_central ? L.bracket_subspaces(full, last)
                                  : L.bracket_subspaces(last, last);
    if (term == last) break;
    out.push_back(term);
  }
  return out;
}

}  // namespace

std::vector<Subspace> LieAlgebra::derived_series() const {
  return series(*this, false);
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  return series(*this, true);
}

bool LieAlgebra::is_nilpotent() const {
  return lower_central_series().back().is_zero();
}

bool LieAlgebra::is_solvable() const {
  return derived_series().back().is_zero();
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  return s.contains(bracket_subspaces(Subspace::full(dim()), s));
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  return s.contains(bracket_subspaces(s, s));
}

bool LieAlgebra::is_unimodular() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (adjoint_basis(i).trace() != 0) return false;
  return true;
}

LieAlgebra LieAlgebra::renamed(std::string new_name) const {
  return LieAlgebra(std::move(new_name), labels_, structure_);
}

namespace {

std::vector<std::string> merged_labels(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels = a.basis_labels();
  for (const auto& l : b.basis_labels()) {
    std::string candidate = l;
    while (std::find(labels.begin(), labels.end(), candidate) != labels.end())
      candidate += "'";
    labels.push_back(candidate);
  }
  return labels;
}

}  // namespace

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::size_t n = a.dim(), total = a.dim() + b.dim();
  LieAlgebra::StructureMap structure;
  for (const auto& [key, val] : a.structure()) {
    Vec v(total);
    for (std::size_t k = 0; k < n; ++k) v[k] = val[k];
    if (!vec_is_zero(v)) structure[key] = std::move(v);
  }
  for (const auto& [key, val] : b.structure()) {
    Vec v(total);
    for (std::size_t k = 0; k < b.dim(); ++k) v[n + k] = val[k];
    if (!vec_is_zero(v))
      structure[{key.first + n, key.second + n}] = std::move(v);
  }
  return LieAlgebra(a.name() + "+" + b.name(), merged_labels(a, b),
                    std::move(structure));
}

bool is_derivation_of(const LieAlgebra& L, const RatMatrix& d) {
  if (d.rows() != L.dim() || d.cols() != L.dim()) return false;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Vec lhs = d.apply(L.bracket_basis(i, j));
      Vec rhs = vec_add(L.bracket(d.col(i), unit_vec(L.dim(), j)),
                        L.bracket(unit_vec(L.dim(), i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra semidirect_sum(const LieAlgebra& quotient, const LieAlgebra& kernel_alg,
                          const std::vector<RatMatrix>& action,
                          const std::string& name) {
  std::size_t nq = quotient.dim(), nh = kernel_alg.dim();
  if (action.size() != nq)
    throw ActionInvalid("need one action matrix per quotient basis element");
  for (std::size_t i = 0; i < nq; ++i)
    if (!is_derivation_of(kernel_alg, action[i]))
      throw ActionNotDerivation("action of " + quotient.basis_labels()[i] +
                                " is not a derivation of " + kernel_alg.name());
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = i + 1; j < nq; ++j) {
      RatMatrix commutator = action[i] * action[j] - action[j] * action[i];
      Vec bij = quotient.bracket_basis(i, j);
      RatMatrix expected(nh, nh);
      for (std::size_t k = 0; k < nq; ++k)
        if (bij[k] != 0) expected = expected + action[k] * bij[k];
      if (!(commutator == expected))
        throw ActionNotHomomorphism("action is not a homomorphism on pair (" +
                                    quotient.basis_labels()[i] + ", " +
                                    quotient.basis_labels()[j] + ")");
    }

  std::size_t total = nh + nq;
  LieAlgebra::StructureMap structure;
  for (const auto& [key, val] : kernel_alg.structure()) {
    Vec v(total);
    for (std::size_t k = 0; k < nh; ++k) v[k] = val[k];
    if (!vec_is_zero(v)) structure[key] = std::move(v);
  }
  for (const auto& [key, val] : quotient.structure()) {
    Vec v(total);
    for (std::size_t k = 0; k < nq; ++k) v[nh + k] = val[k];
    if (!vec_is_zero(v))
      structure[{key.first + nh, key.second + nh}] = std::move(v);
  }
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t q = 0; q < nq; ++q) {
      Vec img = action[q].col(h);  // [q, e_h] = action(q) e_h
      Vec v(total);
      for (std::size_t k = 0; k < nh; ++k) v[k] = -img[k];  // key is (h, q-index)
      if (!vec_is_zero(v)) structure[{h, nh + q}] = std::move(v);
    }

  LieAlgebra out(name.empty() ? kernel_alg.name() + "|x" + quotient.name() : name,
                 merged_labels(kernel_alg, quotient), std::move(structure));
  if (auto bad = out.jacobi_first_failure())
    throw JacobiFails((*bad)[0], (*bad)[1], (*bad)[2], "semidirect_sum");
  return out;
}

void DistributionProblem::validate() const {
  if (stabilizer.ambient_dim() != algebra.dim() ||
      plane.ambient_dim() != algebra.dim())
    throw std::invalid_argument("distribution problem: ambient mismatch");
  if (!algebra.is_subalgebra(stabilizer))
    throw std::invalid_argument("stabilizer is not a subalgebra");
  for (std::size_t i = 0; i < plane.dim(); ++i) {
    Vec reduced = stabilizer.reduce(plane.basis_vector(i));
    if (vec_is_zero(reduced))
      throw std::invalid_argument("plane meets the stabilizer");
  }
}

RatMatrix integrability_tensor(const DistributionProblem& p) {
  p.validate();
  Subspace vertical = p.stabilizer.sum(p.plane);
  std::size_t qdim = p.algebra.dim() - vertical.dim();
  std::size_t w = p.plane.dim();
  RatMatrix out(qdim, w * (w - 1) / 2);
  std::size_t col = 0;
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = a + 1; b < w; ++b, ++col) {
      Vec br = p.algebra.bracket(p.plane.basis_vector(a), p.plane.basis_vector(b));
      Vec q = quotient_coords(p.algebra.dim(), vertical, br);
      for (std::size_t r = 0; r < qdim; ++r) out(r, col) = q[r];
    }
  return out;
}

}  // namespace lie5
