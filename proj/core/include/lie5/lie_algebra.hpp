#pragma once

#include "lie5/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lie5 {

// Finite-dimensional Lie algebra over Q given by structure constants:
// [e_i, e_j] = sum_k c_{ij}^k e_k. Constants are stored sparsely for i < j
// only; antisymmetry holds by construction, so Jacobi is the one runtime
// check. Immutable after construction.
class LieAlgebra {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // i < j
  using StructureMap = std::map<Key, Vec>;          // value: length-n vector

  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             StructureMap structure);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const StructureMap& structure() const { return structure_; }
  std::optional<std::size_t> label_index(const std::string& label) const;

  // [e_i, e_j] for arbitrary i, j (antisymmetric, zero on the diagonal).
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& u, const Vec& v) const;

  // Matrix of ad e_i acting on column vectors.
  RatMatrix adjoint_basis(std::size_t i) const;
  RatMatrix adjoint(const Vec& u) const;

  bool jacobi_check() const;
  // First failing triple i < j < k, if any.
  std::optional<std::array<std::size_t, 3>> jacobi_first_failure() const;

  Subspace center() const;
  std::vector<Subspace> derived_series() const;
  std::vector<Subspace> lower_central_series() const;
  bool is_nilpotent() const;
  bool is_solvable() const;
  bool is_ideal(const Subspace& s) const;
  bool is_subalgebra(const Subspace& s) const;
  bool is_unimodular() const;

  // [S, T] as a subspace (span of brackets of basis vectors).
  Subspace bracket_subspaces(const Subspace& s, const Subspace& t) const;

  LieAlgebra renamed(std::string new_name) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  StructureMap structure_;
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Semidirect sum h >| q: the action maps each basis element of q to a
// derivation of h. Validates the derivation property and that the action is
// a homomorphism q -> der(h); throws ActionNotDerivation /
// ActionNotHomomorphism otherwise. Basis order is kernel-first (h, then q),
// and the result is Jacobi-checked.
LieAlgebra semidirect_sum(const LieAlgebra& quotient, const LieAlgebra& kernel,
                          const std::vector<RatMatrix>& action,
                          const std::string& name = "");

bool is_derivation_of(const LieAlgebra& L, const RatMatrix& d);

// Algebraic model of an invariant distribution: a subalgebra g_p (the
// stabilizer) together with a plane W meeting it trivially.
struct DistributionProblem {
  LieAlgebra algebra;
  Subspace stabilizer;
  Subspace plane;

  void validate() const;  // stabilizer closed under bracket, W /\ g_p = 0
};

// The map Lambda^2 W -> g/(g_p + W) induced by the bracket. Columns are
// indexed by pairs (a < b) of plane basis vectors in lexicographic order;
// rows are quotient coordinates. Zero iff [W, W] lies in g_p + W.
RatMatrix integrability_tensor(const DistributionProblem& p);

}  // namespace lie5
