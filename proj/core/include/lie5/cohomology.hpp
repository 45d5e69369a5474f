#pragma once

#include "lie5/lie_algebra.hpp"

#include <map>
#include <memory>
#include <vector>

namespace lie5 {

// A g-module M given by one action matrix per basis element of g.
// Validated at construction: rho([e_i,e_j]) = rho(e_i)rho(e_j) - rho(e_j)rho(e_i).
class Representation {
 public:
  Representation(LieAlgebra algebra, std::size_t module_dim,
                 std::vector<RatMatrix> action);

  static Representation trivial(const LieAlgebra& L, std::size_t module_dim = 1);
  static Representation adjoint(const LieAlgebra& L);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const RatMatrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<RatMatrix>& actions() const { return action_; }

  Vec act(std::size_t basis_index, const Vec& v) const {
    return action_[basis_index].apply(v);
  }

  bool operator==(const Representation& rhs) const;

 private:
  LieAlgebra algebra_;
  std::size_t module_dim_;
  std::vector<RatMatrix> action_;
};

using RepPtr = std::shared_ptr<const Representation>;

// Index tuples i_1 < ... < i_p in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n,
                                                        std::size_t p);
std::size_t binomial(std::size_t n, std::size_t k);

// Element of C^p(g, M): a map from strictly increasing index tuples to
// module vectors; absent tuples are zero.
class Cochain {
 public:
  Cochain(RepPtr rep, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const Representation& rep() const { return *rep_; }
  RepPtr rep_ptr() const { return rep_; }

  // Value on a basis tuple given in any order (sign adjusted); repeated
  // indices give zero.
  Vec value(std::vector<std::size_t> tuple) const;
  void set_value(std::vector<std::size_t> tuple, const Vec& v);
  void add_value(std::vector<std::size_t> tuple, const Vec& v);

  const std::map<std::vector<std::size_t>, Vec>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Flat coordinates over the lexicographic tuple basis, module coordinates
  // inner-most; length binomial(n, p) * m.
  Vec flat() const;
  static Cochain from_flat(RepPtr rep, std::size_t degree, const Vec& flat);

  Cochain operator+(const Cochain& rhs) const;
  Cochain operator-(const Cochain& rhs) const;
  Cochain scaled(const Rational& s) const;
  bool operator==(const Cochain& rhs) const;

 private:
  RepPtr rep_;
  std::size_t degree_;
  std::map<std::vector<std::size_t>, Vec> coeffs_;
};

// The Chevalley-Eilenberg boundary
//   (d c)(x_1..x_{p+1}) = sum_{i<j} (-1)^{i+j} c([x_i,x_j], .. ^i .. ^j ..)
//                       + sum_i (-1)^{i+1} x_i c(.. ^i ..).
Cochain boundary(const Cochain& c);

// Matrix of d_p : C^p -> C^{p+1} over the flat bases.
RatMatrix boundary_matrix(const RepPtr& rep, std::size_t degree);

std::size_t cohomology_dim(const RepPtr& rep, std::size_t degree);
std::vector<Cochain> cohomology_reps(const RepPtr& rep, std::size_t degree);

bool is_cocycle(const Cochain& c);

// Canonical representative of the class [c]: c reduced modulo the coboundary
// space, eliminating its pivot coordinates. Idempotent and class-invariant.
Cochain reduce_mod_coboundaries(const Cochain& c);

}  // namespace lie5
