#pragma once

#include "lie5/lie_algebra.hpp"

#include <vector>

namespace lie5 {

// der(g), ad(g) and the dimensions derived from them. Matrices are n x n
// and flattenings are row-major, so `inner` and `traceless_outer` live in
// Q^(n^2).
struct DerivationAlgebra {
  LieAlgebra algebra;
  std::vector<RatMatrix> der_basis;
  Subspace inner;  // span{ad e_i} inside Q^(n^2)
  std::size_t der_dim = 0;
  std::size_t inner_dim = 0;
  std::size_t outer_dim = 0;
  std::size_t traceless_outer_dim = 0;
};

Vec flatten(const RatMatrix& m);
RatMatrix unflatten(const Vec& v, std::size_t n);

// Solves the Leibniz linear system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j].
DerivationAlgebra derivation_algebra(const LieAlgebra& L);

// (outer_dim, traceless_outer_dim); the latter is the dimension of the image
// of the traceless derivations in out(g).
std::pair<std::size_t, std::size_t> traceless_outer_dims(const LieAlgebra& L);

// Representatives of a basis of out(g): derivations reduced modulo inner.
std::vector<RatMatrix> outer_representatives(const DerivationAlgebra& d);

// Commutator of two derivations reduced modulo inner derivations, i.e. the
// bracket of out(g) computed on representatives.
Vec outer_bracket(const DerivationAlgebra& d, const RatMatrix& a,
                  const RatMatrix& b);

// True iff D maps each term of the chain into itself.
bool preserves_filtration(const RatMatrix& d, const std::vector<Subspace>& chain);

// Candidate compact directions: derivations whose minimal polynomial is
// x^2 + c or x (x^2 + c) for a single rational c > 0, i.e. semisimple with
// spectrum {0, +-i sqrt(c)} (rotation at equal rates on all non-fixed
// planes). The search space is der(L) intersected with the skew-symmetric
// matrices in the stored basis; each RREF basis vector of that space is
// tested against the minimal-polynomial criterion.
std::vector<RatMatrix> so2_in_derivations(const LieAlgebra& L);

}  // namespace lie5
