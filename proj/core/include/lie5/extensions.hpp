#pragma once

#include "lie5/cohomology.hpp"
#include "lie5/lie_algebra.hpp"

namespace lie5 {

// Data for an extension 0 -> h -> e -> q -> 0: an action lift
// alpha: q -> der(h) (one matrix per q-basis element) and a 2-cocycle on q
// valued in h. Supported inputs: the lift must be an exact homomorphism
// (zero commutator defect), and for non-abelian h the cocycle must take
// values in Z(h). Inputs outside this range throw ActionInvalid.
struct ExtensionSpec {
  LieAlgebra quotient;
  LieAlgebra kernel;
  std::vector<RatMatrix> action;
  Cochain cocycle;  // degree 2 over quotient, values of length dim(kernel)

  void validate() const;

  // The cocycle rewritten over the Z(h)-valued representation induced by the
  // action (coordinates in the RREF basis of Z(h)).
  Cochain cocycle_in_center() const;
};

// Builds the algebra on h (+) q with bracket
//   [h1+q1, h2+q2] = [h1,h2] + q1 h2 - q2 h1 + c(q1,q2) + [q1,q2]_q,
// kernel coordinates first. Throws JacobiFails when the cocycle condition is
// violated, ActionInvalid on bad action data.
LieAlgebra build_extension(const ExtensionSpec& spec, const std::string& name = "");

// True iff the cocycle is a coboundary in H^2(q; Z(h)).
bool is_split(const ExtensionSpec& spec);

// For cocycles c and c + d(beta), the map (h, q) -> (h + beta(q), q) is an
// isomorphism from the extension built with c + d(beta) to the one built
// with c. Returns its matrix in the kernel-first basis.
RatMatrix extension_isomorphism_for_cohomologous(const ExtensionSpec& spec,
                                                 const Cochain& beta);

// True iff phi intertwines the brackets of a and b (and is invertible).
bool is_lie_isomorphism(const LieAlgebra& a, const LieAlgebra& b,
                        const RatMatrix& phi);

}  // namespace lie5
