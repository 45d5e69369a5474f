#include "lie5/extensions.hpp"

#include "lie5/errors.hpp"

#include <algorithm>

namespace lie5 {

void ExtensionSpec::validate() const {
  std::size_t nq = quotient.dim(), nh = kernel.dim();
  if (action.size() != nq)
    throw ActionInvalid("need one action matrix per quotient basis element");
  for (std::size_t i = 0; i < nq; ++i)
    if (!is_derivation_of(kernel, action[i]))
      throw ActionNotDerivation("action of " + quotient.basis_labels()[i] +
                                " is not a derivation of the kernel");
  // Exact lift: the commutator defect of Thm-style lifts must vanish.
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = i + 1; j < nq; ++j) {
      RatMatrix defect = action[i] * action[j] - action[j] * action[i];
      Vec bij = quotient.bracket_basis(i, j);
      for (std::size_t k = 0; k < nq; ++k)
        if (bij[k] != 0) defect = defect - action[k] * bij[k];
      if (!defect.is_zero())
        throw ActionInvalid(
            "action lift has nonzero commutator defect on pair (" +
            quotient.basis_labels()[i] + ", " + quotient.basis_labels()[j] +
            "); only exact lifts are supported");
    }
  if (cocycle.degree() != 2)
    throw ActionInvalid("cocycle must have degree 2");
  if (cocycle.rep().algebra().dim() != nq ||
      cocycle.rep().module_dim() != nh)
    throw ActionInvalid("cocycle must be a 2-cochain on the quotient valued in the kernel");
  Subspace z = kernel.center();
  if (z.dim() < nh) {
    for (const auto& [t, v] : cocycle.coeffs())
      if (!z.contains(v))
        throw ActionInvalid(
            "non-abelian kernel: cocycle values must lie in the center");
  }
}

namespace {

RepPtr center_representation(const ExtensionSpec& spec, const Subspace& z) {
  std::size_t zdim = z.dim();
  // Action of q on Z(h) in the basis of z; derivations preserve the center.
  std::vector<RatMatrix> za;
  for (const auto& a : spec.action) {
    RatMatrix m(zdim, zdim);
    for (std::size_t j = 0; j < zdim; ++j) {
      Vec img = a.apply(z.basis_vector(j));
      auto coords = solve(z.basis().transpose(), img);
      if (!coords)
        throw ActionInvalid("action does not preserve the kernel center");
      for (std::size_t i = 0; i < zdim; ++i) m(i, j) = (*coords)[i];
    }
    za.push_back(std::move(m));
  }
  return std::make_shared<Representation>(spec.quotient, zdim, std::move(za));
}

}  // namespace

Cochain ExtensionSpec::cocycle_in_center() const {
  Subspace z = kernel.center();
  RepPtr zrep = center_representation(*this, z);
  Cochain out(zrep, 2);
  for (const auto& [t, v] : cocycle.coeffs()) {
    auto coords = solve(z.basis().transpose(), v);
    if (!coords)
      throw ActionInvalid("cocycle value outside the kernel center");
    out.set_value(t, *coords);
  }
  return out;
}

LieAlgebra build_extension(const ExtensionSpec& spec, const std::string& name) {
  spec.validate();
  std::size_t nh = spec.kernel.dim(), nq = spec.quotient.dim();
  std::size_t total = nh + nq;

  LieAlgebra::StructureMap structure;
  for (const auto& [key, val] : spec.kernel.structure()) {
    Vec v(total);
    for (std::size_t k = 0; k < nh; ++k) v[k] = val[k];
    if (!vec_is_zero(v)) structure[key] = std::move(v);
  }
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = i + 1; j < nq; ++j) {
      Vec v(total);
      Vec qpart = spec.quotient.bracket_basis(i, j);
      for (std::size_t k = 0; k < nq; ++k) v[nh + k] = qpart[k];
      Vec hpart = spec.cocycle.value({i, j});
      for (std::size_t k = 0; k < nh; ++k) v[k] = hpart[k];
      if (!vec_is_zero(v)) structure[{nh + i, nh + j}] = std::move(v);
    }
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t q = 0; q < nq; ++q) {
      Vec img = spec.action[q].col(h);
      Vec v(total);
      for (std::size_t k = 0; k < nh; ++k) v[k] = -img[k];
      if (!vec_is_zero(v)) structure[{h, nh + q}] = std::move(v);
    }

  std::vector<std::string> labels = spec.kernel.basis_labels();
  for (const auto& l : spec.quotient.basis_labels()) {
    std::string candidate = l;
    while (std::find(labels.begin(), labels.end(), candidate) != labels.end())
      candidate += "'";
    labels.push_back(candidate);
  }
  LieAlgebra out(name.empty() ? spec.kernel.name() + "." + spec.quotient.name()
                              : name,
                 std::move(labels), std::move(structure));
  if (auto bad = out.jacobi_first_failure())
    throw JacobiFails((*bad)[0], (*bad)[1], (*bad)[2], "build_extension");
  return out;
}

bool is_split(const ExtensionSpec& spec) {
  spec.validate();
  Cochain zc = spec.cocycle_in_center();
  return reduce_mod_coboundaries(zc).is_zero();
}

RatMatrix extension_isomorphism_for_cohomologous(const ExtensionSpec& spec,
                                                 const Cochain& beta) {
  if (beta.degree() != 1 || beta.rep().module_dim() != spec.kernel.dim())
    throw ActionInvalid("beta must be a kernel-valued 1-cochain on the quotient");
  std::size_t nh = spec.kernel.dim(), nq = spec.quotient.dim();
  RatMatrix phi = RatMatrix::identity(nh + nq);
  for (std::size_t q = 0; q < nq; ++q) {
    Vec b = beta.value({q});
    for (std::size_t h = 0; h < nh; ++h) phi(h, nh + q) = b[h];
  }
  return phi;
}

bool is_lie_isomorphism(const LieAlgebra& a, const LieAlgebra& b,
                        const RatMatrix& phi) {
  if (a.dim() != b.dim() || phi.rows() != a.dim() || phi.cols() != a.dim())
    return false;
  if (rank(phi) != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec lhs = phi.apply(a.bracket_basis(i, j));
      Vec rhs = b.bracket(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace lie5
