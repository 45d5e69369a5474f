#include "lie5/derivations.hpp"

#include <stdexcept>

namespace lie5 {

Vec flatten(const RatMatrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

RatMatrix unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("unflatten size mismatch");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

DerivationAlgebra derivation_algebra(const LieAlgebra& L) {
  std::size_t n = L.dim();
  // Unknowns d_{pq} (D e_q = sum_p d_{pq} e_p), flattened row-major.
  // For each i < j and each coordinate r:
  //   sum_k c_{ij}^k d_{rk} - sum_p (c_{pj}^r d_{pi} + c_{ip}^r d_{pj}) = 0.
  std::size_t pairs = n * (n - 1) / 2;
  RatMatrix sys(pairs * n, n * n);
  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec cij = L.bracket_basis(i, j);
      for (std::size_t r = 0; r < n; ++r, ++eq) {
        for (std::size_t k = 0; k < n; ++k)
          if (cij[k] != 0) sys(eq, r * n + k) += cij[k];
        for (std::size_t p = 0; p < n; ++p) {
          Vec cpj = L.bracket_basis(p, j);
          if (cpj[r] != 0) sys(eq, p * n + i) -= cpj[r];
          Vec cip = L.bracket_basis(i, p);
          if (cip[r] != 0) sys(eq, p * n + j) -= cip[r];
        }
      }
    }

  DerivationAlgebra out;
  out.algebra = L;
  Subspace der = kernel(sys);
  out.der_dim = der.dim();
  for (std::size_t i = 0; i < der.dim(); ++i)
    out.der_basis.push_back(unflatten(der.basis_vector(i), n));

  std::vector<Vec> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(flatten(L.adjoint_basis(i)));
  out.inner = Subspace::span(n * n, ad);
  out.inner_dim = out.inner.dim();
  out.outer_dim = out.der_dim - out.inner_dim;

  // Image of {D in der : tr D = 0} in out(g).
  std::vector<Vec> traceless;
  std::size_t with_trace = der.dim();  // index of a basis derivation with tr != 0
  for (std::size_t i = 0; i < der.dim(); ++i)
    if (out.der_basis[i].trace() == 0)
      traceless.push_back(der.basis_vector(i));
    else if (with_trace == der.dim())
      with_trace = i;
    else {
      // Combine with the first trace-carrying basis element to stay in the
      // trace-zero hyperplane.
      Rational f = out.der_basis[i].trace() / out.der_basis[with_trace].trace();
      traceless.push_back(
          vec_sub(der.basis_vector(i), vec_scale(f, der.basis_vector(with_trace))));
    }
  Subspace t = Subspace::span(n * n, traceless);
  out.traceless_outer_dim = t.sum(out.inner).dim() - out.inner_dim;
  return out;
}

std::pair<std::size_t, std::size_t> traceless_outer_dims(const LieAlgebra& L) {
  DerivationAlgebra d = derivation_algebra(L);
  return {d.outer_dim, d.traceless_outer_dim};
}

std::vector<RatMatrix> outer_representatives(const DerivationAlgebra& d) {
  std::size_t n = d.algebra.dim();
  std::vector<Vec> reduced;
  for (const auto& m : d.der_basis) reduced.push_back(d.inner.reduce(flatten(m)));
  Subspace quotient_span = Subspace::span(n * n, reduced);
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < quotient_span.dim(); ++i)
    out.push_back(unflatten(quotient_span.basis_vector(i), n));
  return out;
}

Vec outer_bracket(const DerivationAlgebra& d, const RatMatrix& a,
                  const RatMatrix& b) {
  return d.inner.reduce(flatten(a * b - b * a));
}

bool preserves_filtration(const RatMatrix& d, const std::vector<Subspace>& chain) {
  for (const auto& term : chain)
    for (std::size_t i = 0; i < term.dim(); ++i)
      if (!term.contains(d.apply(term.basis_vector(i)))) return false;
  return true;
}

namespace {

// Minimal polynomial criterion: D != 0 and D^3 = -c D with c rational > 0,
// with D^2 != -c I allowed (the zero eigenvalue block may be absent).
bool is_equal_rate_rotation(const RatMatrix& d) {
  std::size_t n = d.rows();
  if (d.is_zero()) return false;
  RatMatrix d2 = d * d;
  RatMatrix d3 = d2 * d;
  // Solve d3 = -c d for a single scalar c.
  Rational c;
  bool have_c = false;
  for (std::size_t i = 0; i < n && !have_c; ++i)
    for (std::size_t j = 0; j < n && !have_c; ++j)
      if (d(i, j) != 0) {
        c = -d3(i, j) / d(i, j);
        have_c = true;
      }
  if (!have_c || c <= 0) return false;
  return d3 == d * (-c);
}

}  // namespace

std::vector<RatMatrix> so2_in_derivations(const LieAlgebra& L) {
  std::size_t n = L.dim();
  DerivationAlgebra der = derivation_algebra(L);
  // Intersect der with skew-symmetric matrices: append the symmetry
  // constraints d_{ij} + d_{ji} = 0 to the derivation conditions.
  std::vector<Vec> gens;
  for (const auto& m : der.der_basis) gens.push_back(flatten(m));
  Subspace der_space = Subspace::span(n * n, gens);

  RatMatrix sym(n * (n + 1) / 2, n * n);
  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++eq) {
      sym(eq, i * n + j) += 1;
      sym(eq, j * n + i) += 1;
    }

  // Solve the symmetry constraints within der's coordinates.
  std::vector<Vec> inter;
  if (der_space.dim() > 0) {
    // Rows of system: for each symmetric constraint, its action on der basis.
    RatMatrix constraints(sym.rows(), der_space.dim());
    for (std::size_t r = 0; r < sym.rows(); ++r)
      for (std::size_t b = 0; b < der_space.dim(); ++b) {
        Rational v;
        Vec basis = der_space.basis_vector(b);
        for (std::size_t c = 0; c < n * n; ++c)
          if (sym(r, c) != 0) v += sym(r, c) * basis[c];
        constraints(r, b) = v;
      }
    Subspace coeffs = kernel(constraints);
    for (std::size_t i = 0; i < coeffs.dim(); ++i) {
      Vec combo(n * n);
      Vec c = coeffs.basis_vector(i);
      for (std::size_t b = 0; b < der_space.dim(); ++b)
        if (c[b] != 0)
          combo = vec_add(combo, vec_scale(c[b], der_space.basis_vector(b)));
      inter.push_back(combo);
    }
  }
  Subspace candidates = Subspace::span(n * n, inter);

  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < candidates.dim(); ++i) {
    RatMatrix d = unflatten(candidates.basis_vector(i), n);
    if (is_equal_rate_rotation(d)) out.push_back(d);
  }
  return out;
}

}  // namespace lie5
