#pragma once

#include "lie5/int_polynomial.hpp"

#include <vector>

namespace lie5 {

// Closed double interval with outward rounding; endpoints always bracket the
// exact value.
struct DInterval {
  double lo = 0, hi = 0;
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

DInterval dinterval_of(const Rational& lo, const Rational& hi);
DInterval dinterval_log(const DInterval& x);  // requires x.lo > 0
DInterval dinterval_add(const DInterval& a, const DInterval& b);
DInterval dinterval_sub(const DInterval& a, const DInterval& b);
DInterval dinterval_div(const DInterval& a, const DInterval& b);
DInterval dinterval_abs(const DInterval& a);

// True iff p is monic quartic with constant term 1 and has no factorization
// over Z: no root +-1 and no split into two monic integer quadratics with
// constant terms (1,1) or (-1,-1) (the only options by Gauss's lemma).
bool is_irreducible_unit_quartic(const IntPolynomial& p);

// Irreducible, discriminant < 0, and both real roots positive, certified by
// Sturm counts. The a+c<0 shortcut is evaluated alongside and any
// disagreement with the Sturm certification aborts (it is a theorem that
// they agree when disc < 0).
bool is_model_quartic(const IntPolynomial& p);

enum class QuarticStatus {
  ok,
  // |a - k| < tol for k in {0, 1, 2}: excluded by the a > 0, a != 1, a != 2
  // constraint at interval precision.
  degenerate_near_boundary,
  // Palindromic coefficients: the real roots are phi, 1/phi, the parameter
  // formula degenerates (log(phi1 phi2) = 0).
  degenerate_reciprocal,
};

struct ModelQuarticResult {
  IntPolynomial poly;
  RootInterval phi1_interval;  // phi1 <= phi2
  RootInterval phi2_interval;
  double phi1 = 0, phi2 = 0;      // interval midpoints
  DInterval parameter_interval;   // certified bounds for a
  double parameter_a = 0;         // midpoint
  BigInt disc;
  bool certified = false;
  QuarticStatus status = QuarticStatus::ok;
};

// Isolates the two positive roots by Sturm bisection to relative width
// <= tol and computes a = |ln phi1 - ln phi2| / |ln(phi1 phi2)| with
// certified interval bounds of width < tol. Throws DegenerateParameter when
// a is within tol of {0, 1, 2} or the polynomial is reciprocal, and
// PrecisionExhausted if the interval cannot be narrowed in the iteration
// budget.
ModelQuarticResult geometry_parameter(const IntPolynomial& p, double tol = 1e-12);

// Like geometry_parameter but reports degeneracies in the status field
// instead of throwing (used by the search so that excluded polynomials are
// reported, not dropped).
ModelQuarticResult geometry_parameter_status(const IntPolynomial& p,
                                             double tol = 1e-12);

struct SearchResult {
  std::vector<ModelQuarticResult> hits;        // status ok, sorted by parameter
  std::vector<ModelQuarticResult> degenerate;  // excluded, with status
};

// All monic quartics x^4 + a x^3 + b x^2 + c x + 1 with |a|,|b|,|c| <=
// height passing is_model_quartic. Hits are deduplicated by parameter
// (within dedup_tol; a polynomial and its reciprocal share a parameter) and
// sorted by parameter. `threads` > 1 partitions the a-coefficient range;
// results are merged deterministically.
SearchResult model_quartic_search(int height, double tol = 1e-12,
                                  double dedup_tol = 1e-9, int threads = 1);

// Monic integer quartics with constant term 1, exactly two real roots
// r1, r2 > 0 with r1^3 r2 = 1 (equivalently gcd(p(x), x^12 p(x^-3)) has a
// positive real root), and r1 != 1. The pairing is decided exactly via the
// gcd, so an empty result is a certificate.
std::vector<IntPolynomial> galois_obstruction_search(int height, int threads = 1);

}  // namespace lie5
