#pragma once

#include "lie5/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lie5 {

// Integer polynomial as a low-to-high coefficient vector (not necessarily
// monic); used for derivatives, gcds and Sturm internals.
using IntVec = std::vector<BigInt>;

// Monic polynomial with arbitrary-precision integer coefficients, stored
// low-to-high degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVec coeffs_low_to_high);
  static IntPolynomial from_high(std::initializer_list<long long> high_to_low);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const IntVec& coeffs() const { return coeffs_; }
  const BigInt& coeff(std::size_t i) const { return coeffs_[i]; }

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  // Reversed coefficients x^n p(1/x); requires constant term +-1 so the
  // result stays monic (after a global sign flip when the constant is -1).
  IntPolynomial reciprocal() const;

  bool operator==(const IntPolynomial& rhs) const = default;
  bool operator<(const IntPolynomial& rhs) const;  // lexicographic low-to-high
  std::string to_string() const;

 private:
  IntVec coeffs_;
};

IntVec poly_derivative(const IntVec& p);

// Gcd over Q normalized to a primitive integer polynomial with positive
// leading coefficient; {1} for coprime inputs.
IntVec poly_gcd(const IntVec& a, const IntVec& b);
IntVec poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// p divided by gcd(p, p'): same distinct roots, all simple. Monic in, monic out.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Exact number of distinct real roots in (lo, hi]; nullopt bounds mean
// -infinity / +infinity. Deflates to the squarefree part internally.
int sturm_count(const IntVec& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);
int sturm_count(const IntPolynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

// Resultant of p and q via fraction-free elimination of the Sylvester matrix.
BigInt resultant(const IntVec& p, const IntVec& q);

// (-1)^{n(n-1)/2} Res(p, p') / lc(p) for degree-n p.
BigInt discriminant(const IntPolynomial& p);

// Isolating interval with exact rational endpoints; p changes sign across it.
struct RootInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

// Isolating intervals for the distinct real roots of p in (0, +inf), sorted
// increasing. p must not vanish at the rational endpoints encountered
// (guaranteed for polynomials without rational roots).
std::vector<RootInterval> isolate_positive_roots(const IntPolynomial& p);

// Halves the interval, keeping the half containing the root.
RootInterval bisect_once(const IntPolynomial& p, const RootInterval& iv);

}  // namespace lie5
