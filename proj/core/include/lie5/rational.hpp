#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lie5 {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den > 0
// after every operation, which is exactly the normalization we rely on.
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;

// Parses "p", "-p", "p/q" (q > 0 after normalization).
Rational rat_from_string(const std::string& s);

// Canonical form: "p" if q = 1, else "p/q".
std::string rat_to_string(const Rational& r);

int sign(const Rational& r);
int sign(const BigInt& z);

BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace lie5
