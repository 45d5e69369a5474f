#include "lie5/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lie5 {

IntPolynomial::IntPolynomial(IntVec coeffs_low_to_high)
    : coeffs_(std::move(coeffs_low_to_high)) {
  if (coeffs_.size() < 2)
    throw std::invalid_argument("polynomial degree must be >= 1");
  if (coeffs_.back() != 1)
    throw std::invalid_argument("polynomial must be monic");
}

IntPolynomial IntPolynomial::from_high(std::initializer_list<long long> high_to_low) {
  IntVec c;
  for (auto it = std::rbegin(high_to_low); it != std::rend(high_to_low); ++it)
    c.emplace_back(*it);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return eval(x).sign(); }

IntPolynomial IntPolynomial::reciprocal() const {
  if (coeffs_.front() != 1 && coeffs_.front() != -1)
    throw std::invalid_argument("reciprocal requires constant term +-1");
  IntVec r(coeffs_.rbegin(), coeffs_.rend());
  if (r.back() < 0)
    for (auto& c : r) c = -c;
  return IntPolynomial(std::move(r));
}

bool IntPolynomial::operator<(const IntPolynomial& rhs) const {
  return coeffs_ < rhs.coeffs_;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    BigInt a = abs(coeffs_[i]);
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IntVec poly_derivative(const IntVec& p) {
  IntVec d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigInt(i));
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntVec& p) {
  RatPoly out;
  for (const auto& c : p) out.emplace_back(c);
  trim(out);
  return out;
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int rp_sign_at_inf(const RatPoly& p, bool positive) {
  if (p.empty()) return 0;
  int lead = p.back().sign();
  if (positive) return lead;
  return (p.size() - 1) % 2 == 0 ? lead : -lead;
}

// Remainder of num by den (in place semantics: returns the remainder).
RatPoly rp_rem(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw std::invalid_argument("division by zero polynomial");
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    Rational f = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  return num;
}

// Exact quotient num / den; throws unless the division is exact.
RatPoly rp_div_exact(RatPoly num, const RatPoly& den) {
  trim(num);
  if (num.size() < den.size())
    throw std::logic_error("rp_div_exact: degree too small");
  RatPoly q(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational f = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::logic_error("rp_div_exact: non-exact division");
  return q;
}

IntVec primitive_from_rat(const RatPoly& p) {
  BigInt den = 1;
  for (const auto& c : p) den = den / gcd(den, denominator(c)) * denominator(c);
  IntVec z;
  for (const auto& c : p) z.push_back(numerator(c) * (den / denominator(c)));
  BigInt content = 0;
  for (const auto& c : z) content = gcd(content, c);
  content = abs(content);
  if (content != 0)
    for (auto& c : z) c /= content;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  if (z.empty()) z.push_back(0);
  return z;
}

struct Chain {
  std::vector<RatPoly> polys;

  int variations(const std::optional<Rational>& x, bool neg_inf = false) const {
    int v = 0, last = 0;
    for (const auto& q : polys) {
      int s = neg_inf ? rp_sign_at_inf(q, false)
                      : (x ? rp_eval(q, *x).sign() : rp_sign_at_inf(q, true));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
};

RatPoly rp_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
  trim(d);
  return d;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Chain sturm_chain_of(const IntVec& p) {
  RatPoly f = to_rat(p);
  RatPoly g = rp_gcd(f, rp_derivative(f));
  if (g.size() > 1) f = rp_div_exact(f, g);  // squarefree deflation
  Chain chain;
  chain.polys.push_back(f);
  RatPoly d = rp_derivative(f);
  if (!d.empty()) chain.polys.push_back(d);
  while (chain.polys.back().size() > 1) {
    RatPoly r = rp_rem(chain.polys[chain.polys.size() - 2], chain.polys.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.polys.push_back(std::move(r));
  }
  return chain;
}

}  // namespace

IntVec poly_gcd(const IntVec& a, const IntVec& b) {
  return primitive_from_rat(rp_gcd(to_rat(a), to_rat(b)));
}

IntVec poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_gcd(a.coeffs(), b.coeffs());
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntVec g = poly_gcd(p.coeffs(), poly_derivative(p.coeffs()));
  if (g.size() == 1) return p;
  RatPoly q = rp_div_exact(to_rat(p.coeffs()), to_rat(g));
  // p monic and g primitive with positive lead force lc(g) = 1, so q is a
  // monic integer polynomial.
  IntVec z;
  for (const auto& c : q) {
    if (denominator(c) != 1)
      throw std::logic_error("squarefree_part: non-integer quotient");
    z.push_back(numerator(c));
  }
  return IntPolynomial(std::move(z));
}

int sturm_count(const IntVec& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  Chain s = sturm_chain_of(p);
  int vlo = lo ? s.variations(lo) : s.variations(std::nullopt, true);
  int vhi = s.variations(hi);
  return vlo - vhi;
}

int sturm_count(const IntPolynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  return sturm_count(p.coeffs(), lo, hi);
}

BigInt resultant(const IntVec& pv, const IntVec& qv) {
  IntVec p = pv, q = qv;
  while (!p.empty() && p.back() == 0) p.pop_back();
  while (!q.empty() && q.back() == 0) q.pop_back();
  if (p.empty() || q.empty()) return 0;
  std::size_t n = p.size() - 1, m = q.size() - 1;
  std::size_t size = n + m;
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) a[r][r + n - i] = p[i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) a[m + r][r + m - i] = q[i];

  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < size && a[s][k] == 0) ++s;
      if (s == size) return 0;
      std::swap(a[k], a[s]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < size; ++i)
      for (std::size_t j = k + 1; j < size; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sgn == 1 ? a[size - 1][size - 1] : -a[size - 1][size - 1];
}

BigInt discriminant(const IntPolynomial& p) {
  BigInt res = resultant(p.coeffs(), poly_derivative(p.coeffs()));
  std::size_t n = p.degree();
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

std::vector<RootInterval> isolate_positive_roots(const IntPolynomial& p) {
  IntPolynomial sf = squarefree_part(p);
  Chain s = sturm_chain_of(sf.coeffs());
  auto count = [&](const Rational& lo, const Rational& hi) {
    return s.variations(lo) - s.variations(hi);
  };
  // Cauchy bound: all roots satisfy |x| <= 1 + max |c_i| for monic p.
  BigInt maxc = 0;
  for (const auto& c : sf.coeffs()) maxc = std::max(maxc, BigInt(abs(c)));
  Rational bound = Rational(maxc + 1);

  std::vector<RootInterval> out;
  std::vector<RootInterval> stack{{Rational(0), bound}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int c = count(iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1 && sf.sign_at(iv.lo) != 0 && sf.sign_at(iv.hi) != 0 &&
        sf.sign_at(iv.lo) != sf.sign_at(iv.hi)) {
      out.push_back(iv);
      continue;
    }
    Rational mid = iv.mid();
    if (sf.sign_at(mid) == 0)
      throw std::logic_error("isolate_positive_roots: rational root hit");
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval bisect_once(const IntPolynomial& p, const RootInterval& iv) {
  Rational mid = iv.mid();
  int sm = p.sign_at(mid);
  if (sm == 0) throw std::logic_error("bisect_once: rational root hit");
  if (sm == p.sign_at(iv.lo)) return {mid, iv.hi};
  return {iv.lo, mid};
}

}  // namespace lie5
