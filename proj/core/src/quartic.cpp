#include "lie5/quartic.hpp"

#include "lie5/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

namespace lie5 {

namespace {

// Nudge outward by a few ulps to absorb the rounding of the last operation.
double down(double x) {
  for (int i = 0; i < 3; ++i) x = std::nextafter(x, -HUGE_VAL);
  return x;
}
double up(double x) {
  for (int i = 0; i < 3; ++i) x = std::nextafter(x, HUGE_VAL);
  return x;
}

double rat_to_double_low(const Rational& r) {
  double d = static_cast<double>(r);
  while (Rational(d) > r) d = std::nextafter(d, -HUGE_VAL);
  return d;
}

double rat_to_double_high(const Rational& r) {
  double d = static_cast<double>(r);
  while (Rational(d) < r) d = std::nextafter(d, HUGE_VAL);
  return d;
}

}  // namespace

DInterval dinterval_of(const Rational& lo, const Rational& hi) {
  return {rat_to_double_low(lo), rat_to_double_high(hi)};
}

DInterval dinterval_log(const DInterval& x) {
  if (x.lo <= 0) throw std::invalid_argument("log of non-positive interval");
  return {down(std::log(x.lo)), up(std::log(x.hi))};
}

DInterval dinterval_add(const DInterval& a, const DInterval& b) {
  return {down(a.lo + b.lo), up(a.hi + b.hi)};
}

DInterval dinterval_sub(const DInterval& a, const DInterval& b) {
  return {down(a.lo - b.hi), up(a.hi - b.lo)};
}

DInterval dinterval_div(const DInterval& a, const DInterval& b) {
  if (b.lo <= 0 && b.hi >= 0)
    throw std::invalid_argument("division by interval containing zero");
  double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

DInterval dinterval_abs(const DInterval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return {-a.hi, -a.lo};
  return {0, std::max(-a.lo, a.hi)};
}

namespace {

bool is_unit_quartic(const IntPolynomial& p) {
  return p.degree() == 4 && p.coeff(0) == 1;
}

// Integer roots of t^2 - s t + q exist iff s^2 - 4q is a perfect square of
// matching parity.
bool has_integer_quadratic_roots(const BigInt& s, const BigInt& q) {
  BigInt disc = s * s - 4 * q;
  if (disc < 0) return false;
  BigInt root = sqrt(disc);
  if (root * root != disc) return false;
  return (s + root) % 2 == 0;
}

}  // namespace

bool is_irreducible_unit_quartic(const IntPolynomial& p) {
  if (!is_unit_quartic(p))
    throw std::invalid_argument("expected a monic quartic with constant term 1");
  const BigInt& a = p.coeff(3);
  const BigInt& b = p.coeff(2);
  const BigInt& c = p.coeff(1);
  // Rational roots can only be +-1.
  if (p.eval(BigInt(1)) == 0 || p.eval(BigInt(-1)) == 0) return false;
  // (x^2+ux+1)(x^2+vx+1): c = a, u+v = a, uv = b-2.
  if (c == a && has_integer_quadratic_roots(a, b - 2)) return false;
  // (x^2+ux-1)(x^2+vx-1): c = -a, u+v = a, uv = b+2.
  if (c == -a && has_integer_quadratic_roots(a, b + 2)) return false;
  return true;
}

bool is_model_quartic(const IntPolynomial& p) {
  if (!is_unit_quartic(p))
    throw std::invalid_argument("expected a monic quartic with constant term 1");
  if (!is_irreducible_unit_quartic(p)) return false;
  if (discriminant(p) >= 0) return false;
  // disc < 0: exactly two simple real roots; certify positivity by Sturm.
  int positive = sturm_count(p, Rational(0), std::nullopt);
  int nonpositive = sturm_count(p, std::nullopt, Rational(0));
  bool sturm_positive = positive == 2 && nonpositive == 0;
  bool shortcut = p.coeff(3) + p.coeff(1) < 0;
  if (sturm_positive != shortcut)
    throw std::logic_error("a+c<0 shortcut disagrees with Sturm on " +
                           p.to_string());
  return sturm_positive;
}

namespace {

constexpr int kMaxRefine = 400;

ModelQuarticResult parameter_impl(const IntPolynomial& p, double tol) {
  ModelQuarticResult out;
  out.poly = p;
  out.disc = discriminant(p);

  if (p.coeff(3) == p.coeff(1)) {
    // Palindrome: roots come in reciprocal pairs, phi1 phi2 = 1.
    out.status = QuarticStatus::degenerate_reciprocal;
    return out;
  }

  auto roots = isolate_positive_roots(p);
  if (roots.size() != 2)
    throw std::logic_error("geometry_parameter: expected two positive roots");
  RootInterval r1 = roots[0], r2 = roots[1];

  // Refine to relative width <= tol before the first interval evaluation.
  auto narrow_enough = [&](const RootInterval& r) {
    return r.width() <= Rational(tol) * r.lo;
  };
  int steps = 0;
  while ((!narrow_enough(r1) || !narrow_enough(r2)) && steps < kMaxRefine) {
    if (!narrow_enough(r1)) r1 = bisect_once(p, r1);
    if (!narrow_enough(r2)) r2 = bisect_once(p, r2);
    ++steps;
  }

  auto evaluate = [&]() {
    DInterval l1 = dinterval_log(dinterval_of(r1.lo, r1.hi));
    DInterval l2 = dinterval_log(dinterval_of(r2.lo, r2.hi));
    return dinterval_abs(
        dinterval_div(dinterval_sub(l1, l2), dinterval_add(l1, l2)));
  };

  // Tolerance is relative to the parameter magnitude (and absolute below 1);
  // near the excluded values {0, 1, 2} this is an absolute tol.
  auto tight = [&](const DInterval& iv) {
    double scale = std::max(1.0, std::max(std::fabs(iv.lo), std::fabs(iv.hi)));
    return iv.width() < tol * scale;
  };
  DInterval a = evaluate();
  while (!tight(a) && steps < kMaxRefine) {
    r1 = bisect_once(p, r1);
    r2 = bisect_once(p, r2);
    ++steps;
    a = evaluate();
  }
  if (!tight(a)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", a.width());
    throw PrecisionExhausted("parameter interval stuck at width " +
                             std::string(buf) + " for " + p.to_string());
  }

  out.phi1_interval = r1;
  out.phi2_interval = r2;
  out.phi1 = dinterval_of(r1.lo, r1.hi).mid();
  out.phi2 = dinterval_of(r2.lo, r2.hi).mid();
  out.parameter_interval = a;
  out.parameter_a = a.mid();
  out.certified = true;

  for (double k : {0.0, 1.0, 2.0}) {
    if (a.lo < k + tol && a.hi > k - tol) {
      out.status = QuarticStatus::degenerate_near_boundary;
      return out;
    }
  }
  out.status = QuarticStatus::ok;
  return out;
}

}  // namespace

ModelQuarticResult geometry_parameter_status(const IntPolynomial& p, double tol) {
  if (!is_model_quartic(p))
    throw std::invalid_argument("geometry_parameter requires a model quartic");
  return parameter_impl(p, tol);
}

ModelQuarticResult geometry_parameter(const IntPolynomial& p, double tol) {
  ModelQuarticResult r = geometry_parameter_status(p, tol);
  if (r.status == QuarticStatus::degenerate_reciprocal)
    throw DegenerateParameter("reciprocal polynomial: phi1 phi2 = 1 for " +
                              p.to_string());
  if (r.status == QuarticStatus::degenerate_near_boundary)
    throw DegenerateParameter("parameter within tolerance of {0, 1, 2} for " +
                              p.to_string());
  return r;
}

namespace {

long long height_of(const IntPolynomial& p) {
  BigInt h = 0;
  for (const auto& c : p.coeffs()) h = std::max(h, BigInt(abs(c)));
  return h.convert_to<long long>();
}

// Stable representative choice: smaller coefficient height first (so results
// of a search at height h survive at height h+1), lexicographic after that.
bool preferred(const IntPolynomial& a, const IntPolynomial& b) {
  long long ha = height_of(a), hb = height_of(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

SearchResult model_quartic_search(int height, double tol, double dedup_tol,
                                  int threads) {
  if (height < 0) throw std::invalid_argument("height must be >= 0");

  auto scan = [&](long long a_from, long long a_to) {
    SearchResult part;
    for (long long a = a_from; a <= a_to; ++a)
      for (long long b = -height; b <= height; ++b)
        for (long long c = -height; c <= height; ++c) {
          IntPolynomial p(IntVec{BigInt(1), BigInt(c), BigInt(b), BigInt(a), BigInt(1)});
          if (!is_model_quartic(p)) continue;
          ModelQuarticResult r = geometry_parameter_status(p, tol);
          if (r.status == QuarticStatus::ok)
            part.hits.push_back(std::move(r));
          else
            part.degenerate.push_back(std::move(r));
        }
    return part;
  };

  SearchResult all;
  if (threads <= 1) {
    all = scan(-height, height);
  } else {
    std::vector<std::future<SearchResult>> futures;
    long long span = 2 * static_cast<long long>(height) + 1;
    long long chunk = (span + threads - 1) / threads;
    for (long long lo = -height; lo <= height; lo += chunk)
      futures.push_back(std::async(std::launch::async, scan, lo,
                                   std::min<long long>(lo + chunk - 1, height)));
    for (auto& f : futures) {
      SearchResult part = f.get();
      for (auto& h : part.hits) all.hits.push_back(std::move(h));
      for (auto& d : part.degenerate) all.degenerate.push_back(std::move(d));
    }
  }

  auto by_parameter = [](const ModelQuarticResult& x, const ModelQuarticResult& y) {
    if (x.parameter_a != y.parameter_a) return x.parameter_a < y.parameter_a;
    return x.poly < y.poly;
  };
  std::sort(all.hits.begin(), all.hits.end(), by_parameter);
  std::sort(all.degenerate.begin(), all.degenerate.end(),
            [](const ModelQuarticResult& x, const ModelQuarticResult& y) {
              return x.poly < y.poly;
            });

  // Cluster by parameter and keep the preferred representative per cluster.
  SearchResult dedup;
  std::size_t i = 0;
  while (i < all.hits.size()) {
    std::size_t j = i + 1;
    std::size_t best = i;
    while (j < all.hits.size() &&
           all.hits[j].parameter_a - all.hits[j - 1].parameter_a < dedup_tol) {
      if (preferred(all.hits[j].poly, all.hits[best].poly)) best = j;
      ++j;
    }
    dedup.hits.push_back(all.hits[best]);
    i = j;
  }
  dedup.degenerate = std::move(all.degenerate);
  return dedup;
}

std::vector<IntPolynomial> galois_obstruction_search(int height, int threads) {
  if (height < 0) throw std::invalid_argument("height must be >= 0");

  auto candidate = [](const IntPolynomial& p) {
    // Exactly two distinct real roots, both positive, neither equal to 1.
    if (p.eval(BigInt(1)) == 0) return false;
    if (sturm_count(p, std::nullopt, std::nullopt) != 2) return false;
    if (sturm_count(p, Rational(0), std::nullopt) != 2) return false;
    // Pairing r2 = r1^-3: common roots of p(x) and x^12 p(x^-3), decided
    // exactly by the gcd.
    IntVec g(13, BigInt(0));
    g[0] = p.coeff(4);  // = 1
    g[3] = p.coeff(3);
    g[6] = p.coeff(2);
    g[9] = p.coeff(1);
    g[12] = p.coeff(0);  // = 1
    IntVec common = poly_gcd(p.coeffs(), g);
    if (common.size() <= 1) return false;
    // The shared root must be positive (it is automatically != 1 since
    // p(1) != 0 and the gcd divides p).
    return sturm_count(common, Rational(0), std::nullopt) > 0;
  };

  auto scan = [&](long long a_from, long long a_to) {
    std::vector<IntPolynomial> part;
    for (long long a = a_from; a <= a_to; ++a)
      for (long long b = -height; b <= height; ++b)
        for (long long c = -height; c <= height; ++c) {
          IntPolynomial p(IntVec{BigInt(1), BigInt(c), BigInt(b), BigInt(a), BigInt(1)});
          if (candidate(p)) part.push_back(std::move(p));
        }
    return part;
  };

  std::vector<IntPolynomial> out;
  if (threads <= 1) {
    out = scan(-height, height);
  } else {
    std::vector<std::future<std::vector<IntPolynomial>>> futures;
    long long span = 2 * static_cast<long long>(height) + 1;
    long long chunk = (span + threads - 1) / threads;
    for (long long lo = -height; lo <= height; lo += chunk)
      futures.push_back(std::async(std::launch::async, scan, lo,
                                   std::min<long long>(lo + chunk - 1, height)));
    for (auto& f : futures)
      for (auto& p : f.get()) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lie5
