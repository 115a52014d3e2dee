#include "coxlab/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw InternalError("cyclotomic division degree underflow");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (const auto& c : num)
    if (c != 0) throw InternalError("cyclotomic division left a remainder");
  return quot;
}

Rational eval_poly(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + Rational(p[k]);
  return acc;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Euclidean division over Q; returns (quotient, remainder).
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly num, const RatPoly& den) {
  RatPoly quot;
  trim(num);
  if (num.size() < den.size()) return {quot, num};
  quot.assign(num.size() - den.size() + 1, 0);
  const Rational lead = den.back();
  for (std::size_t k = num.size(); k-- >= den.size();) {
    if (num[k] == 0) continue;
    const Rational c = num[k] / lead;
    quot[k - den.size() + 1] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[k - den.size() + 1 + i] -= c * den[i];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

Enclosure isolate_generator(const IntPoly& poly, unsigned conductor, unsigned bits) {
  const std::size_t deg = poly.size() - 1;
  Enclosure enc;
  if (deg == 1) {
    enc.lo = enc.hi = Rational(-poly[0]);
    enc.bits = bits;
    return enc;
  }
  // c0 is the largest root; every other root is at most 2cos(3pi/N).
  const double pi = std::acos(-1.0);
  const double c0 = 2.0 * std::cos(pi / conductor);
  const double next = 2.0 * std::cos(3.0 * pi / conductor);
  enc.lo = Rational(c0 - (c0 - next) / 2.0);
  enc.hi = 2;
  int sign_lo = sgn(eval_poly(poly, enc.lo));
  const int sign_hi = sgn(eval_poly(poly, enc.hi));
  if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi)
    throw InternalError("failed to isolate 2cos(pi/N) for N = " + std::to_string(conductor));
  Rational width = enc.hi - enc.lo;
  Rational target(1);
  target /= Rational(Integer(1) << bits);
  while (width > target) {
    Rational mid = (enc.lo + enc.hi) / 2;
    const int s = sgn(eval_poly(poly, mid));
    if (s == 0) {
      enc.lo = enc.hi = mid;
      break;
    }
    if (s == sign_lo) {
      enc.lo = mid;
    } else {
      enc.hi = mid;
    }
    width = enc.hi - enc.lo;
  }
  enc.bits = bits;
  if (enc.lo < 0) throw InternalError("generator enclosure not nonnegative");
  return enc;
}

std::vector<Rational> powers_of(const Rational& x, std::size_t count) {
  std::vector<Rational> out(count);
  Rational p = 1;
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = p;
    p *= x;
  }
  return out;
}

// Interval evaluation of sum_k q_k c^k with c >= 0, using precomputed powers.
std::pair<Rational, Rational> bound_form(const std::vector<Rational>& coeffs,
                                         const std::vector<Rational>& lo_pow,
                                         const std::vector<Rational>& hi_pow) {
  Rational lo = 0, hi = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int s = sgn(coeffs[k]);
    if (s == 0) continue;
    if (s > 0) {
      lo += coeffs[k] * lo_pow[k];
      hi += coeffs[k] * hi_pow[k];
    } else {
      lo += coeffs[k] * hi_pow[k];
      hi += coeffs[k] * lo_pow[k];
    }
  }
  return {lo, hi};
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z)) * (mpz_sgn(z) < 0 ? 31 : 17);
  if (mpz_size(z) > 0) hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z, 0)));
  return h;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw InvalidInputError("cyclotomic order must be positive");
  IntPoly num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    num = divide_exact(num, cyclotomic_polynomial(d));
  }
  trim(num);
  return num;
}

std::vector<Integer> fold_palindromic(const std::vector<Integer>& palindromic) {
  const std::size_t full = palindromic.size() - 1;
  if (full % 2 != 0) throw InternalError("palindromic fold needs even degree");
  const std::size_t half = full / 2;
  for (std::size_t i = 0; i <= full; ++i)
    if (palindromic[i] != palindromic[full - i]) throw InternalError("polynomial is not palindromic");

  // Laurent coefficients indexed by exponent + half.
  IntPoly laurent = palindromic;
  IntPoly folded(half + 1, 0);
  for (std::size_t k = half + 1; k-- > 0;) {
    const Integer c = laurent[half + k];
    folded[k] = c;
    if (c == 0) continue;
    // subtract c * (x + 1/x)^k
    Integer binom = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      laurent[half + k - 2 * i] -= c * binom;
      binom = binom * Integer(static_cast<unsigned long>(k - i)) / Integer(static_cast<unsigned long>(i + 1));
    }
  }
  for (const auto& r : laurent)
    if (r != 0) throw InternalError("palindromic fold left a remainder");
  return folded;
}

unsigned default_start_precision() {
  static const unsigned bits = [] {
    unsigned value = 64;
    if (const char* env = std::getenv("COXLAB_PRECISION_START")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && parsed > 0) value = static_cast<unsigned>(parsed);
    }
    return value < 8 ? 8u : value;
  }();
  return bits;
}

RingSpec::RingSpec(unsigned conductor, unsigned start_bits) {
  if (conductor < 2) throw InvalidInputError("ring conductor must be at least 2");
  auto data = std::make_shared<Data>();
  data->conductor = conductor;
  data->poly = fold_palindromic(cyclotomic_polynomial(2 * conductor));
  data->enclosure = isolate_generator(data->poly, conductor, start_bits < 8 ? 8 : start_bits);
  const std::size_t deg = data->poly.size() - 1;
  data->lo_powers = powers_of(data->enclosure.lo, deg);
  data->hi_powers = powers_of(data->enclosure.hi, deg);
  data_ = std::move(data);
}

Enclosure RingSpec::refine_enclosure(unsigned bits) const {
  const Enclosure& base = data_->enclosure;
  if (degree() == 1 || bits <= base.bits) return base;
  Enclosure enc = base;
  const int sign_lo = sgn(eval_poly(data_->poly, enc.lo));
  Rational target(1);
  target /= Rational(Integer(1) << bits);
  while (enc.hi - enc.lo > target) {
    Rational mid = (enc.lo + enc.hi) / 2;
    const int s = sgn(eval_poly(data_->poly, mid));
    if (s == 0) {
      enc.lo = enc.hi = mid;
      break;
    }
    (s == sign_lo ? enc.lo : enc.hi) = mid;
  }
  enc.bits = bits;
  return enc;
}

RingSpec build_ring(const std::vector<std::vector<int>>& coxeter_matrix) {
  unsigned long n = 0;
  for (std::size_t i = 0; i < coxeter_matrix.size(); ++i)
    for (std::size_t j = 0; j < coxeter_matrix[i].size(); ++j) {
      if (i == j) continue;
      const int m = coxeter_matrix[i][j];
      if (m < 0) throw InvalidInputError("negative Coxeter matrix entry");
      if (m == 0) continue;
      n = n == 0 ? static_cast<unsigned long>(m) : std::lcm(n, static_cast<unsigned long>(m));
    }
  if (n == 0) n = 2;
  return RingSpec(static_cast<unsigned>(n));
}

Scalar::Scalar(RingSpec ring) : ring_(std::move(ring)), coeffs_(ring_.degree(), 0) {}

Scalar::Scalar(RingSpec ring, const Rational& value) : Scalar(std::move(ring)) {
  coeffs_[0] = value;
}

Scalar::Scalar(RingSpec ring, std::vector<Rational> coeffs) : ring_(std::move(ring)) {
  const auto& poly = ring_.defining_poly();
  const std::size_t deg = ring_.degree();
  // reduce modulo the monic defining polynomial
  for (std::size_t k = coeffs.size(); k-- > deg;) {
    if (coeffs[k] == 0) continue;
    const Rational c = coeffs[k];
    for (std::size_t i = 0; i <= deg; ++i) coeffs[k - deg + i] -= c * Rational(poly[i]);
  }
  coeffs.resize(deg, 0);
  for (auto& c : coeffs) c.canonicalize();
  coeffs_ = std::move(coeffs);
}

Scalar Scalar::generator(const RingSpec& ring) {
  std::vector<Rational> c(2, 0);
  c[1] = 1;
  return Scalar(ring, std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

int Scalar::sign() const {
  if (is_rational()) return sgn(coeffs_[0]);
  const auto& data = *ring_.data_;
  auto [lo, hi] = bound_form(coeffs_, data.lo_powers, data.hi_powers);
  unsigned bits = data.enclosure.bits;
  while (true) {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    // Nonzero normal form is a nonzero real, so refinement terminates.
    bits *= 2;
    const Enclosure enc = ring_.refine_enclosure(bits);
    const auto lp = powers_of(enc.lo, coeffs_.size());
    const auto hp = powers_of(enc.hi, coeffs_.size());
    std::tie(lo, hi) = bound_form(coeffs_, lp, hp);
  }
}

Enclosure Scalar::evaluate(const Enclosure& c0) const {
  const auto lp = powers_of(c0.lo, coeffs_.size());
  const auto hp = powers_of(c0.hi, coeffs_.size());
  auto [lo, hi] = bound_form(coeffs_, lp, hp);
  return Enclosure{lo, hi, c0.bits};
}

double Scalar::approx() const {
  if (is_rational()) return coeffs_[0].get_d();
  const auto& data = *ring_.data_;
  auto [lo, hi] = bound_form(coeffs_, data.lo_powers, data.hi_powers);
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string Scalar::approx_string() const {
  if (is_zero()) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", approx());
  return buf;
}

std::string Scalar::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    std::string term = coeffs_[k].get_str();
    if (!out.empty()) out += sgn(coeffs_[k]) < 0 ? " - " : " + ";
    if (!out.empty() && sgn(coeffs_[k]) < 0) term = Rational(-coeffs_[k]).get_str();
    if (k == 1) term += "*c";
    if (k > 1) term += "*c^" + std::to_string(k);
    out += term;
  }
  return out.empty() ? "0" : out;
}

void Scalar::check_ring(const Scalar& other) const {
  if (ring_ != other.ring_) throw InternalError("scalars from different rings");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_ring(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_ring(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_ring(rhs);
  if (rhs.is_rational()) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    const Rational c = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  *this = Scalar(ring_, poly_mul(coeffs_, rhs.coeffs_));
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInputError("division by zero");
  if (is_rational()) return Scalar(ring_, Rational(1) / coeffs_[0]);
  RatPoly r0(ring_.defining_poly().begin(), ring_.defining_poly().end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r1.empty()) throw InternalError("defining polynomial is not irreducible");
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return Scalar(ring_, s1);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_ring(rhs);
  return *this *= rhs.inverse();
}

int Scalar::compare_forms(const Scalar& a, const Scalar& b) {
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t Scalar::hash() const {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) {
    hash_combine(h, hash_mpz(c.get_num_mpz_t()));
    hash_combine(h, hash_mpz(c.get_den_mpz_t()));
  }
  return h;
}

int compare_values(const Scalar& a, const Scalar& b) { return (a - b).sign(); }

Scalar normalized_chebyshev(const RingSpec& ring, unsigned k) {
  Scalar prev(ring, Rational(2));
  if (k == 0) return prev;
  const Scalar c = ring.degree() == 1 ? Scalar(ring, Rational(-ring.defining_poly()[0])) : Scalar::generator(ring);
  Scalar cur = c;
  for (unsigned i = 1; i < k; ++i) {
    Scalar next = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Scalar cos_entry(int m, const RingSpec& ring) {
  if (m == 0) return Scalar(ring, Rational(-1));
  if (m < 0 || ring.conductor() % static_cast<unsigned>(m) != 0)
    throw InternalError("Coxeter entry " + std::to_string(m) + " does not divide the ring conductor");
  Scalar p = normalized_chebyshev(ring, ring.conductor() / static_cast<unsigned>(m));
  return p * Scalar(ring, Rational(-1) / 2);
}

}  // namespace coxlab
