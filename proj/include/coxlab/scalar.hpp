#pragma once

// Exact arithmetic in the real cyclotomic field Q(2cos(pi/N)).
//
// Every entry of the bilinear form of a Coxeter system, and therefore every
// root coordinate, lies in the field generated by c0 = 2cos(pi/N) where N is
// the lcm of the finite Coxeter-matrix entries. Elements are stored in the
// unique normal form sum_k q_k c0^k (k < degree), so equality and the zero
// test are syntactic. Signs are decided by evaluating the normal form over a
// rational enclosure of c0 that is refined until the result excludes zero.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Closed rational interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;
  unsigned bits = 0;
};

// Integer polynomial helpers, coefficients stored constant term first.
std::vector<Integer> cyclotomic_polynomial(unsigned order);
std::vector<Integer> fold_palindromic(const std::vector<Integer>& palindromic);
unsigned euler_phi(unsigned n);

// Initial precision (bits) of generator enclosures. Reads
// COXLAB_PRECISION_START once; defaults to 64.
unsigned default_start_precision();

class RingSpec {
 public:
  // The field Q(2cos(pi/conductor)); conductor >= 2.
  explicit RingSpec(unsigned conductor, unsigned start_bits = default_start_precision());

  unsigned conductor() const { return data_->conductor; }
  std::size_t degree() const { return data_->poly.size() - 1; }
  // Minimal polynomial of c0, monic, constant term first.
  const std::vector<Integer>& defining_poly() const { return data_->poly; }
  // Enclosure at the start precision, computed at construction.
  const Enclosure& generator_enclosure() const { return data_->enclosure; }
  // A fresh enclosure of width <= 2^-bits. Never mutates the ring.
  Enclosure refine_enclosure(unsigned bits) const;

  bool operator==(const RingSpec& other) const { return data_->conductor == other.data_->conductor; }
  bool operator!=(const RingSpec& other) const { return !(*this == other); }

 private:
  struct Data {
    unsigned conductor = 2;
    std::vector<Integer> poly;
    Enclosure enclosure;
    std::vector<Rational> lo_powers;
    std::vector<Rational> hi_powers;
  };
  std::shared_ptr<const Data> data_;

  friend class Scalar;
};

// N = lcm of finite off-diagonal entries (0 encodes infinity), or 2 if none.
RingSpec build_ring(const std::vector<std::vector<int>>& coxeter_matrix);

class Scalar {
 public:
  explicit Scalar(RingSpec ring);
  Scalar(RingSpec ring, const Rational& value);
  Scalar(RingSpec ring, std::vector<Rational> coeffs);

  static Scalar generator(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // -1, 0 or +1; adaptive refinement with no precision ceiling.
  int sign() const;
  // Exact rational enclosure of the value at the given enclosure of c0.
  Enclosure evaluate(const Enclosure& c0) const;
  double approx() const;
  // Decimal approximation with 12 significant digits.
  std::string approx_string() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Total order on normal forms (not the numeric order).
  static int compare_forms(const Scalar& a, const Scalar& b);
  std::size_t hash() const;

 private:
  void check_ring(const Scalar& other) const;

  RingSpec ring_;
  std::vector<Rational> coeffs_;
};

// Numeric comparison: sign(a - b).
int compare_values(const Scalar& a, const Scalar& b);

// The normalized Chebyshev map p_k(2cos t) = 2cos(kt), evaluated at c0.
Scalar normalized_chebyshev(const RingSpec& ring, unsigned k);

// -cos(pi/m) exactly; m == 0 encodes infinity and yields -1.
Scalar cos_entry(int m, const RingSpec& ring);

}  // namespace coxlab

template <>
struct std::hash<coxlab::Scalar> {
  std::size_t operator()(const coxlab::Scalar& s) const { return s.hash(); }
};
