#pragma once

// Chebyshev polynomials, local root sequences and lines of Phi(w).

#include <array>
#include <cstddef>
#include <vector>

#include "coxlab/roots.hpp"

namespace coxlab {

// U_n(a) with U_0 = 0, U_1 = 1 and U_{n+2} = 2a U_{n+1} - U_n, any integer n.
Scalar chebyshev_u(long n, const Scalar& a);

// gamma_i and delta_i for i in [lo, hi], generated by the reflection
// recurrences from gamma_1 = gamma, delta_1 = delta.
struct LocalSequence {
  long lo = 1;
  std::vector<Vector> gamma;
  std::vector<Vector> delta;

  const Vector& gamma_at(long i) const { return gamma.at(static_cast<std::size_t>(i - lo)); }
  const Vector& delta_at(long i) const { return delta.at(static_cast<std::size_t>(i - lo)); }
};

LocalSequence local_sequence(const CoxeterSystem& system, const Root& gamma, const Root& delta, long lo, long hi);

enum class LineKind { Full, Partial };

struct Line {
  std::array<Root, 2> basis;
  std::vector<Root> members;  // sorted by angle
  std::array<bool, 2> canonical_flags{false, false};
  LineKind kind = LineKind::Full;

  bool contains(const Root& r) const;
  // 0-based position in members, or -1.
  long index_of(const Root& r) const;
  // The canonical end of a partial line (index 0 or size-1).
  std::size_t canonical_end() const { return canonical_flags[0] ? 0 : members.size() - 1; }
};

// true when the three vectors are linearly dependent.
bool coplanar(const Vector& a, const Vector& b, const Vector& c);
// Sign of the 2x2 minor on columns (p, q).
int minor_sign(const Vector& a, const Vector& b, std::size_t p, std::size_t q);
// Finds columns with a nonzero minor; false if a and b are parallel.
bool independent_columns(const Vector& a, const Vector& b, std::size_t& p, std::size_t& q);

// e is a sorted endpoint, n its neighbour: true iff s_e(n) is positive.
bool canonical_endpoint_test(const CoxeterSystem& system, const Root& e, const Root& n);

Line line_through(const CoxeterSystem& system, const InversionOfElement& phi_w, const Root& alpha, const Root& beta);

}  // namespace coxlab
