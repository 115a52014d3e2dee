#include "coxlab/dihedral.hpp"

#include <algorithm>

#include "coxlab/errors.hpp"

namespace coxlab {

Scalar chebyshev_u(long n, const Scalar& a) {
  const RingSpec& ring = a.ring();
  const Scalar two_a = a * Scalar(ring, Rational(2));
  Scalar prev(ring), cur(ring, Rational(1));  // U_0, U_1
  if (n == 0) return prev;
  if (n > 0) {
    for (long k = 1; k < n; ++k) {
      Scalar next = two_a * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // U_{k-1} = 2a U_k - U_{k+1}, walking down from (U_1, U_0).
  Scalar upper = cur, lower = prev;
  for (long k = 0; k > n; --k) {
    Scalar next = two_a * lower - upper;
    upper = std::move(lower);
    lower = std::move(next);
  }
  return lower;
}

LocalSequence local_sequence(const CoxeterSystem& system, const Root& gamma, const Root& delta, long lo, long hi) {
  if (gamma == delta || gamma == delta.negated()) throw InvalidInputError("local sequence needs gamma != +-delta");
  if (lo > 1 || hi < 1) throw InvalidInputError("index range must contain 1");
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  LocalSequence out;
  out.lo = lo;
  out.gamma.assign(count, Vector{});
  out.delta.assign(count, Vector{});
  const std::size_t one = static_cast<std::size_t>(1 - lo);
  out.gamma[one] = gamma.coords;
  out.delta[one] = delta.coords;
  for (std::size_t i = one + 1; i < count; ++i) {
    out.gamma[i] = reflect_vector(system, out.delta[i - 1], gamma.coords);
    out.delta[i] = reflect_vector(system, out.gamma[i - 1], delta.coords);
  }
  for (std::size_t i = one; i-- > 0;) {
    out.delta[i] = reflect_vector(system, out.gamma[i + 1], gamma.coords);
    out.gamma[i] = reflect_vector(system, out.delta[i + 1], delta.coords);
  }
  return out;
}

bool Line::contains(const Root& r) const { return index_of(r) >= 0; }

long Line::index_of(const Root& r) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == r) return static_cast<long>(i);
  return -1;
}

int minor_sign(const Vector& a, const Vector& b, std::size_t p, std::size_t q) {
  return (a[p] * b[q] - a[q] * b[p]).sign();
}

bool independent_columns(const Vector& a, const Vector& b, std::size_t& p, std::size_t& q) {
  for (p = 0; p < a.size(); ++p)
    for (q = p + 1; q < a.size(); ++q)
      if (!(a[p] * b[q] - a[q] * b[p]).is_zero()) return true;
  return false;
}

bool coplanar(const Vector& a, const Vector& b, const Vector& c) {
  const std::size_t n = a.size();
  if (n <= 2) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Scalar det = a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
                           a[k] * (b[i] * c[j] - b[j] * c[i]);
        if (!det.is_zero()) return false;
      }
  return true;
}

bool canonical_endpoint_test(const CoxeterSystem& system, const Root& e, const Root& n) {
  if (e == n) throw InvalidInputError("endpoint test needs distinct roots");
  return Root{reflect_vector(system, n.coords, e.coords)}.is_positive();
}

Line line_through(const CoxeterSystem& system, const InversionOfElement& phi_w, const Root& alpha, const Root& beta) {
  if (alpha == beta) throw InvalidInputError("line_through needs distinct roots");
  std::size_t p = 0, q = 0;
  if (!independent_columns(alpha.coords, beta.coords, p, q))
    throw InvalidInputError("roots are parallel");
  Line line;
  line.basis = {alpha, beta};
  for (const auto& r : phi_w.roots)
    if (coplanar(alpha.coords, beta.coords, r.coords)) line.members.push_back(r);
  // All members lie in a pointed cone, so the orientation sign is a total order.
  std::sort(line.members.begin(), line.members.end(),
            [&](const Root& a, const Root& b) { return minor_sign(a.coords, b.coords, p, q) > 0; });
  if (compare_numeric(line.members.front(), line.members.back()) > 0)
    std::reverse(line.members.begin(), line.members.end());
  const std::size_t k = line.members.size();
  line.canonical_flags[0] = canonical_endpoint_test(system, line.members[0], line.members[1]);
  line.canonical_flags[1] = canonical_endpoint_test(system, line.members[k - 1], line.members[k - 2]);
  if (line.canonical_flags[0] && line.canonical_flags[1]) {
    line.kind = LineKind::Full;
  } else if (line.canonical_flags[0] || line.canonical_flags[1]) {
    line.kind = LineKind::Partial;
  } else {
    throw InternalError("line has no canonical endpoint");
  }
  return line;
}

}  // namespace coxlab
