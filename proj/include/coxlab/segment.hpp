#pragma once

// The segment structure of Phi(w).

#include <cstddef>
#include <vector>

#include "coxlab/dihedral.hpp"

namespace coxlab {

struct SegmentStructure {
  std::vector<Root> points;  // root-sequence order
  std::vector<Line> lines;   // deduplicated, canonically ordered

  // Indices into lines of those containing r.
  std::vector<std::size_t> lines_through(const Root& r) const;
  std::size_t full_count() const;
  std::size_t partial_count() const;
};

SegmentStructure build_structure(const CoxeterSystem& system, const InversionOfElement& phi_w);

// mu = a lambda + b nu with a, b > 0, all three distinct and positive.
bool between(const Root& lambda, const Root& mu, const Root& nu);

// One flag per point: endpoint of every line through it.
std::vector<bool> endpoint_report(const SegmentStructure& structure);

// min(i - 1, k - i) for theta = gamma_i on a line of k members; 0 off the line.
std::size_t theta_norm(const Root& theta, const Line& line);

// Number of steps between two members of the same line.
std::size_t distance(const Line& line, const Root& a, const Root& b);

}  // namespace coxlab
