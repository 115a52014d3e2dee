#include "coxlab/segment.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

std::string member_key(const Line& line) {
  std::vector<std::string> keys;
  for (const auto& r : line.members) keys.push_back(r.key());
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + "|";
  return out;
}

bool positive_or_false(const Root& r) {
  try {
    return r.is_positive();
  } catch (const InternalError&) {
    return false;
  }
}

}  // namespace

std::vector<std::size_t> SegmentStructure::lines_through(const Root& r) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].contains(r)) out.push_back(i);
  return out;
}

std::size_t SegmentStructure::full_count() const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const Line& l) { return l.kind == LineKind::Full; }));
}

std::size_t SegmentStructure::partial_count() const { return lines.size() - full_count(); }

SegmentStructure build_structure(const CoxeterSystem& system, const InversionOfElement& phi_w) {
  SegmentStructure out;
  out.points = phi_w.roots;
  std::map<std::string, Line> seen;
  const auto& pts = phi_w.roots;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Line line = line_through(system, phi_w, pts[i], pts[j]);
      std::string key = member_key(line);
      seen.try_emplace(std::move(key), std::move(line));
    }
  for (auto& [key, line] : seen) out.lines.push_back(std::move(line));
  // Order lines by the root-sequence position of their members.
  auto position = [&](const Root& r) {
    return static_cast<std::size_t>(std::find(pts.begin(), pts.end(), r) - pts.begin());
  };
  auto signature = [&](const Line& l) {
    std::vector<std::size_t> idx;
    for (const auto& r : l.members) idx.push_back(position(r));
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  std::sort(out.lines.begin(), out.lines.end(),
            [&](const Line& a, const Line& b) { return signature(a) < signature(b); });
  return out;
}

bool between(const Root& lambda, const Root& mu, const Root& nu) {
  if (lambda == mu || mu == nu || lambda == nu) return false;
  if (!positive_or_false(lambda) || !positive_or_false(mu) || !positive_or_false(nu)) return false;
  std::size_t p = 0, q = 0;
  if (!independent_columns(lambda.coords, nu.coords, p, q)) return false;
  if (!coplanar(lambda.coords, mu.coords, nu.coords)) return false;
  // Cramer: a = det(mu, nu) / D, b = det(lambda, mu) / D.
  const int d = minor_sign(lambda.coords, nu.coords, p, q);
  return minor_sign(mu.coords, nu.coords, p, q) == d && minor_sign(lambda.coords, mu.coords, p, q) == d;
}

std::vector<bool> endpoint_report(const SegmentStructure& structure) {
  std::vector<bool> out;
  for (const auto& r : structure.points) {
    bool endpoint = true;
    for (const auto& line : structure.lines) {
      const long i = line.index_of(r);
      if (i < 0) continue;
      if (i != 0 && static_cast<std::size_t>(i) + 1 != line.members.size()) endpoint = false;
    }
    out.push_back(endpoint);
  }
  return out;
}

std::size_t theta_norm(const Root& theta, const Line& line) {
  const long i = line.index_of(theta);
  if (i < 0) return 0;
  const long k = static_cast<long>(line.members.size());
  return static_cast<std::size_t>(std::min(i, k - 1 - i));
}

std::size_t distance(const Line& line, const Root& a, const Root& b) {
  const long i = line.index_of(a), j = line.index_of(b);
  if (i < 0 || j < 0) throw InvalidInputError("distance is undefined off a common line");
  return static_cast<std::size_t>(i > j ? i - j : j - i);
}

}  // namespace coxlab
