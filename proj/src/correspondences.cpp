#include "coxlab/correspondences.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

// Lines as index chains into structure.points.
struct IndexedLine {
  std::vector<std::size_t> members;
  bool partial = false;
  std::size_t canonical = 0;  // 0 or members.size() - 1
};

std::vector<IndexedLine> index_lines(const SegmentStructure& structure) {
  std::vector<IndexedLine> out;
  for (const auto& line : structure.lines) {
    IndexedLine il;
    for (const auto& r : line.members) {
      auto it = std::find(structure.points.begin(), structure.points.end(), r);
      if (it == structure.points.end()) throw InternalError("line member missing from structure");
      il.members.push_back(static_cast<std::size_t>(it - structure.points.begin()));
    }
    il.partial = line.kind == LineKind::Partial;
    il.canonical = line.canonical_end();
    out.push_back(std::move(il));
  }
  return out;
}

bool weakly_monotone(const std::vector<std::size_t>& v) {
  bool up = true, down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) up = false;
    if (v[i] > v[i - 1]) down = false;
  }
  return up || down;
}

void check_budget(std::size_t count, const Budget& budget) {
  if (count > budget.max_reduced)
    throw ResourceError("enumeration exceeded budget of " + std::to_string(budget.max_reduced));
}

}  // namespace

std::size_t Labeling::label_of(const Root& r) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == r) return labels[i];
  return 0;
}

bool Labeling::is_sequential() const {
  std::vector<std::size_t> sorted_labels = labels;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  for (std::size_t i = 0; i < sorted_labels.size(); ++i)
    if (sorted_labels[i] != i + 1) return false;
  return true;
}

Labeling Labeling::sorted() const {
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  Labeling out;
  for (std::size_t i : order) {
    out.roots.push_back(roots[i]);
    out.labels.push_back(labels[i]);
  }
  return out;
}

bool Labeling::operator==(const Labeling& other) const {
  if (roots.size() != other.roots.size()) return false;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (other.label_of(roots[i]) != labels[i]) return false;
  return true;
}

Labeling encode(const CoxeterSystem& system, const Word& reduced_word) {
  const InversionOfElement phi = inversion_set(system, reduced_word);
  Labeling out;
  out.roots = phi.roots;
  out.labels.resize(phi.roots.size());
  std::iota(out.labels.begin(), out.labels.end(), 1);
  return out;
}

bool is_standard(const Labeling& labeling, const SegmentStructure& structure) {
  for (const auto& line : structure.lines) {
    std::vector<std::size_t> values;
    for (const auto& r : line.members) values.push_back(labeling.label_of(r));
    // A partial line continues past its non-canonical end with roots outside
    // Phi(w), all labelled 0.
    if (line.kind == LineKind::Partial) {
      if (line.canonical_end() == 0) {
        values.push_back(0);
      } else {
        values.insert(values.begin(), 0);
      }
    }
    if (!weakly_monotone(values)) return false;
  }
  return true;
}

bool is_standard_by_triples(const CoxeterSystem& system, const Labeling& labeling, const SegmentStructure& structure) {
  std::vector<Root> pts = structure.points;
  std::vector<std::size_t> labels;
  for (const auto& r : pts) labels.push_back(labeling.label_of(r));
  for (const auto& line : structure.lines) {
    if (line.kind != LineKind::Partial) continue;
    const std::size_t k = line.members.size();
    const bool first = line.canonical_end() == 0;
    const Root& last = line.members[first ? k - 1 : 0];
    const Root& prev = line.members[first ? k - 2 : 1];
    pts.push_back(reflect(system, prev, last).negated());
    labels.push_back(0);
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t k = i + 1; k < pts.size(); ++k) {
        if (j == i || j == k) continue;
        if (!between(pts[i], pts[j], pts[k])) continue;
        const std::size_t a = labels[i], b = labels[j], c = labels[k];
        if (!((a <= b && b <= c) || (a >= b && b >= c))) return false;
      }
  return true;
}

bool satisfies_restrictions(const Labeling& labeling, const SegmentStructure& structure) {
  for (const auto& line : structure.lines) {
    if (line.kind != LineKind::Partial) continue;
    std::vector<std::size_t> values;
    for (const auto& r : line.members) values.push_back(labeling.label_of(r));
    if (line.canonical_end() != 0) std::reverse(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i)
      if (values[i] >= values[i - 1]) return false;
  }
  return true;
}

Word decode(const CoxeterSystem& system, const Labeling& labeling) {
  if (!labeling.is_sequential()) throw NotStandardError("labels are not 1..n");
  Labeling current = labeling.sorted();
  Word reversed;
  while (!current.roots.empty()) {
    const Root top = current.roots.back();
    current.roots.pop_back();
    current.labels.pop_back();
    const int s = top.simple_index();
    if (s < 0) throw NotStandardError("top-labelled root " + top.to_string() + " is not simple");
    for (auto& r : current.roots) {
      r = apply_generator(system, s, r);
      bool positive = false;
      try {
        positive = r.is_positive();
      } catch (const InternalError&) {
      }
      if (!positive) throw NotStandardError("image of a labelled root is not positive");
    }
    reversed.push_back(s);
  }
  Word word(reversed.rbegin(), reversed.rend());
  if (!(encode(system, word) == labeling)) throw NotStandardError("decoded word does not re-encode to the labeling");
  return word;
}

Tournament tournament_from_labeling(const Labeling& labeling) {
  if (!labeling.is_sequential()) throw InvalidInputError("tournament needs a sequential labeling");
  return Tournament{labeling.sorted().roots};
}

Labeling labeling_from_tournament(const Tournament& tournament) {
  Labeling out;
  out.roots = tournament.order;
  out.labels.resize(tournament.order.size());
  std::iota(out.labels.begin(), out.labels.end(), 1);
  return out;
}

std::size_t enumerate_labelings(const SegmentStructure& structure, const Budget& budget,
                                const std::function<void(const Labeling&)>& visit) {
  const std::size_t n = structure.points.size();
  const auto lines = index_lines(structure);
  std::vector<std::vector<std::size_t>> lines_of(n);
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (std::size_t p : lines[l].members) lines_of[p].push_back(l);

  std::vector<std::size_t> label(n, 0);
  std::size_t count = 0;

  // Labels are placed from n downwards, so on each line the labelled members
  // must stay a contiguous block at one end (at the canonical end if partial).
  auto line_ok = [&](const IndexedLine& line) {
    const std::size_t k = line.members.size();
    std::size_t prefix = 0, suffix = 0, assigned = 0;
    while (prefix < k && label[line.members[prefix]] != 0) ++prefix;
    while (suffix < k && label[line.members[k - 1 - suffix]] != 0) ++suffix;
    for (std::size_t p : line.members)
      if (label[p] != 0) ++assigned;
    if (line.partial) return line.canonical == 0 ? prefix == assigned : suffix == assigned;
    return prefix == assigned || suffix == assigned;
  };

  std::function<void(std::size_t)> place = [&](std::size_t next) {
    if (next == 0) {
      Labeling lab;
      lab.roots = structure.points;
      lab.labels = label;
      if (!is_standard(lab, structure) || !satisfies_restrictions(lab, structure)) return;
      ++count;
      check_budget(count, budget);
      if (visit) visit(lab);
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (label[p] != 0) continue;
      label[p] = next;
      bool ok = true;
      for (std::size_t l : lines_of[p])
        if (!line_ok(lines[l])) {
          ok = false;
          break;
        }
      if (ok) place(next - 1);
      label[p] = 0;
    }
  };
  place(n);
  return count;
}

std::size_t enumerate_tournaments(const SegmentStructure& structure, const Budget& budget,
                                  const std::function<void(const Tournament&)>& visit) {
  const std::size_t n = structure.points.size();
  if (n > 63) throw ResourceError("tournament route supports at most 63 roots");
  auto lines = index_lines(structure);
  // Long lines first so that contradictions surface early.
  std::stable_sort(lines.begin(), lines.end(),
                   [](const IndexedLine& a, const IndexedLine& b) { return a.members.size() > b.members.size(); });

  using Mask = unsigned long long;
  // pred[v]: vertices that must precede v.
  std::vector<Mask> pred(n, 0);

  auto reaches = [&](std::size_t from, std::size_t to) {
    // Is there a path from -> to in the current digraph (edges u -> v when u in pred[v])?
    Mask seen = Mask{1} << from, frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (!(seen >> v & 1) && (pred[v] & frontier)) next |= Mask{1} << v;
      if (next >> to & 1) return true;
      seen |= next;
      frontier = next;
    }
    return false;
  };

  std::size_t total = 0;
  std::unordered_map<Mask, std::size_t> memo;

  // Number of linear extensions of the remaining vertices given placed set.
  std::function<std::size_t(Mask)> count_ext = [&](Mask placed) -> std::size_t {
    if (placed == (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1)) return 1;
    auto it = memo.find(placed);
    if (it != memo.end()) return it->second;
    std::size_t c = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (!(placed >> v & 1) && (pred[v] & ~placed) == 0) c += count_ext(placed | Mask{1} << v);
    memo.emplace(placed, c);
    return c;
  };

  std::vector<Root> order;
  std::function<void(Mask)> list_ext = [&](Mask placed) {
    if (order.size() == n) {
      ++total;
      check_budget(total, budget);
      visit(Tournament{order});
      return;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!(placed >> v & 1) && (pred[v] & ~placed) == 0) {
        order.push_back(structure.points[v]);
        list_ext(placed | Mask{1} << v);
        order.pop_back();
      }
  };

  std::function<void(std::size_t)> orient = [&](std::size_t l) {
    if (l == lines.size()) {
      if (visit) {
        list_ext(0);
      } else {
        memo.clear();
        total += count_ext(0);
        check_budget(total, budget);
      }
      return;
    }
    const auto& line = lines[l];
    // ascending: labels increase along members; partial lines decrease away
    // from the canonical end.
    std::vector<bool> choices;
    if (line.partial) {
      choices.push_back(line.canonical != 0);
    } else {
      choices = {true, false};
    }
    for (bool ascending : choices) {
      std::vector<std::size_t> chain = line.members;
      if (!ascending) std::reverse(chain.begin(), chain.end());
      const auto saved = pred;
      bool cyclic = false;
      for (std::size_t i = 0; i + 1 < chain.size() && !cyclic; ++i) {
        if (reaches(chain[i + 1], chain[i])) cyclic = true;
        pred[chain[i + 1]] |= Mask{1} << chain[i];
      }
      if (!cyclic) orient(l + 1);
      pred = saved;
    }
  };
  orient(0);
  return total;
}

}  // namespace coxlab
