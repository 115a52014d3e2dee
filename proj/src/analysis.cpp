#include "coxlab/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

void check_length(const Word& w, const Budget& budget) {
  if (w.size() > budget.max_length)
    throw ResourceError("word length " + std::to_string(w.size()) + " exceeds limit " +
                        std::to_string(budget.max_length));
}

void check_count(std::size_t count, const Budget& budget) {
  if (count > budget.max_reduced)
    throw ResourceError("more than " + std::to_string(budget.max_reduced) + " reduced expressions");
}

void require_reduced(const CoxeterSystem& system, const Word& w) {
  if (!length_and_reducedness(system, w).reduced) throw NotReducedError();
}

bool is_right_descent(const GroupElement& g, Generator s) {
  return !Root{g.column(static_cast<std::size_t>(s))}.is_positive();
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

long position_in(const RootSequence& seq, const Root& r) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == r) return static_cast<long>(i);
  return -1;
}

}  // namespace

std::vector<BraidMove> find_braid_moves(const CoxeterSystem& system, const Word& word) {
  system.check_word(word);
  std::vector<BraidMove> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const Generator s = word[i], t = word[i + 1];
    if (s == t) continue;
    const int m = system.m(s, t);
    if (m == 0 || i + static_cast<std::size_t>(m) > word.size()) continue;
    bool alternating = true;
    for (int k = 0; k < m && alternating; ++k)
      if (word[i + static_cast<std::size_t>(k)] != (k % 2 == 0 ? s : t)) alternating = false;
    if (alternating) out.push_back(BraidMove{i, s, t, m});
  }
  return out;
}

Word apply_braid_move(const Word& word, const BraidMove& move) {
  Word out = word;
  for (int k = 0; k < move.m; ++k) out[move.position + static_cast<std::size_t>(k)] = k % 2 == 0 ? move.t : move.s;
  return out;
}

std::set<Word> enumerate_reduced(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget) {
  check_length(reduced_word, budget);
  require_reduced(system, reduced_word);
  std::set<Word> seen{reduced_word};
  std::deque<Word> frontier{reduced_word};
  while (!frontier.empty()) {
    const Word w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& move : find_braid_moves(system, w)) {
      Word next = apply_braid_move(w, move);
      if (seen.insert(next).second) {
        check_count(seen.size(), budget);
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen;
}

std::set<Word> enumerate_reduced_by_descents(const CoxeterSystem& system, const Word& reduced_word,
                                             const Budget& budget) {
  check_length(reduced_word, budget);
  require_reduced(system, reduced_word);
  std::unordered_map<GroupElement, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(const GroupElement&)> words_of =
      [&](const GroupElement& g) -> const std::vector<Word>& {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    bool any = false;
    for (Generator s = 0; s < static_cast<Generator>(system.rank()); ++s) {
      if (!is_right_descent(g, s)) continue;
      any = true;
      const GroupElement shorter = g.times_generator(system, s);
      for (Word w : words_of(shorter)) {
        w.push_back(s);
        out.push_back(std::move(w));
        check_count(out.size(), budget);
      }
    }
    if (!any) out.push_back(Word{});
    return memo.emplace(g, std::move(out)).first->second;
  };
  const auto& words = words_of(evaluate_word(system, reduced_word));
  return std::set<Word>(words.begin(), words.end());
}

std::vector<std::vector<Word>> commutation_classes(const CoxeterSystem& system, const std::set<Word>& words) {
  const std::vector<Word> list(words.begin(), words.end());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], i);
  UnionFind uf(list.size());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& move : find_braid_moves(system, list[i])) {
      if (move.m != 2) continue;
      auto it = index.find(apply_braid_move(list[i], move));
      if (it != index.end()) uf.unite(i, it->second);
    }
  std::map<std::size_t, std::vector<Word>> groups;
  for (std::size_t i = 0; i < list.size(); ++i) groups[uf.find(i)].push_back(list[i]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

RootOrder commutation_order(const CoxeterSystem& system, const Word& reduced_word) {
  const InversionOfElement phi = inversion_set(system, reduced_word);
  const auto& seq = phi.roots;
  const std::size_t n = seq.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!system.bilinear(seq[i].coords, seq[j].coords).is_zero()) rel[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return RootKeyLess{}(seq[a], seq[b]); });
  RootOrder out;
  out.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    out.elements.push_back(seq[perm[a]]);
    for (std::size_t b = 0; b < n; ++b) out.leq[a][b] = rel[perm[a]][perm[b]];
  }
  return out;
}

bool consecutive_in(const RootSequence& seq, const Line& line) {
  long lo = static_cast<long>(seq.size()), hi = -1;
  for (const auto& r : line.members) {
    const long p = position_in(seq, r);
    if (p < 0) return false;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo + 1 == static_cast<long>(line.members.size());
}

std::vector<Line> contractible_long_sets(const CoxeterSystem& system, const SegmentStructure& structure,
                                         const std::set<Word>& words) {
  std::vector<RootSequence> sequences;
  for (const auto& w : words) sequences.push_back(root_sequence(system, w));
  std::vector<Line> out;
  for (const auto& line : structure.lines) {
    if (line.kind != LineKind::Full || line.members.size() < 3) continue;
    for (const auto& seq : sequences)
      if (consecutive_in(seq, line)) {
        out.push_back(line);
        break;
      }
  }
  return out;
}

std::size_t deletion_length(const CoxeterSystem& system, const Word& reduced_word, std::size_t j) {
  if (j < 1 || j > reduced_word.size())
    throw InvalidInputError("deletion index " + std::to_string(j) + " out of range");
  const InversionOfElement phi = inversion_set(system, reduced_word);
  const SegmentStructure structure = build_structure(system, phi);
  const Root& theta = phi.roots[j - 1];
  std::size_t d = 0;
  for (const auto& line : structure.lines) d += theta_norm(theta, line);
  return reduced_word.size() - 1 - 2 * d;
}

std::size_t deletion_length_oracle(const CoxeterSystem& system, const Word& reduced_word, std::size_t j) {
  const auto [word, predicted] = delete_generator(system, reduced_word, j);
  return length_and_reducedness(system, word).length;
}

CoveringResult fully_covering(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget) {
  const InversionOfElement phi = inversion_set(system, reduced_word);
  const SegmentStructure structure = build_structure(system, phi);
  CoveringResult out;
  out.structural = std::all_of(structure.lines.begin(), structure.lines.end(),
                               [](const Line& l) { return l.members.size() == 2; });
  out.oracle = true;
  for (const auto& w : enumerate_reduced(system, reduced_word, budget)) {
    for (std::size_t j = 1; j <= w.size() && out.oracle; ++j)
      if (!length_and_reducedness(system, delete_generator(system, w, j).first).reduced) out.oracle = false;
    if (!out.oracle) break;
  }
  for (const auto& theta : phi.roots) {
    std::size_t d = 0;
    for (const auto& line : structure.lines) d += theta_norm(theta, line);
    if (d == 0) ++out.covered_count;
  }
  return out;
}

std::vector<bool> state_vector(const CoxeterSystem& system, const Word& base, const Word& word,
                               const std::vector<Line>& contractible) {
  const RootSequence a = root_sequence(system, base), b = root_sequence(system, word);
  std::vector<bool> out;
  for (const auto& line : contractible) {
    const Root& first = line.members.front();
    const Root& last = line.members.back();
    const bool base_forward = position_in(a, first) < position_in(a, last);
    const bool word_forward = position_in(b, first) < position_in(b, last);
    out.push_back(base_forward != word_forward);
  }
  return out;
}

namespace {

bool pairwise_disjoint(const std::vector<Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      for (const auto& r : lines[i].members)
        if (lines[j].contains(r)) return false;
  return true;
}

struct ElementData {
  InversionOfElement phi;
  SegmentStructure structure;
  std::set<Word> words;
  std::vector<std::vector<Word>> classes;
  std::vector<Line> contractible;
};

ElementData analyse(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget) {
  ElementData d{inversion_set(system, reduced_word), {}, {}, {}, {}};
  d.structure = build_structure(system, d.phi);
  d.words = enumerate_reduced(system, reduced_word, budget);
  d.classes = commutation_classes(system, d.words);
  d.contractible = contractible_long_sets(system, d.structure, d.words);
  return d;
}

FreelyBraidedResult freely_braided_from(const CoxeterSystem& system, const ElementData& d) {
  FreelyBraidedResult out;
  out.n = d.contractible.size();
  out.class_count = d.classes.size();
  out.freely_braided = pairwise_disjoint(d.contractible);
  const Word& base = *d.words.begin();
  std::set<std::vector<bool>> image;
  for (const auto& w : d.words) image.insert(state_vector(system, base, w, d.contractible));
  out.state_image_size = image.size();
  return out;
}

}  // namespace

FreelyBraidedResult freely_braided(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget) {
  return freely_braided_from(system, analyse(system, reduced_word, budget));
}

Word contracted_reduced_expression(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget) {
  const ElementData d = analyse(system, reduced_word, budget);
  if (!pairwise_disjoint(d.contractible)) throw InvalidInputError("element is not freely braided");
  for (const auto& cls : d.classes) {
    if (std::find(cls.begin(), cls.end(), reduced_word) == cls.end()) continue;
    for (const auto& w : cls) {
      const RootSequence seq = root_sequence(system, w);
      if (std::all_of(d.contractible.begin(), d.contractible.end(),
                      [&](const Line& l) { return consecutive_in(seq, l); }))
        return w;
    }
  }
  throw InternalError("no contracted reduced expression in the commutation class");
}

bool short_braid_avoiding(const CoxeterSystem& system, const std::set<Word>& words) {
  for (const auto& w : words)
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      if (w[i] != w[i + 2] || w[i] == w[i + 1]) continue;
      const int m = system.m(w[i], w[i + 1]);
      if (m == 0 || m >= 3) return false;
    }
  return true;
}

EnumerationResult enumerate_all(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget,
                                bool collect) {
  const std::set<Word> words = enumerate_reduced(system, reduced_word, budget);
  const InversionOfElement phi = inversion_set(system, reduced_word);
  const SegmentStructure structure = build_structure(system, phi);
  EnumerationResult out;
  out.counts.reduced_words = words.size();
  if (collect) {
    out.reduced_words.assign(words.begin(), words.end());
    out.counts.labelings =
        enumerate_labelings(structure, budget, [&](const Labeling& l) { out.labelings.push_back(l.sorted()); });
    out.counts.tournaments =
        enumerate_tournaments(structure, budget, [&](const Tournament& t) { out.tournaments.push_back(t); });
    // Canonical order: by the decoded word.
    auto by_word = [&](const auto& get_labeling) {
      return [&system, get_labeling](const auto& a, const auto& b) {
        return decode(system, get_labeling(a)) < decode(system, get_labeling(b));
      };
    };
    std::sort(out.labelings.begin(), out.labelings.end(), by_word([](const Labeling& l) { return l; }));
    std::sort(out.tournaments.begin(), out.tournaments.end(),
              by_word([](const Tournament& t) { return labeling_from_tournament(t); }));
  } else {
    out.counts.labelings = enumerate_labelings(structure, budget);
    out.counts.tournaments = enumerate_tournaments(structure, budget);
  }
  return out;
}

ClassificationReport classify(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget) {
  const ElementData d = analyse(system, reduced_word, budget);
  const FreelyBraidedResult fb = freely_braided_from(system, d);
  const CoveringResult cov = fully_covering(system, reduced_word, budget);
  ClassificationReport r;
  r.word = reduced_word;
  r.length = reduced_word.size();
  r.reduced_count = d.words.size();
  r.commutation_class_count = d.classes.size();
  r.contractible_long_sets = d.contractible;
  r.n = d.contractible.size();
  r.freely_braided = fb.freely_braided;
  r.fully_covering = cov.structural;
  r.fully_covering_oracle = cov.oracle;
  r.short_braid_avoiding = short_braid_avoiding(system, d.words);
  r.covered_count = cov.covered_count;
  r.state_image_size = fb.state_image_size;
  return r;
}

std::vector<Word> elements_up_to(const CoxeterSystem& system, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<std::pair<Word, GroupElement>> level{{Word{}, GroupElement::identity(system)}};
  for (std::size_t len = 0; len < max_length && !level.empty(); ++len) {
    std::unordered_set<GroupElement> seen;
    std::vector<std::pair<Word, GroupElement>> next;
    for (const auto& [word, g] : level)
      for (Generator s = 0; s < static_cast<Generator>(system.rank()); ++s) {
        if (is_right_descent(g, s)) continue;
        GroupElement h = g.times_generator(system, s);
        if (!seen.insert(h).second) continue;
        Word w = word;
        w.push_back(s);
        next.emplace_back(std::move(w), std::move(h));
      }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [w, h] : next) out.push_back(w);
    level = std::move(next);
  }
  return out;
}

}  // namespace coxlab
