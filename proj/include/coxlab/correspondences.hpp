#pragma once

// Standard encodings, labelings and tournaments of reduced expressions.

#include <cstddef>
#include <functional>
#include <vector>

#include "coxlab/segment.hpp"

namespace coxlab {

// Support-only labeling; roots off the support carry label 0.
struct Labeling {
  std::vector<Root> roots;
  std::vector<std::size_t> labels;

  std::size_t label_of(const Root& r) const;
  bool is_sequential() const;
  // Sorted by label, for display and comparison.
  Labeling sorted() const;
  bool operator==(const Labeling& other) const;
};

// A total order on Phi(w), least first.
struct Tournament {
  std::vector<Root> order;
};

struct Budget {
  std::size_t max_reduced = 1000000;
  std::size_t max_length = 20;
};

Labeling encode(const CoxeterSystem& system, const Word& reduced_word);
// Labels weakly monotone along every line, where a partial line is read with
// an extra 0 beyond its non-canonical end.
bool is_standard(const Labeling& labeling, const SegmentStructure& structure);
// Same predicate by checking every triple with between(), after adding the
// first root past each partial line (label 0).
bool is_standard_by_triples(const CoxeterSystem& system, const Labeling& labeling, const SegmentStructure& structure);
bool satisfies_restrictions(const Labeling& labeling, const SegmentStructure& structure);
Word decode(const CoxeterSystem& system, const Labeling& labeling);

Tournament tournament_from_labeling(const Labeling& labeling);
Labeling labeling_from_tournament(const Tournament& tournament);

// Route ii: sequential labelings of the structure that are standard and
// satisfy the restrictions. The callback may be empty for counting only.
std::size_t enumerate_labelings(const SegmentStructure& structure, const Budget& budget,
                                const std::function<void(const Labeling&)>& visit = {});

// Route iii: total orders from orientations of the full lines.
std::size_t enumerate_tournaments(const SegmentStructure& structure, const Budget& budget,
                                  const std::function<void(const Tournament&)>& visit = {});

struct CorrespondenceCounts {
  std::size_t reduced_words = 0;
  std::size_t labelings = 0;
  std::size_t tournaments = 0;
  bool agree() const { return reduced_words == labelings && labelings == tournaments; }
};

}  // namespace coxlab
