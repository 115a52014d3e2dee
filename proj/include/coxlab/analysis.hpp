#pragma once

// Braid moves, enumeration of reduced expressions and element classification.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "coxlab/correspondences.hpp"

namespace coxlab {

struct BraidMove {
  std::size_t position = 0;  // 0-based start of the factor
  Generator s = 0;
  Generator t = 0;
  int m = 0;

  bool operator==(const BraidMove& other) const = default;
};

std::vector<BraidMove> find_braid_moves(const CoxeterSystem& system, const Word& word);
Word apply_braid_move(const Word& word, const BraidMove& move);

// Breadth-first closure under braid moves, deduplicated on letter sequences.
std::set<Word> enumerate_reduced(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget = {});
// Descent recursion R(w) = union over right descents s of R(ws).s, memoized
// on group elements. Independent of the braid closure.
std::set<Word> enumerate_reduced_by_descents(const CoxeterSystem& system, const Word& reduced_word,
                                             const Budget& budget = {});

// Classes under 2-braid moves. Each class is sorted; classes are ordered by
// their least member.
std::vector<std::vector<Word>> commutation_classes(const CoxeterSystem& system, const std::set<Word>& words);

// theta_i <= theta_j when i < j and B(theta_i, theta_j) != 0, closed
// transitively. elements are sorted by RootKeyLess.
struct RootOrder {
  std::vector<Root> elements;
  std::vector<std::vector<bool>> leq;

  bool operator==(const RootOrder& other) const { return elements == other.elements && leq == other.leq; }
};
RootOrder commutation_order(const CoxeterSystem& system, const Word& reduced_word);

// Full lines with at least three members that appear consecutively in the
// root sequence of some word.
std::vector<Line> contractible_long_sets(const CoxeterSystem& system, const SegmentStructure& structure,
                                         const std::set<Word>& words);
bool consecutive_in(const RootSequence& seq, const Line& line);

// Deletion theorem value for 1-based position j, and the direct recount.
std::size_t deletion_length(const CoxeterSystem& system, const Word& reduced_word, std::size_t j);
std::size_t deletion_length_oracle(const CoxeterSystem& system, const Word& reduced_word, std::size_t j);

struct CoveringResult {
  bool structural = false;
  bool oracle = false;
  std::size_t covered_count = 0;
};
CoveringResult fully_covering(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget = {});

// Bit per contractible long set: whether its members occur in the reverse
// order relative to the base word.
std::vector<bool> state_vector(const CoxeterSystem& system, const Word& base, const Word& word,
                               const std::vector<Line>& contractible);

struct FreelyBraidedResult {
  bool freely_braided = false;
  std::size_t n = 0;
  std::size_t class_count = 0;
  std::size_t state_image_size = 0;
};
FreelyBraidedResult freely_braided(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget = {});

Word contracted_reduced_expression(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget = {});

bool short_braid_avoiding(const CoxeterSystem& system, const std::set<Word>& words);

struct EnumerationResult {
  std::vector<Word> reduced_words;
  std::vector<Labeling> labelings;
  std::vector<Tournament> tournaments;
  CorrespondenceCounts counts;
};
EnumerationResult enumerate_all(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget = {},
                                bool collect = true);

struct ClassificationReport {
  Word word;
  std::size_t length = 0;
  std::size_t reduced_count = 0;
  std::size_t commutation_class_count = 0;
  std::vector<Line> contractible_long_sets;
  std::size_t n = 0;
  bool freely_braided = false;
  bool fully_covering = false;
  bool fully_covering_oracle = false;
  bool short_braid_avoiding = false;
  std::size_t covered_count = 0;
  std::size_t state_image_size = 0;
};
ClassificationReport classify(const CoxeterSystem& system, const Word& reduced_word, const Budget& budget = {});

// All elements of length <= max_length, each with one reduced word
// (lexicographically least), grouped by length.
std::vector<Word> elements_up_to(const CoxeterSystem& system, std::size_t max_length);

}  // namespace coxlab
