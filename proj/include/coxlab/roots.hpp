#pragma once

// Roots, root sequences and inversion sets.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/group.hpp"

namespace coxlab {

struct Root {
  Vector coords;

  bool operator==(const Root& other) const { return coords == other.coords; }
  bool operator!=(const Root& other) const { return !(*this == other); }

  // +1 positive, -1 negative; throws InternalError if not sign-coherent.
  int sign() const;
  bool is_positive() const { return sign() > 0; }
  Root negated() const;
  // Index of the simple root this equals, or -1.
  int simple_index() const;
  std::string to_string() const;
  std::string key() const;
};

// Syntactic total order on normal forms; used for containers and dedup keys.
struct RootKeyLess {
  bool operator()(const Root& a, const Root& b) const;
};

// Numeric lexicographic comparison of coordinates.
int compare_numeric(const Root& a, const Root& b);

struct RootHash {
  std::size_t operator()(const Root& r) const;
};

using RootSequence = std::vector<Root>;

struct InversionOfElement {
  std::vector<Root> roots;  // in root-sequence order of the word it came from
  GroupElement owner;

  bool contains(const Root& r) const;
  std::size_t size() const { return roots.size(); }
};

Root simple_root(const CoxeterSystem& system, Generator s);
Root reflect(const CoxeterSystem& system, const Root& lambda, const Root& alpha);
// Raw reflection on vectors, no sign check.
Vector reflect_vector(const CoxeterSystem& system, const Vector& lambda, const Vector& alpha);
// Applies the simple reflection s to a root.
Root apply_generator(const CoxeterSystem& system, Generator s, const Root& r);

RootSequence root_sequence(const CoxeterSystem& system, const Word& word);

struct LengthInfo {
  std::size_t length = 0;
  bool reduced = true;
};
LengthInfo length_and_reducedness(const CoxeterSystem& system, const Word& word);

InversionOfElement inversion_set(const CoxeterSystem& system, const Word& word);

// j is 1-based.
std::pair<Word, RootSequence> delete_generator(const CoxeterSystem& system, const Word& word, std::size_t j);

Word element_from_biconvex(const CoxeterSystem& system, const std::vector<Root>& roots);

bool same_root_set(const std::vector<Root>& a, const std::vector<Root>& b);

}  // namespace coxlab
