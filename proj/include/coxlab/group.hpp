#pragma once

// Coxeter systems, words and the geometric representation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/scalar.hpp"

namespace coxlab {

using Generator = int;
using Word = std::vector<Generator>;
using Vector = std::vector<Scalar>;
using CoxeterMatrix = std::vector<std::vector<int>>;

class CoxeterSystem {
 public:
  CoxeterSystem(std::vector<std::string> names, CoxeterMatrix matrix);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  // m_{s,t}; 0 means infinity.
  int m(Generator s, Generator t) const { return matrix_[s][t]; }
  const RingSpec& ring() const { return ring_; }
  const Scalar& form(Generator s, Generator t) const { return form_[s][t]; }

  Scalar bilinear(const Vector& u, const Vector& v) const;
  Scalar zero() const { return Scalar(ring_); }
  Scalar rational(const Rational& q) const { return Scalar(ring_, q); }
  Vector simple_root(Generator s) const;
  Vector zero_vector() const;

  Generator generator_index(const std::string& name) const;
  std::string word_to_string(const Word& w) const;
  void check_word(const Word& w) const;

 private:
  std::vector<std::string> names_;
  CoxeterMatrix matrix_;
  RingSpec ring_;
  std::vector<std::vector<Scalar>> form_;
};

// Validates the matrix (symmetric, unit diagonal, off-diagonal 0 or >= 2)
// and builds the bilinear form. Errors name the offending cell.
CoxeterSystem validate_system(std::vector<std::string> names, CoxeterMatrix matrix);

// An element of W as its matrix on V in the simple-root basis. The
// representation is faithful, so equality is matrix equality.
class GroupElement {
 public:
  static GroupElement identity(const CoxeterSystem& system);

  std::size_t dim() const { return dim_; }
  const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Vector column(std::size_t col) const;

  // this * s, updating one generator at a time.
  GroupElement times_generator(const CoxeterSystem& system, Generator s) const;
  GroupElement operator*(const GroupElement& rhs) const;
  Vector act(const Vector& v) const;

  bool operator==(const GroupElement& other) const { return entries_ == other.entries_; }
  bool operator!=(const GroupElement& other) const { return !(*this == other); }
  std::size_t hash() const;

  std::optional<std::size_t> cached_length;

 private:
  GroupElement(std::size_t dim, std::vector<Scalar> entries) : dim_(dim), entries_(std::move(entries)) {}
  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

GroupElement simple_reflection(const CoxeterSystem& system, Generator s);
GroupElement evaluate_word(const CoxeterSystem& system, const Word& word);
Vector act(const GroupElement& element, const Vector& v);

// true when the matrix preserves B exactly: M^T B M = B.
bool preserves_form(const CoxeterSystem& system, const GroupElement& element);

}  // namespace coxlab

template <>
struct std::hash<coxlab::GroupElement> {
  std::size_t operator()(const coxlab::GroupElement& g) const { return g.hash(); }
};
