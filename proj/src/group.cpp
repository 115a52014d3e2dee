#include "coxlab/group.hpp"

#include <set>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CoxeterSystem validate_system(std::vector<std::string> names, CoxeterMatrix matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw InvalidInputError("Coxeter matrix is empty");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
  }
  if (names.size() != n)
    throw InvalidInputError("expected " + std::to_string(n) + " generator names, got " +
                            std::to_string(names.size()));
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw InvalidInputError("empty generator name");
    for (char ch : name)
      if (std::isspace(static_cast<unsigned char>(ch)))
        throw InvalidInputError("generator name '" + name + "' contains whitespace");
    if (!seen.insert(name).second) throw InvalidInputError("duplicate generator name '" + name + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n)
      throw InvalidInputError("row " + std::to_string(i) + " has " + std::to_string(matrix[i].size()) +
                              " entries, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 1)
      throw InvalidInputError("diagonal entry " + cell(i, i) + " must be 1, got " + std::to_string(matrix[i][i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = matrix[i][j];
      if (m < 0) throw InvalidInputError("entry " + cell(i, j) + " is negative");
      if (m == 1) throw InvalidInputError("off-diagonal entry " + cell(i, j) + " must not be 1");
      if (m != matrix[j][i])
        throw InvalidInputError("matrix not symmetric at " + cell(i, j) + ": " + std::to_string(m) +
                                " vs " + std::to_string(matrix[j][i]));
    }
  }
  return CoxeterSystem(std::move(names), std::move(matrix));
}

CoxeterSystem::CoxeterSystem(std::vector<std::string> names, CoxeterMatrix matrix)
    : names_(std::move(names)), matrix_(std::move(matrix)), ring_(build_ring(matrix_)) {
  const std::size_t n = matrix_.size();
  form_.assign(n, std::vector<Scalar>(n, Scalar(ring_)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form_[i][j] = i == j ? Scalar(ring_, Rational(1)) : cos_entry(matrix_[i][j], ring_);
}

Scalar CoxeterSystem::bilinear(const Vector& u, const Vector& v) const {
  Scalar acc(ring_);
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    Scalar row(ring_);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || form_[i][j].is_zero()) continue;
      row += form_[i][j] * v[j];
    }
    acc += u[i] * row;
  }
  return acc;
}

Vector CoxeterSystem::simple_root(Generator s) const {
  Vector v = zero_vector();
  v.at(static_cast<std::size_t>(s)) = Scalar(ring_, Rational(1));
  return v;
}

Vector CoxeterSystem::zero_vector() const { return Vector(rank(), Scalar(ring_)); }

Generator CoxeterSystem::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Generator>(i);
  throw InvalidInputError("unknown generator '" + name + "'");
}

std::string CoxeterSystem::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names_.at(static_cast<std::size_t>(w[i]));
  }
  return out;
}

void CoxeterSystem::check_word(const Word& w) const {
  for (Generator g : w)
    if (g < 0 || static_cast<std::size_t>(g) >= rank())
      throw InvalidInputError("generator index " + std::to_string(g) + " out of range");
}

GroupElement GroupElement::identity(const CoxeterSystem& system) {
  const std::size_t n = system.rank();
  std::vector<Scalar> entries(n * n, system.zero());
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = system.rational(1);
  GroupElement g(n, std::move(entries));
  g.cached_length = 0;
  return g;
}

Vector GroupElement::column(std::size_t col) const {
  Vector out;
  out.reserve(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out.push_back(at(r, col));
  return out;
}

GroupElement GroupElement::times_generator(const CoxeterSystem& system, Generator s) const {
  // (M s) e_t = M (e_t - 2 B(s,t) e_s): column t gains -2B(s,t) * column s.
  GroupElement out = *this;
  out.cached_length.reset();
  const std::size_t n = dim_;
  const std::size_t si = static_cast<std::size_t>(s);
  for (std::size_t t = 0; t < n; ++t) {
    if (t == si) continue;
    const Scalar& b = system.form(s, static_cast<Generator>(t));
    if (b.is_zero()) continue;
    const Scalar factor = b * system.rational(-2);
    for (std::size_t r = 0; r < n; ++r) {
      const Scalar& ms = entries_[r * n + si];
      if (ms.is_zero()) continue;
      out.entries_[r * n + t] += factor * ms;
    }
  }
  for (std::size_t r = 0; r < n; ++r) out.entries_[r * n + si] = -entries_[r * n + si];
  return out;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  const std::size_t n = dim_;
  std::vector<Scalar> entries(n * n, Scalar(entries_[0].ring()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& a = entries_[i * n + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& b = rhs.entries_[k * n + j];
        if (b.is_zero()) continue;
        entries[i * n + j] += a * b;
      }
    }
  return GroupElement(n, std::move(entries));
}

Vector GroupElement::act(const Vector& v) const {
  if (v.size() != dim_) throw InvalidInputError("dimension mismatch in act");
  Vector out(dim_, Scalar(entries_[0].ring()));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero() || entries_[i * dim_ + j].is_zero()) continue;
      out[i] += entries_[i * dim_ + j] * v[j];
    }
  return out;
}

std::size_t GroupElement::hash() const {
  std::size_t h = dim_;
  for (const auto& e : entries_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

GroupElement simple_reflection(const CoxeterSystem& system, Generator s) {
  system.check_word({s});
  GroupElement g = GroupElement::identity(system).times_generator(system, s);
  g.cached_length = 1;
  return g;
}

GroupElement evaluate_word(const CoxeterSystem& system, const Word& word) {
  system.check_word(word);
  GroupElement g = GroupElement::identity(system);
  for (Generator s : word) g = g.times_generator(system, s);
  return g;
}

Vector act(const GroupElement& element, const Vector& v) { return element.act(v); }

bool preserves_form(const CoxeterSystem& system, const GroupElement& element) {
  const std::size_t n = system.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (system.bilinear(element.column(i), element.column(j)) != system.form(static_cast<Generator>(i), static_cast<Generator>(j)))
        return false;
  return true;
}

}  // namespace coxlab
