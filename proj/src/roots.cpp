#include "coxlab/roots.hpp"

#include <algorithm>
#include <set>

#include "coxlab/errors.hpp"

namespace coxlab {

int Root::sign() const {
  int seen = 0;
  for (const auto& c : coords) {
    const int s = c.sign();
    if (s == 0) continue;
    if (seen == 0) {
      seen = s;
    } else if (s != seen) {
      throw InternalError("root is not sign-coherent: " + to_string());
    }
  }
  if (seen == 0) throw InternalError("zero vector is not a root");
  return seen;
}

Root Root::negated() const {
  Root out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

int Root::simple_index() const {
  int found = -1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if (found >= 0) return -1;
    if (!coords[i].is_rational() || coords[i].coeffs()[0] != 1) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

std::string Root::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + ")";
}

std::string Root::key() const {
  std::string out;
  for (const auto& c : coords) {
    for (const auto& q : c.coeffs()) {
      out += q.get_str();
      out += ',';
    }
    out += ';';
  }
  return out;
}

bool RootKeyLess::operator()(const Root& a, const Root& b) const {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const int c = Scalar::compare_forms(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

int compare_numeric(const Root& a, const Root& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const int c = compare_values(a.coords[i], b.coords[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t RootHash::operator()(const Root& r) const {
  std::size_t h = 0;
  for (const auto& c : r.coords) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool InversionOfElement::contains(const Root& r) const {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

Root simple_root(const CoxeterSystem& system, Generator s) { return Root{system.simple_root(s)}; }

Vector reflect_vector(const CoxeterSystem& system, const Vector& lambda, const Vector& alpha) {
  const Scalar factor = system.bilinear(lambda, alpha) * system.rational(2);
  Vector out = lambda;
  if (factor.is_zero()) return out;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!alpha[i].is_zero()) out[i] -= factor * alpha[i];
  return out;
}

Root reflect(const CoxeterSystem& system, const Root& lambda, const Root& alpha) {
  Root out{reflect_vector(system, lambda.coords, alpha.coords)};
  out.sign();
  return out;
}

Root apply_generator(const CoxeterSystem& system, Generator s, const Root& r) {
  // s(v) = v - 2 B(v, alpha_s) alpha_s only touches coordinate s.
  const std::size_t n = system.rank();
  Scalar b = system.zero();
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar& f = system.form(s, static_cast<Generator>(j));
    if (f.is_zero() || r.coords[j].is_zero()) continue;
    b += f * r.coords[j];
  }
  Root out = r;
  if (!b.is_zero()) out.coords[static_cast<std::size_t>(s)] -= b * system.rational(2);
  return out;
}

RootSequence root_sequence(const CoxeterSystem& system, const Word& word) {
  system.check_word(word);
  // theta_k = s_n ... s_{k+1}(alpha_{s_k}); build from the right.
  RootSequence out(word.size());
  for (std::size_t k = word.size(); k-- > 0;) {
    Root r = simple_root(system, word[k]);
    for (std::size_t j = k + 1; j < word.size(); ++j) r = apply_generator(system, word[j], r);
    r.sign();
    out[k] = std::move(r);
  }
  return out;
}

LengthInfo length_and_reducedness(const CoxeterSystem& system, const Word& word) {
  const RootSequence seq = root_sequence(system, word);
  std::size_t negative = 0;
  for (const auto& r : seq)
    if (!r.is_positive()) ++negative;
  return LengthInfo{word.size() - 2 * negative, negative == 0};
}

InversionOfElement inversion_set(const CoxeterSystem& system, const Word& word) {
  RootSequence seq = root_sequence(system, word);
  for (const auto& r : seq)
    if (!r.is_positive()) throw NotReducedError();
  GroupElement owner = evaluate_word(system, word);
  owner.cached_length = word.size();
  return InversionOfElement{std::move(seq), std::move(owner)};
}

std::pair<Word, RootSequence> delete_generator(const CoxeterSystem& system, const Word& word, std::size_t j) {
  if (j < 1 || j > word.size())
    throw InvalidInputError("deletion index " + std::to_string(j) + " out of range 1.." + std::to_string(word.size()));
  const RootSequence seq = root_sequence(system, word);
  Word reduced_word = word;
  reduced_word.erase(reduced_word.begin() + static_cast<std::ptrdiff_t>(j - 1));
  RootSequence predicted;
  predicted.reserve(word.size() - 1);
  const Root& theta = seq[j - 1];
  for (std::size_t k = 0; k + 1 < j; ++k) predicted.push_back(reflect(system, seq[k], theta));
  for (std::size_t k = j; k < seq.size(); ++k) predicted.push_back(seq[k]);
  return {std::move(reduced_word), std::move(predicted)};
}

Word element_from_biconvex(const CoxeterSystem& system, const std::vector<Root>& roots) {
  for (const auto& r : roots)
    if (r.coords.size() != system.rank() || !r.is_positive())
      throw NotBiconvexError("input contains a non-positive root");
  std::vector<Root> current = roots;
  Word reversed;
  while (!current.empty()) {
    int peel = -1;
    std::size_t where = 0;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const int s = current[i].simple_index();
      if (s >= 0 && (peel < 0 || s < peel)) {
        peel = s;
        where = i;
      }
    }
    if (peel < 0) throw NotBiconvexError("no simple root among " + std::to_string(current.size()) + " remaining roots");
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(where));
    for (auto& r : current) {
      r = apply_generator(system, peel, r);
      bool positive = false;
      try {
        positive = r.is_positive();
      } catch (const InternalError&) {
        positive = false;
      }
      if (!positive) throw NotBiconvexError("peeled image is not positive");
    }
    reversed.push_back(peel);
  }
  Word word(reversed.rbegin(), reversed.rend());
  const RootSequence check = root_sequence(system, word);
  for (const auto& r : check)
    if (!r.is_positive()) throw NotBiconvexError("reconstructed word is not reduced");
  if (!same_root_set(check, roots)) throw NotBiconvexError("reconstructed inversion set differs");
  return word;
}

bool same_root_set(const std::vector<Root>& a, const std::vector<Root>& b) {
  std::set<Root, RootKeyLess> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return sa.size() == a.size() && sb.size() == b.size() && sa.size() == sb.size() &&
         std::equal(sa.begin(), sa.end(), sb.begin());
}

}  // namespace coxlab
