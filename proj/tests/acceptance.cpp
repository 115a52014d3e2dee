// Prints one PASS/FAIL line per acceptance criterion and exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "coxlab/analysis.hpp"
#include "coxlab/io.hpp"
#include "fixtures.hpp"

using namespace coxlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.ok = false;
    out.detail += " (over time limit)";
  }
  if (!out.ok) ++failures;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (out.ok ? "PASS" : "FAIL") << " " << id << " " << title << " [" << buf << "]";
  if (!out.detail.empty()) std::cout << " " << out.detail;
  std::cout << std::endl;
}

Outcome golden_b3() {
  const CoxeterSystem b3 = builtin_system("B3");
  const Word w = parse_word(b3, "u s t s t u");
  const auto all = enumerate_all(b3, w);
  Outcome out;
  std::set<Word> expected;
  for (const auto& g : fixtures::golden_words()) expected.insert(parse_word(b3, g.word));
  if (std::set<Word>(all.reduced_words.begin(), all.reduced_words.end()) != expected || all.reduced_words.size() != 4)
    return {false, "reduced words differ"};
  for (const auto& g : fixtures::golden_words()) {
    const Labeling t = encode(b3, parse_word(b3, g.word));
    for (const auto& [name, label] : g.labels)
      if (t.label_of(fixtures::chart_root(b3, name)) != label) return {false, "label table differs for " + g.word};
    if (t.roots.size() != g.labels.size()) return {false, "support size differs for " + g.word};
  }
  if (!all.counts.agree()) return {false, "route counts differ"};
  return out;
}

Outcome deletion_golden() {
  const CoxeterSystem b3 = builtin_system("B3");
  const Word w = parse_word(b3, "u s t s t u");
  const auto phi = inversion_set(b3, w);
  const std::size_t c = static_cast<std::size_t>(std::find(phi.roots.begin(), phi.roots.end(), fixtures::chart_root(b3, "C")) - phi.roots.begin()) + 1;
  const std::size_t d = static_cast<std::size_t>(std::find(phi.roots.begin(), phi.roots.end(), fixtures::chart_root(b3, "D")) - phi.roots.begin()) + 1;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    const std::size_t want = j == c ? 3 : j == d ? 1 : 5;
    const std::size_t got = deletion_length(b3, w, j);
    const auto rec = length_and_reducedness(b3, delete_generator(b3, w, j).first);
    if (got != want || rec.length != want || rec.reduced != (want == 5))
      return {false, "position " + std::to_string(j)};
  }
  return {};
}

Outcome deletion_sweep() {
  std::size_t checks = 0, mismatches = 0;
  for (const auto& [name, len] : std::vector<std::pair<std::string, std::size_t>>{
           {"A3", 8}, {"B3", 8}, {"H3", 7}, {"Atilde2", 7}}) {
    const CoxeterSystem sys = builtin_system(name);
    for (const Word& w : elements_up_to(sys, len))
      for (const auto& x : enumerate_reduced(sys, w))
        for (std::size_t j = 1; j <= x.size(); ++j) {
          ++checks;
          if (deletion_length(sys, x, j) != deletion_length_oracle(sys, x, j)) ++mismatches;
        }
  }
  return {mismatches == 0, std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches"};
}

Outcome bijection_sweep() {
  std::size_t elements = 0, mismatches = 0;
  for (const char* name : {"A3", "B3", "Atilde2", "H3"}) {
    const CoxeterSystem sys = builtin_system(name);
    for (const Word& w : elements_up_to(sys, 7)) {
      ++elements;
      if (!enumerate_all(sys, w, {}, false).counts.agree()) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(elements) + " elements, " + std::to_string(mismatches) + " mismatches"};
}

Outcome census() {
  const CoxeterSystem b3 = builtin_system("B3");
  const auto st = build_structure(b3, inversion_set(b3, parse_word(b3, "u s t s t u")));
  if (st.lines.size() != fixtures::golden_lines().size()) return {false, "line count " + std::to_string(st.lines.size())};
  for (const auto& g : fixtures::golden_lines()) {
    const auto members = fixtures::chart_roots(b3, g.members);
    const Line* found = nullptr;
    for (const auto& l : st.lines)
      if (same_root_set(l.members, members)) found = &l;
    if (!found) return {false, "missing line " + g.members};
    if ((found->kind == LineKind::Full) != g.full) return {false, "kind of " + g.members};
    if (!g.full && found->members[found->canonical_end()] != fixtures::chart_root(b3, std::string(1, g.canonical)))
      return {false, "canonical end of " + g.members};
  }
  return {true, std::to_string(st.full_count()) + " full, " + std::to_string(st.partial_count()) + " partial"};
}

Outcome covering() {
  const CoxeterSystem a3 = builtin_system("A3");
  const CoxeterSystem at = builtin_system("Atilde2");
  const auto yes = fully_covering(a3, parse_word(a3, "t s u t"));
  const auto no = fully_covering(at, parse_word(at, "t u s t u"));
  if (!yes.structural || !yes.oracle) return {false, "A3 t s u t"};
  if (no.structural || no.oracle) return {false, "Atilde2 t u s t u"};
  std::size_t elements = 0, mismatches = 0;
  for (const Word& w : elements_up_to(a3, 8)) {
    ++elements;
    const auto r = fully_covering(a3, w);
    if (r.structural != r.oracle) ++mismatches;
  }
  return {mismatches == 0, std::to_string(elements) + " elements, " + std::to_string(mismatches) + " mismatches"};
}

Outcome freely_braided_sweep() {
  std::size_t elements = 0, mismatches = 0, witnesses = 0;
  for (const auto& [name, len] :
       std::vector<std::pair<std::string, std::size_t>>{{"A3", 8}, {"B3", 7}, {"Atilde2", 7}}) {
    const CoxeterSystem sys = builtin_system(name);
    for (const Word& w : elements_up_to(sys, len)) {
      ++elements;
      const auto r = freely_braided(sys, w);
      if (r.freely_braided != (r.class_count == (std::size_t{1} << r.n))) ++mismatches;
      if (r.state_image_size != r.class_count) ++mismatches;
      if (!r.freely_braided) ++witnesses;
    }
  }
  return {mismatches == 0, std::to_string(elements) + " elements, " + std::to_string(witnesses) +
                               " not freely braided, " + std::to_string(mismatches) + " mismatches"};
}

Outcome chebyshev() {
  const RingSpec r7(7);
  const std::vector<Scalar> points = {Scalar(r7, Rational(1)), Scalar(r7, Rational(3, 2)), Scalar::generator(r7)};
  for (const auto& a : points) {
    std::vector<Scalar> u;
    for (long k = -30; k <= 30; ++k) u.push_back(chebyshev_u(k, a));
    const auto at = [&](long k) -> const Scalar& { return u[static_cast<std::size_t>(k + 30)]; };
    const Scalar two(r7, Rational(2));
    if (!at(0).is_zero() || at(1) != Scalar(r7, Rational(1))) return {false, "initial conditions"};
    for (long n = -10; n <= 10; ++n) {
      if (at(n + 1) != two * a * at(n) - at(n - 1)) return {false, "recurrence"};
      if (at(-n) != -at(n)) return {false, "antisymmetry"};
      for (long i = -10; i <= 10; ++i)
        for (long j = -10; j <= 10; ++j)
          if (at(i) * at(n + i + j) + at(j) * at(n) != at(i + j) * at(n + i)) return {false, "identity"};
    }
  }
  struct Plane {
    const char* system;
    std::vector<int> gamma, delta;
  };
  for (const Plane& p : std::vector<Plane>{{"B2", {1, 0}, {0, 1}}, {"H3", {1, 0, 0}, {0, 1, 0}}, {"Atilde2", {0, 0, 1}, {1, 1, 0}}}) {
    const CoxeterSystem sys = builtin_system(p.system);
    Root g, d;
    for (int c : p.gamma) g.coords.push_back(sys.rational(c));
    for (int c : p.delta) d.coords.push_back(sys.rational(c));
    const auto seq = local_sequence(sys, g, d, -6, 6);
    const Scalar a = -sys.bilinear(g.coords, d.coords);
    for (long k = -6; k <= 6; ++k) {
      const Scalar x = chebyshev_u(k, a), y = chebyshev_u(k - 1, a);
      for (std::size_t i = 0; i < g.coords.size(); ++i)
        if (seq.gamma_at(k)[i] != x * g.coords[i] + y * d.coords[i] ||
            seq.delta_at(k)[i] != x * d.coords[i] + y * g.coords[i])
          return {false, std::string("local sequence in ") + p.system};
    }
  }
  return {};
}

Outcome a3_longest() {
  const CoxeterSystem a3 = builtin_system("A3");
  const Word w0 = parse_word(a3, "s t s u t s");
  const auto oracle = enumerate_reduced_by_descents(a3, w0);
  const auto all = enumerate_all(a3, w0);
  std::set<Word> from_labelings, from_tournaments;
  for (const auto& l : all.labelings) from_labelings.insert(decode(a3, l));
  for (const auto& t : all.tournaments) from_tournaments.insert(decode(a3, labeling_from_tournament(t)));
  const bool ok = oracle.size() == 16 && std::set<Word>(all.reduced_words.begin(), all.reduced_words.end()) == oracle &&
                  from_labelings == oracle && from_tournaments == oracle;
  return {ok, std::to_string(oracle.size()) + " by descents; " + std::to_string(all.counts.reduced_words) + "/" +
                  std::to_string(all.counts.labelings) + "/" + std::to_string(all.counts.tournaments) + " by routes"};
}

}  // namespace

int main() {
  run(1, "B3 golden reduced words and encodings", 1.0, golden_b3);
  run(2, "B3 deletion lengths", 1.0, deletion_golden);
  run(3, "deletion sweep", 300.0, deletion_sweep);
  run(4, "five-set bijection sweep", 300.0, bijection_sweep);
  run(5, "B3 segment census", 0, census);
  run(6, "covering classification", 0, covering);
  run(7, "freely braided equivalence", 600.0, freely_braided_sweep);
  run(8, "Chebyshev suite", 0, chebyshev);
  run(9, "A3 longest element count", 0, a3_longest);
  return failures == 0 ? 0 : 1;
}
