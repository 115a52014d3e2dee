#include <doctest.h>

#include <random>

#include "coxlab/analysis.hpp"
#include "coxlab/errors.hpp"
#include "coxlab/io.hpp"
#include "fixtures.hpp"

using namespace coxlab;

namespace {

Labeling golden_labeling(const CoxeterSystem& b3, const fixtures::GoldenWord& g) {
  Labeling out;
  for (const auto& [name, label] : g.labels) {
    out.roots.push_back(fixtures::chart_root(b3, name));
    out.labels.push_back(label);
  }
  return out;
}

SegmentStructure b3_structure(const CoxeterSystem& b3) {
  return build_structure(b3, inversion_set(b3, parse_word(b3, "u s t s t u")));
}

}  // namespace

TEST_CASE("standard encodings of the B3 example") {
  const CoxeterSystem b3 = builtin_system("B3");
  const auto st = b3_structure(b3);
  for (const auto& g : fixtures::golden_words()) {
    const Word x = parse_word(b3, g.word);
    const Labeling t = encode(b3, x);
    CHECK(t == golden_labeling(b3, g));
    CHECK(t.is_sequential());
    CHECK(is_standard(t, st));
    CHECK(is_standard_by_triples(b3, t, st));
    CHECK(satisfies_restrictions(t, st));
    CHECK(decode(b3, t) == x);
    CHECK(decode(b3, golden_labeling(b3, g)) == x);
    const Tournament tour = tournament_from_labeling(t);
    CHECK(labeling_from_tournament(tour) == t);
  }
  CHECK(encode(b3, {}).roots.empty());
  CHECK(decode(b3, Labeling{}).empty());
  const Tournament order{fixtures::chart_roots(b3, "FBCDEA")};
  CHECK(labeling_from_tournament(order) == encode(b3, parse_word(b3, "u s t s t u")));
  const Tournament single = tournament_from_labeling(encode(b3, {0}));
  CHECK(single.order.size() == 1);
}

TEST_CASE("non-standard labelings") {
  const CoxeterSystem b3 = builtin_system("B3");
  const auto st = b3_structure(b3);
  Labeling bad;
  bad.roots = fixtures::chart_roots(b3, "AFE");
  bad.labels = {5, 2, 1};
  CHECK_FALSE(is_standard(bad, st));
  CHECK_FALSE(is_standard_by_triples(b3, bad, st));
  CHECK(is_standard(Labeling{}, st));
  CHECK(is_standard_by_triples(b3, Labeling{}, st));

  // Sequential but breaking the restriction on {E, F}.
  Labeling swapped = encode(b3, parse_word(b3, "u s t s t u"));
  for (auto& l : swapped.labels) {
    if (l == 1) {
      l = 5;
    } else if (l == 5) {
      l = 1;
    }
  }
  CHECK_FALSE(satisfies_restrictions(swapped, st));
  CHECK_THROWS_AS(decode(b3, swapped), NotStandardError);

  Labeling gap = encode(b3, parse_word(b3, "u s t s t u"));
  gap.labels[0] = 9;
  CHECK_THROWS_AS(decode(b3, gap), NotStandardError);
}

TEST_CASE("A3 t s t u restriction example") {
  const CoxeterSystem a3 = builtin_system("A3");
  const Word x = parse_word(a3, "t s t u");
  const auto st = build_structure(a3, inversion_set(a3, x));
  Labeling t = encode(a3, x);
  CHECK(satisfies_restrictions(t, st));
  const Root u = simple_root(a3, 2);
  Root tu;
  tu.coords = {a3.zero(), a3.rational(1), a3.rational(1)};
  std::size_t iu = 0, itu = 0;
  for (std::size_t i = 0; i < t.roots.size(); ++i) {
    if (t.roots[i] == u) iu = i;
    if (t.roots[i] == tu) itu = i;
  }
  std::swap(t.labels[iu], t.labels[itu]);
  CHECK_FALSE(satisfies_restrictions(t, st));
  CHECK(satisfies_restrictions(encode(a3, {1}), build_structure(a3, inversion_set(a3, {1}))));
}

TEST_CASE("enumerate_all small cases") {
  const CoxeterSystem b3 = builtin_system("B3");
  const auto all = enumerate_all(b3, parse_word(b3, "u s t s t u"));
  CHECK(all.counts.reduced_words == 4);
  CHECK(all.counts.agree());
  std::set<Word> expected;
  for (const auto& g : fixtures::golden_words()) expected.insert(parse_word(b3, g.word));
  CHECK(std::set<Word>(all.reduced_words.begin(), all.reduced_words.end()) == expected);
  for (std::size_t i = 0; i < all.reduced_words.size(); ++i) {
    CHECK(all.labelings[i] == encode(b3, all.reduced_words[i]));
    CHECK(labeling_from_tournament(all.tournaments[i]) == encode(b3, all.reduced_words[i]));
  }
  const auto id = enumerate_all(b3, {});
  CHECK(id.counts.reduced_words == 1);
  CHECK(id.counts.agree());

  const CoxeterSystem a3 = builtin_system("A3");
  const auto w0 = enumerate_all(a3, parse_word(a3, "s t s u t s"), {}, false);
  CHECK(w0.counts.reduced_words == 16);
  CHECK(w0.counts.labelings == 16);
  CHECK(w0.counts.tournaments == 16);
}

TEST_CASE("correspondence invariants over short elements") {
  for (const char* name : {"A3", "B3", "Atilde2", "H3"}) {
    const CoxeterSystem sys = builtin_system(name);
    for (const Word& w : elements_up_to(sys, 6)) {
      const auto st = build_structure(sys, inversion_set(sys, w));
      const auto words = enumerate_reduced(sys, w);
      std::set<Word> from_labelings, from_tournaments;
      enumerate_labelings(st, {}, [&](const Labeling& l) {
        CHECK(is_standard_by_triples(sys, l, st));
        from_labelings.insert(decode(sys, l));
      });
      enumerate_tournaments(st, {}, [&](const Tournament& t) {
        const Labeling l = labeling_from_tournament(t);
        CHECK(is_standard(l, st));
        CHECK(satisfies_restrictions(l, st));
        from_tournaments.insert(decode(sys, l));
      });
      CHECK(from_labelings == words);
      CHECK(from_tournaments == words);
      for (const auto& x : words) {
        const Labeling t = encode(sys, x);
        CHECK(decode(sys, t) == x);
        for (const auto& line : st.lines) {
          std::vector<std::size_t> v;
          for (const auto& r : line.members) v.push_back(t.label_of(r));
          bool up = true, down = true;
          for (std::size_t i = 1; i < v.size(); ++i) {
            up = up && v[i] > v[i - 1];
            down = down && v[i] < v[i - 1];
          }
          CHECK((up || down));
          if (line.kind == LineKind::Partial) CHECK((line.canonical_end() == 0 ? down : up));
        }
      }
    }
  }
}

TEST_CASE("is_standard agrees with the triple check on random labelings") {
  std::mt19937 rng(99);
  const CoxeterSystem b3 = builtin_system("B3");
  const CoxeterSystem at = builtin_system("Atilde2");
  for (const auto& [sys, word] : {std::pair{&b3, "u s t s t u"}, std::pair{&at, "t u s t u"}}) {
    const auto phi = inversion_set(*sys, parse_word(*sys, word));
    const auto st = build_structure(*sys, phi);
    std::uniform_int_distribution<std::size_t> label(0, 4);
    for (int i = 0; i < 300; ++i) {
      Labeling l;
      for (const auto& r : phi.roots) {
        const std::size_t v = label(rng);
        if (v == 0) continue;
        l.roots.push_back(r);
        l.labels.push_back(v);
      }
      CHECK(is_standard(l, st) == is_standard_by_triples(*sys, l, st));
    }
  }
}

TEST_CASE("budget") {
  const CoxeterSystem a3 = builtin_system("A3");
  Budget tight;
  tight.max_reduced = 3;
  const Word w0 = parse_word(a3, "s t s u t s");
  CHECK_THROWS_AS(enumerate_reduced(a3, w0, tight), ResourceError);
  CHECK_THROWS_AS(enumerate_reduced_by_descents(a3, w0, tight), ResourceError);
  const auto st = build_structure(a3, inversion_set(a3, w0));
  CHECK_THROWS_AS(enumerate_labelings(st, tight), ResourceError);
  CHECK_THROWS_AS(enumerate_tournaments(st, tight), ResourceError);
  Budget short_words;
  short_words.max_length = 5;
  CHECK_THROWS_AS(enumerate_reduced(a3, w0, short_words), ResourceError);
}
