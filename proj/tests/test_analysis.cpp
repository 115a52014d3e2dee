#include <doctest.h>

#include "coxlab/analysis.hpp"
#include "coxlab/errors.hpp"
#include "coxlab/io.hpp"
#include "fixtures.hpp"

using namespace coxlab;

namespace {

std::size_t class_of(const std::vector<std::vector<Word>>& classes, const Word& w) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), w) != classes[i].end()) return i;
  return classes.size();
}

}  // namespace

TEST_CASE("braid moves in the B3 example") {
  const CoxeterSystem b3 = builtin_system("B3");
  const Word w = parse_word(b3, "u s t s t u");
  const auto moves = find_braid_moves(b3, w);
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == BraidMove{0, 2, 0, 2});
  CHECK(moves[1] == BraidMove{1, 0, 1, 4});
  CHECK(apply_braid_move(w, moves[1]) == parse_word(b3, "u t s t s u"));
  CHECK(apply_braid_move(w, moves[0]) == parse_word(b3, "s u t s t u"));
  CHECK(find_braid_moves(b3, parse_word(b3, "s u")).size() == 1);
  CHECK(find_braid_moves(b3, {}).empty());
  const CoxeterSystem i2 = builtin_system("I2(inf)");
  CHECK(find_braid_moves(i2, parse_word(i2, "s t s t s t")).empty());
}

TEST_CASE("reduced expressions of the B3 example") {
  const CoxeterSystem b3 = builtin_system("B3");
  const Word w = parse_word(b3, "u s t s t u");
  const auto words = enumerate_reduced(b3, w);
  std::set<Word> expected;
  for (const auto& g : fixtures::golden_words()) expected.insert(parse_word(b3, g.word));
  CHECK(words == expected);
  CHECK(enumerate_reduced_by_descents(b3, w) == expected);
  const auto classes = commutation_classes(b3, words);
  REQUIRE(classes.size() == 2);
  CHECK(class_of(classes, parse_word(b3, "u s t s t u")) == class_of(classes, parse_word(b3, "s u t s t u")));
  CHECK(class_of(classes, parse_word(b3, "u t s t s u")) == class_of(classes, parse_word(b3, "u t s t u s")));
  CHECK(class_of(classes, parse_word(b3, "u s t s t u")) != class_of(classes, parse_word(b3, "u t s t s u")));
  CHECK_THROWS_AS(enumerate_reduced(b3, parse_word(b3, "s s")), NotReducedError);
  CHECK(enumerate_reduced(b3, {}) == std::set<Word>{Word{}});
}

TEST_CASE("A3 longest element has 16 reduced words") {
  const CoxeterSystem a3 = builtin_system("A3");
  const Word w0 = parse_word(a3, "s t s u t s");
  CHECK(enumerate_reduced_by_descents(a3, w0).size() == 16);
  CHECK(enumerate_reduced(a3, w0) == enumerate_reduced_by_descents(a3, w0));
  CHECK(commutation_classes(a3, enumerate_reduced(a3, w0)).size() == 8);
}

TEST_CASE("deletion lengths in the B3 example") {
  const CoxeterSystem b3 = builtin_system("B3");
  const Word w = parse_word(b3, "u s t s t u");
  const auto seq = root_sequence(b3, w);
  CHECK(seq == fixtures::chart_roots(b3, "FBCDEA"));
  const std::vector<std::size_t> expected = {5, 5, 3, 1, 5, 5};
  for (std::size_t j = 1; j <= 6; ++j) {
    CHECK(deletion_length(b3, w, j) == expected[j - 1]);
    CHECK(deletion_length_oracle(b3, w, j) == expected[j - 1]);
  }
  CHECK_THROWS_AS(deletion_length(b3, w, 0), InvalidInputError);
  CHECK_THROWS_AS(deletion_length(b3, w, 7), InvalidInputError);
}

TEST_CASE("contractible sets and freely braided elements") {
  const CoxeterSystem b3 = builtin_system("B3");
  const Word w = parse_word(b3, "u s t s t u");
  const auto st = build_structure(b3, inversion_set(b3, w));
  const auto con = contractible_long_sets(b3, st, enumerate_reduced(b3, w));
  REQUIRE(con.size() == 1);
  CHECK(same_root_set(con[0].members, fixtures::chart_roots(b3, "BCDE")));
  const auto fb = freely_braided(b3, w);
  CHECK(fb.freely_braided);
  CHECK(fb.n == 1);
  CHECK(fb.class_count == 2);
  CHECK(fb.state_image_size == 2);

  const Word base = parse_word(b3, "s u t s t u");
  CHECK(state_vector(b3, base, base, con) == std::vector<bool>{false});
  CHECK(state_vector(b3, base, w, con) == std::vector<bool>{false});
  CHECK(state_vector(b3, base, parse_word(b3, "u t s t u s"), con) == std::vector<bool>{true});

  const Word contracted = contracted_reduced_expression(b3, parse_word(b3, "u t s t u s"));
  CHECK(consecutive_in(root_sequence(b3, contracted), con[0]));
  const auto classes = commutation_classes(b3, enumerate_reduced(b3, w));
  CHECK(class_of(classes, contracted) == class_of(classes, parse_word(b3, "u t s t u s")));
  CHECK(contracted_reduced_expression(b3, w) == w);
  CHECK(contracted_reduced_expression(b3, {}).empty());
}

TEST_CASE("short braid avoidance") {
  const CoxeterSystem at = builtin_system("Atilde2");
  const Word x = parse_word(at, "t u s t u");
  CHECK(short_braid_avoiding(at, enumerate_reduced(at, x)));
  CHECK(enumerate_reduced(at, x).size() == 1);
  const CoxeterSystem a3 = builtin_system("A3");
  CHECK_FALSE(short_braid_avoiding(a3, enumerate_reduced(a3, parse_word(a3, "s t s"))));
  CHECK(short_braid_avoiding(a3, enumerate_reduced(a3, {})));
}

TEST_CASE("covering examples") {
  const CoxeterSystem a3 = builtin_system("A3");
  const auto c = fully_covering(a3, parse_word(a3, "t s u t"));
  CHECK(c.structural);
  CHECK(c.oracle);
  CHECK(c.covered_count == 4);
  const CoxeterSystem at = builtin_system("Atilde2");
  const auto d = fully_covering(at, parse_word(at, "t u s t u"));
  CHECK_FALSE(d.structural);
  CHECK_FALSE(d.oracle);
  const CoxeterSystem b3 = builtin_system("B3");
  const auto e = fully_covering(b3, parse_word(b3, "u s t s t u"));
  CHECK_FALSE(e.structural);
  CHECK(e.covered_count == 4);
}

TEST_CASE("classify report") {
  const CoxeterSystem b3 = builtin_system("B3");
  const auto r = classify(b3, parse_word(b3, "u s t s t u"));
  CHECK(r.length == 6);
  CHECK(r.reduced_count == 4);
  CHECK(r.commutation_class_count == 2);
  CHECK(r.n == 1);
  CHECK(r.freely_braided);
  CHECK_FALSE(r.fully_covering);
  CHECK_FALSE(r.fully_covering_oracle);
  CHECK_FALSE(r.short_braid_avoiding);
  CHECK_THROWS_AS(classify(b3, parse_word(b3, "s t t")), NotReducedError);
}

TEST_CASE("elements up to a length") {
  CHECK(elements_up_to(builtin_system("A3"), 10).size() == 24);
  CHECK(elements_up_to(builtin_system("B3"), 12).size() == 48);
  CHECK(elements_up_to(builtin_system("H3"), 20).size() == 120);
  const auto at = elements_up_to(builtin_system("Atilde2"), 3);
  CHECK(at.size() == 1 + 3 + 6 + 9);
  CHECK(elements_up_to(builtin_system("A3"), 0) == std::vector<Word>{Word{}});
}

TEST_CASE("reversal law, move sets and the heap law over short elements") {
  for (const char* name : {"A3", "B3", "Atilde2", "H3"}) {
    const CoxeterSystem sys = builtin_system(name);
    for (const Word& w : elements_up_to(sys, 6)) {
      const auto phi = inversion_set(sys, w);
      const auto words = enumerate_reduced(sys, w);
      for (const auto& x : words) {
        const RootSequence before = root_sequence(sys, x);
        for (const auto& move : find_braid_moves(sys, x)) {
          const RootSequence after = root_sequence(sys, apply_braid_move(x, move));
          const std::size_t lo = move.position, hi = lo + static_cast<std::size_t>(move.m);
          for (std::size_t i = 0; i < before.size(); ++i) {
            const std::size_t mirror = i >= lo && i < hi ? lo + hi - 1 - i : i;
            CHECK(after[i] == before[mirror]);
          }
          const std::vector<Root> block(before.begin() + static_cast<long>(lo), before.begin() + static_cast<long>(hi));
          const Line l = line_through(sys, phi, block.front(), block.back());
          CHECK(same_root_set(l.members, block));
          CHECK(l.kind == LineKind::Full);
        }
        for (std::size_t i = 0; i + 1 < before.size(); ++i)
          if (sys.bilinear(before[i].coords, before[i + 1].coords).is_zero()) {
            const Line l = line_through(sys, phi, before[i], before[i + 1]);
            CHECK(l.members.size() == 2);
            CHECK(l.kind == LineKind::Full);
          }
      }
      const auto classes = commutation_classes(sys, words);
      std::vector<Word> list(words.begin(), words.end());
      std::vector<RootOrder> orders;
      for (const auto& x : list) orders.push_back(commutation_order(sys, x));
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
          CHECK((orders[i] == orders[j]) == (class_of(classes, list[i]) == class_of(classes, list[j])));
    }
  }
}

TEST_CASE("freely braided characterization over short elements") {
  std::size_t not_freely_braided = 0;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = builtin_system(name);
    for (const Word& w : elements_up_to(sys, 8)) {
      const auto r = classify(sys, w);
      CHECK(r.freely_braided == (r.commutation_class_count == (std::size_t{1} << r.n)));
      CHECK(r.state_image_size == r.commutation_class_count);
      CHECK(r.fully_covering == r.fully_covering_oracle);
      if (!r.freely_braided) ++not_freely_braided;
    }
  }
  CHECK(not_freely_braided > 0);
}
