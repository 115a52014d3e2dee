#pragma once

// Worked B3 example: w = u s t s t u with the root chart A..F.

#include <map>
#include <string>
#include <vector>

#include "coxlab/io.hpp"

namespace fixtures {

using namespace coxlab;

inline Scalar root2(const CoxeterSystem& b3) { return cos_entry(4, b3.ring()) * b3.rational(-2); }

// coefficients on (alpha_s, alpha_t, alpha_u); 'r' stands for sqrt(2)
inline Root chart_root(const CoxeterSystem& b3, const std::string& name) {
  const Scalar r = root2(b3), one = b3.rational(1), two = b3.rational(2), zero = b3.zero();
  static const std::map<std::string, std::vector<int>> table = {
      {"A", {0, 0, 1}}, {"B", {1, 0, 0}}, {"C", {-1, 1, 1}}, {"D", {1, -1, -1}}, {"E", {0, 1, 1}}, {"F", {-1, 2, 1}}};
  Root out;
  for (int c : table.at(name)) out.coords.push_back(c == -1 ? r : c == 0 ? zero : c == 1 ? one : two);
  return out;
}

inline std::vector<Root> chart_roots(const CoxeterSystem& b3, const std::string& names) {
  std::vector<Root> out;
  for (char c : names) out.push_back(chart_root(b3, std::string(1, c)));
  return out;
}

struct GoldenWord {
  std::string word;
  std::map<std::string, std::size_t> labels;  // chart name -> label
};

inline const std::vector<GoldenWord>& golden_words() {
  static const std::vector<GoldenWord> words = {
      {"u s t s t u", {{"A", 6}, {"B", 2}, {"C", 3}, {"D", 4}, {"E", 5}, {"F", 1}}},
      {"s u t s t u", {{"A", 6}, {"B", 1}, {"C", 3}, {"D", 4}, {"E", 5}, {"F", 2}}},
      {"u t s t s u", {{"A", 6}, {"B", 5}, {"C", 4}, {"D", 3}, {"E", 2}, {"F", 1}}},
      {"u t s t u s", {{"A", 5}, {"B", 6}, {"C", 4}, {"D", 3}, {"E", 2}, {"F", 1}}},
  };
  return words;
}

// Line census: member names and, for partial lines, the canonical end.
struct GoldenLine {
  std::string members;
  bool full;
  char canonical;  // partial lines only
};

inline const std::vector<GoldenLine>& golden_lines() {
  static const std::vector<GoldenLine> lines = {
      {"AB", true, 0},    {"BF", true, 0},     {"BCDE", true, 0}, {"AE", false, 'A'},
      {"ADF", false, 'A'}, {"AC", false, 'A'}, {"CF", false, 'C'}, {"EF", false, 'E'},
  };
  return lines;
}

}  // namespace fixtures
