#pragma once

// Input parsing, built-in systems and report rendering.

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxlab/analysis.hpp"

namespace coxlab {

using json = nlohmann::ordered_json;

// A2, A3, B2, B3, H3, Atilde2 and I2(m).
CoxeterSystem builtin_system(const std::string& name);
std::vector<std::string> builtin_names();

CoxeterSystem parse_system_json(const std::string& text);
CoxeterSystem load_system_file(const std::string& path);
// Whitespace-separated generator names, or a JSON array of names.
Word parse_word(const CoxeterSystem& system, const std::string& text);

json scalar_json(const Scalar& x);
json root_json(const Root& r);
json line_json(const Line& line);
json labeling_json(const Labeling& labeling);
json tournament_json(const Tournament& tournament);
json report_json(const CoxeterSystem& system, const ClassificationReport& report);

// Letters A, B, C, ... by first appearance in a root sequence.
class RootNames {
 public:
  explicit RootNames(const RootSequence& seq);
  std::string operator()(const Root& r) const;

 private:
  std::map<std::string, std::string> names_;
};

std::string segment_dot(const SegmentStructure& structure, const RootNames& names);
json segment_json(const SegmentStructure& structure, const RootNames& names);

struct VerifySummary {
  std::size_t elements = 0;
  std::size_t deletion_checks = 0;
  std::size_t deletion_mismatches = 0;
  std::size_t bijection_mismatches = 0;
  std::size_t covering_mismatches = 0;
  std::size_t freely_braided_mismatches = 0;
  std::size_t state_map_mismatches = 0;
  std::size_t engine_mismatches = 0;

  bool passed() const {
    return deletion_mismatches + bijection_mismatches + covering_mismatches + freely_braided_mismatches +
               state_map_mismatches + engine_mismatches ==
           0;
  }
};

// Oracle sweep over every element up to max_length.
VerifySummary verify_sweep(const CoxeterSystem& system, std::size_t max_length, const Budget& budget,
                           std::ostream* log = nullptr);

}  // namespace coxlab
