#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxlab/errors.hpp"
#include "coxlab/io.hpp"

using namespace coxlab;

namespace {

enum class Format { Text, Json, Dot };

struct RunConfig {
  std::string system_file;
  std::string builtin;
  std::string word;
  bool json = false;
  bool dot = false;
  bool text = false;
  std::optional<std::size_t> max_length;
  std::size_t budget = Budget{}.max_reduced;

  Format format(Format fallback) const {
    if (json) return Format::Json;
    if (dot) return Format::Dot;
    if (text) return Format::Text;
    return fallback;
  }
  Budget limits() const {
    Budget b;
    b.max_reduced = budget;
    if (max_length) b.max_length = *max_length;
    return b;
  }
};

CoxeterSystem load_system(const RunConfig& cfg) {
  if (!cfg.system_file.empty() && !cfg.builtin.empty())
    throw InvalidInputError("give either --system or --builtin, not both");
  if (!cfg.system_file.empty()) return load_system_file(cfg.system_file);
  if (!cfg.builtin.empty()) return builtin_system(cfg.builtin);
  throw InvalidInputError("a system is required (--system FILE or --builtin NAME)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string names_of(const std::vector<Root>& roots, const RootNames& names) {
  std::string out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ' ';
    out += names(roots[i]);
  }
  return out;
}

std::string line_text(const Line& line, const RootNames& names) {
  std::string out = "{" + names_of(line.members, names) + "} ";
  out += line.kind == LineKind::Full ? "full" : "partial, canonical end " + names(line.members[line.canonical_end()]);
  return out;
}

void print_report_text(std::ostream& out, const CoxeterSystem& system, const ClassificationReport& r,
                       const RootNames& names) {
  out << "reduced expressions: " << r.reduced_count << "\n";
  out << "commutation classes: " << r.commutation_class_count << "\n";
  out << "contractible long sets (N = " << r.n << "):";
  if (r.contractible_long_sets.empty()) out << " none";
  out << "\n";
  for (const auto& l : r.contractible_long_sets) out << "  {" << names_of(l.members, names) << "}\n";
  out << "freely braided: " << yes_no(r.freely_braided) << "\n";
  out << "fully covering: " << yes_no(r.fully_covering) << "\n";
  out << "covered count: " << r.covered_count << "\n";
  out << "short-braid avoiding: " << yes_no(r.short_braid_avoiding) << "\n";
  out << "state map image: " << r.state_image_size << "\n";
  (void)system;
}

int cmd_analyze(const RunConfig& cfg) {
  const CoxeterSystem system = load_system(cfg);
  const Word word = parse_word(system, cfg.word);
  const Budget budget = cfg.limits();
  const InversionOfElement phi = inversion_set(system, word);
  const SegmentStructure structure = build_structure(system, phi);
  const ClassificationReport report = classify(system, word, budget);
  const std::size_t labelings = enumerate_labelings(structure, budget);
  const RootNames names(phi.roots);
  if (cfg.format(Format::Text) == Format::Json) {
    json roots = json::array();
    for (const auto& r : phi.roots) roots.push_back(root_json(r));
    json lines = json::array();
    for (const auto& l : structure.lines) lines.push_back(line_json(l));
    json out{{"length", phi.size()}, {"inversion_set", roots}, {"lines", lines}, {"labeling_count", labelings},
             {"classification", report_json(system, report)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "word: " << system.word_to_string(word) << "\n";
  std::cout << "length: " << phi.size() << "\n";
  std::cout << "root sequence:\n";
  for (const auto& r : phi.roots) std::cout << "  " << names(r) << " = " << r.to_string() << "\n";
  std::cout << "lines (" << structure.full_count() << " full, " << structure.partial_count() << " partial):\n";
  for (const auto& l : structure.lines) std::cout << "  " << line_text(l, names) << "\n";
  std::cout << "labelings: " << labelings << "\n";
  print_report_text(std::cout, system, report, names);
  return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
  const CoxeterSystem system = load_system(cfg);
  const Word word = parse_word(system, cfg.word);
  const EnumerationResult all = enumerate_all(system, word, cfg.limits(), true);
  if (!all.counts.agree())
    throw InternalError("enumeration routes disagree: " + std::to_string(all.counts.reduced_words) + "/" +
                        std::to_string(all.counts.labelings) + "/" + std::to_string(all.counts.tournaments));
  if (cfg.format(Format::Text) == Format::Json) {
    json words = json::array(), labelings = json::array(), tournaments = json::array();
    for (const auto& w : all.reduced_words) words.push_back(system.word_to_string(w));
    for (const auto& l : all.labelings) labelings.push_back(labeling_json(l));
    for (const auto& t : all.tournaments) tournaments.push_back(tournament_json(t));
    json out{{"count", all.counts.reduced_words},
             {"reduced_words", words},
             {"labelings", labelings},
             {"tournaments", tournaments}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const RootNames names(root_sequence(system, word));
  std::cout << "count: " << all.counts.reduced_words << "\n";
  for (std::size_t i = 0; i < all.reduced_words.size(); ++i) {
    const Labeling lab = encode(system, all.reduced_words[i]);
    std::cout << "(" << system.word_to_string(all.reduced_words[i]) << ")";
    const Labeling sorted = lab.sorted();
    std::string table;
    for (std::size_t k = 0; k < sorted.roots.size(); ++k) {
      table += (k ? ", " : "  ");
      table += names(sorted.roots[k]) + "=" + std::to_string(sorted.labels[k]);
    }
    std::cout << table << "\n";
  }
  return 0;
}

int cmd_segment(const RunConfig& cfg) {
  const CoxeterSystem system = load_system(cfg);
  const Word word = parse_word(system, cfg.word);
  const InversionOfElement phi = inversion_set(system, word);
  const SegmentStructure structure = build_structure(system, phi);
  const RootNames names(phi.roots);
  switch (cfg.format(Format::Dot)) {
    case Format::Json:
      std::cout << segment_json(structure, names).dump(2) << "\n";
      break;
    case Format::Dot:
      std::cout << segment_dot(structure, names);
      break;
    case Format::Text:
      std::cout << structure.points.size() << " points, " << structure.full_count() << " full lines, "
                << structure.partial_count() << " partial lines\n";
      for (const auto& l : structure.lines) std::cout << "  " << line_text(l, names) << "\n";
      break;
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  const CoxeterSystem system = load_system(cfg);
  const Word word = parse_word(system, cfg.word);
  const ClassificationReport report = classify(system, word, cfg.limits());
  if (cfg.format(Format::Text) == Format::Json) {
    std::cout << report_json(system, report).dump(2) << "\n";
    return 0;
  }
  print_report_text(std::cout, system, report, RootNames(root_sequence(system, word)));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const CoxeterSystem system = load_system(cfg);
  const std::size_t max_length = cfg.max_length.value_or(6);
  Budget budget;
  budget.max_reduced = cfg.budget;
  budget.max_length = std::max(budget.max_length, max_length);
  std::ostringstream log;
  const VerifySummary s = verify_sweep(system, max_length, budget, &log);
  if (cfg.format(Format::Text) == Format::Json) {
    json out{{"max_length", max_length},
             {"elements", s.elements},
             {"deletion_checks", s.deletion_checks},
             {"deletion_mismatches", s.deletion_mismatches},
             {"bijection_mismatches", s.bijection_mismatches},
             {"covering_mismatches", s.covering_mismatches},
             {"freely_braided_mismatches", s.freely_braided_mismatches},
             {"state_map_mismatches", s.state_map_mismatches},
             {"engine_mismatches", s.engine_mismatches},
             {"passed", s.passed()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << log.str();
    std::cout << "elements: " << s.elements << "\n";
    std::cout << "deletion checks: " << s.deletion_checks << ", mismatches: " << s.deletion_mismatches << "\n";
    std::cout << "bijection mismatches: " << s.bijection_mismatches << "\n";
    std::cout << "covering mismatches: " << s.covering_mismatches << "\n";
    std::cout << "freely braided mismatches: " << s.freely_braided_mismatches << "\n";
    std::cout << "state map mismatches: " << s.state_map_mismatches << "\n";
    std::cout << "engine mismatches: " << s.engine_mismatches << "\n";
    std::cout << (s.passed() ? "PASS" : "FAIL") << "\n";
  }
  return s.passed() ? 0 : 4;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_word) {
  sub->add_option("--system", cfg.system_file, "Coxeter system JSON file");
  sub->add_option("--builtin", cfg.builtin, "Built-in system: A2 A3 B2 B3 H3 Atilde2 I2(m)");
  if (needs_word) sub->add_option("--word", cfg.word, "Reduced word, e.g. \"u s t s t u\"")->required();
  auto* j = sub->add_flag("--json", cfg.json, "JSON output");
  auto* d = sub->add_flag("--dot", cfg.dot, "DOT output");
  auto* t = sub->add_flag("--text", cfg.text, "Human-readable output");
  j->excludes(d)->excludes(t);
  d->excludes(t);
  sub->add_option("--max-length", cfg.max_length, "Word length limit (verify: element length)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", cfg.budget, "Maximum number of reduced expressions")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of reduced expressions in Coxeter groups"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "Inversion set, lines, labelings and classification");
  auto* enumerate = app.add_subcommand("enumerate", "All reduced expressions, labelings and tournaments");
  auto* segment = app.add_subcommand("segment", "Segment structure of the inversion set");
  auto* classify_cmd = app.add_subcommand("classify", "Covering and braiding classification");
  auto* verify = app.add_subcommand("verify", "Oracle sweep over all short elements");
  add_common(analyze, cfg, true);
  add_common(enumerate, cfg, true);
  add_common(segment, cfg, true);
  add_common(classify_cmd, cfg, true);
  add_common(verify, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (segment->parsed()) return cmd_segment(cfg);
    if (classify_cmd->parsed()) return cmd_classify(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 4;
}
