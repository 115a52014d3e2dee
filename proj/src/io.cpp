#include "coxlab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "coxlab/errors.hpp"

namespace coxlab {

namespace {

const std::vector<std::string> kNames3 = {"s", "t", "u"};

CoxeterMatrix rank2(int m) { return {{1, m}, {m, 1}}; }

CoxeterMatrix rank3(int st, int tu, int su) { return {{1, st, su}, {st, 1, tu}, {su, tu, 1}}; }

}  // namespace

std::vector<std::string> builtin_names() { return {"A2", "A3", "B2", "B3", "H3", "Atilde2", "I2(m)"}; }

CoxeterSystem builtin_system(const std::string& name) {
  if (name == "A2") return validate_system({"s", "t"}, rank2(3));
  if (name == "B2") return validate_system({"s", "t"}, rank2(4));
  if (name == "A3") return validate_system(kNames3, rank3(3, 3, 2));
  if (name == "B3") return validate_system(kNames3, rank3(4, 3, 2));
  if (name == "H3") return validate_system(kNames3, rank3(5, 3, 2));
  if (name == "Atilde2") return validate_system(kNames3, rank3(3, 3, 3));
  if (name.rfind("I2(", 0) == 0 && name.size() > 4 && name.back() == ')') {
    const std::string arg = name.substr(3, name.size() - 4);
    if (arg == "inf" || arg == "0") return validate_system({"s", "t"}, rank2(0));
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != arg.size() || m < 2) throw InvalidInputError("bad dihedral parameter '" + arg + "'");
    return validate_system({"s", "t"}, rank2(m));
  }
  throw InvalidInputError("unknown built-in system '" + name + "'");
}

CoxeterSystem parse_system_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("malformed system JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coxeter_matrix"))
    throw InvalidInputError("system JSON needs a \"coxeter_matrix\" field");
  CoxeterMatrix matrix;
  std::vector<std::string> names;
  try {
    const auto& m = j.at("coxeter_matrix");
    if (!m.is_array()) throw InvalidInputError("coxeter_matrix must be an array of rows");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_array()) throw InvalidInputError("row " + std::to_string(i) + " is not an array");
      std::vector<int> row;
      for (std::size_t k = 0; k < m[i].size(); ++k) {
        if (!m[i][k].is_number_integer())
          throw InvalidInputError("entry (" + std::to_string(i) + "," + std::to_string(k) + ") is not an integer");
        row.push_back(m[i][k].get<int>());
      }
      matrix.push_back(std::move(row));
    }
    if (j.contains("generators")) names = j.at("generators").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed system JSON: ") + e.what());
  }
  return validate_system(std::move(names), std::move(matrix));
}

CoxeterSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot read system file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system_json(buffer.str());
}

Word parse_word(const CoxeterSystem& system, const std::string& text) {
  Word out;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      for (const auto& name : json::parse(text).get<std::vector<std::string>>())
        out.push_back(system.generator_index(name));
    } catch (const json::exception& e) {
      throw InvalidInputError(std::string("malformed word: ") + e.what());
    }
    return out;
  }
  std::istringstream in(text);
  std::string name;
  while (in >> name) out.push_back(system.generator_index(name));
  return out;
}

json scalar_json(const Scalar& x) {
  json poly = json::array();
  for (const auto& c : x.coeffs()) poly.push_back(c.get_str());
  return json{{"poly", poly}, {"approx", x.approx_string()}};
}

json root_json(const Root& r) {
  json coords = json::array();
  for (const auto& c : r.coords) coords.push_back(scalar_json(c));
  return json{{"coords", coords}};
}

json line_json(const Line& line) {
  json members = json::array();
  for (const auto& r : line.members) members.push_back(root_json(r));
  return json{{"members", members},
              {"kind", line.kind == LineKind::Full ? "full" : "partial"},
              {"canonical_ends", {line.canonical_flags[0], line.canonical_flags[1]}}};
}

json labeling_json(const Labeling& labeling) {
  json out = json::array();
  const Labeling s = labeling.sorted();
  for (std::size_t i = 0; i < s.roots.size(); ++i)
    out.push_back(json{{"root", root_json(s.roots[i])}, {"label", s.labels[i]}});
  return out;
}

json tournament_json(const Tournament& tournament) {
  json out = json::array();
  for (const auto& r : tournament.order) out.push_back(root_json(r));
  return out;
}

json report_json(const CoxeterSystem& system, const ClassificationReport& report) {
  json lines = json::array();
  for (const auto& l : report.contractible_long_sets) lines.push_back(line_json(l));
  return json{{"word", system.word_to_string(report.word)},
              {"length", report.length},
              {"reduced_count", report.reduced_count},
              {"commutation_class_count", report.commutation_class_count},
              {"contractible_long_sets", lines},
              {"N", report.n},
              {"freely_braided", report.freely_braided},
              {"fully_covering", report.fully_covering},
              {"short_braid_avoiding", report.short_braid_avoiding},
              {"covered_count", report.covered_count},
              {"state_image_size", report.state_image_size}};
}

RootNames::RootNames(const RootSequence& seq) {
  for (const auto& r : seq) {
    if (names_.count(r.key())) continue;
    std::size_t k = names_.size();
    std::string name;
    do {
      name.insert(name.begin(), static_cast<char>('A' + k % 26));
      k = k / 26;
    } while (k-- > 0);
    names_.emplace(r.key(), name);
  }
}

std::string RootNames::operator()(const Root& r) const {
  auto it = names_.find(r.key());
  return it == names_.end() ? r.to_string() : it->second;
}

namespace {

std::string approx_coords(const Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) out += ", ";
    out += r.coords[i].approx_string();
  }
  return out + ")";
}

}  // namespace

std::string segment_dot(const SegmentStructure& structure, const RootNames& names) {
  std::ostringstream out;
  out << "digraph segment {\n";
  out << "  // " << structure.points.size() << " roots, " << structure.full_count() << " full lines, "
      << structure.partial_count() << " partial lines\n";
  for (std::size_t i = 0; i < structure.points.size(); ++i) {
    const Root& r = structure.points[i];
    out << "  \"" << names(r) << "\" [label=\"" << names(r) << "\\n" << approx_coords(r) << "\"];\n";
  }
  for (std::size_t l = 0; l < structure.lines.size(); ++l) {
    const Line& line = structure.lines[l];
    const bool full = line.kind == LineKind::Full;
    std::vector<Root> chain = line.members;
    // Partial lines point toward their canonical end.
    if (!full && line.canonical_end() == 0) std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      out << "  \"" << names(chain[i]) << "\" -> \"" << names(chain[i + 1]) << "\" [line=" << l
          << (full ? ", kind=full, dir=none" : ", kind=partial, dir=forward") << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

json segment_json(const SegmentStructure& structure, const RootNames& names) {
  json points = json::array();
  for (const auto& r : structure.points) {
    json p = root_json(r);
    p["name"] = names(r);
    points.push_back(p);
  }
  json lines = json::array();
  for (const auto& line : structure.lines) {
    json l = line_json(line);
    json member_names = json::array();
    for (const auto& r : line.members) member_names.push_back(names(r));
    l["names"] = member_names;
    lines.push_back(l);
  }
  return json{{"points", points}, {"lines", lines}};
}

VerifySummary verify_sweep(const CoxeterSystem& system, std::size_t max_length, const Budget& budget,
                           std::ostream* log) {
  VerifySummary summary;
  for (const Word& w : elements_up_to(system, max_length)) {
    ++summary.elements;
    const std::set<Word> words = enumerate_reduced(system, w, budget);
    if (words != enumerate_reduced_by_descents(system, w, budget)) {
      ++summary.engine_mismatches;
      if (log) *log << "engine mismatch at " << system.word_to_string(w) << "\n";
    }
    for (const auto& x : words)
      for (std::size_t j = 1; j <= x.size(); ++j) {
        ++summary.deletion_checks;
        if (deletion_length(system, x, j) != deletion_length_oracle(system, x, j)) {
          ++summary.deletion_mismatches;
          if (log) *log << "deletion mismatch at " << system.word_to_string(x) << " position " << j << "\n";
        }
      }
    const EnumerationResult all = enumerate_all(system, w, budget, false);
    if (!all.counts.agree()) {
      ++summary.bijection_mismatches;
      if (log)
        *log << "bijection mismatch at " << system.word_to_string(w) << ": " << all.counts.reduced_words << "/"
             << all.counts.labelings << "/" << all.counts.tournaments << "\n";
    }
    const ClassificationReport r = classify(system, w, budget);
    if (r.fully_covering != r.fully_covering_oracle) {
      ++summary.covering_mismatches;
      if (log) *log << "covering mismatch at " << system.word_to_string(w) << "\n";
    }
    const bool cube = r.commutation_class_count == (std::size_t{1} << r.n);
    if (r.freely_braided != cube) {
      ++summary.freely_braided_mismatches;
      if (log) *log << "freely braided mismatch at " << system.word_to_string(w) << "\n";
    }
    if (r.state_image_size != r.commutation_class_count) {
      ++summary.state_map_mismatches;
      if (log) *log << "state map mismatch at " << system.word_to_string(w) << "\n";
    }
  }
  return summary;
}

}  // namespace coxlab
