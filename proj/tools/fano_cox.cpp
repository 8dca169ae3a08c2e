#include "fano/enumeration.hpp"
#include "fano/records.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

using namespace fano;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "1,4-6,9"
std::vector<int> parse_rows(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      const auto dash = part.find('-');
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part, &used));
        if (used != part.size()) throw UsageError("");
      } else {
        const int a = std::stoi(part.substr(0, dash)), b = std::stoi(part.substr(dash + 1), &used);
        if (used != part.size() - dash - 1 || a > b) throw UsageError("");
        for (int r = a; r <= b; ++r) out.push_back(r);
      }
    } catch (const std::exception&) {
      throw UsageError("bad --rows item '" + part + "'");
    }
  }
  return out;
}

Vec2 parse_pair(const std::string& s) {
  Int a = 0, b = 0;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof()) throw UsageError("expected A,B but got '" + s + "'");
  return {a, b};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string md_escape(std::string s) {
  for (std::size_t p = 0; (p = s.find('|', p)) != std::string::npos; p += 2) s.replace(p, 1, "\\|");
  return s;
}

std::string matrix_text(const SpecifyingData& d) {
  std::string s;
  for (const auto& w : d.w) s += (s.empty() ? "" : " ") + std::to_string(w.x) + "," + std::to_string(w.y);
  return s;
}

struct Common {
  std::string format = "json";
  std::string reference;
  unsigned jobs = 1;

  ReferenceTable table() const { return load_reference(reference.empty() ? default_reference_path() : reference); }
};

int verify_table(const Common& c, const std::string& rows_spec) {
  const ReferenceTable t = c.table();
  std::vector<ReferenceRow> rows;
  if (rows_spec.empty()) {
    rows = t.rows;
  } else {
    for (int r : parse_rows(rows_spec)) {
      try {
        rows.push_back(t.row(r));
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
    }
  }
  const auto results = compare_rows(rows, c.jobs);
  std::size_t matched = 0;
  for (const auto& r : results) matched += r.matched();

  if (c.format == "json") {
    Json out = Json::array();
    for (const auto& r : results) {
      Json diffs = Json::array();
      for (const auto& d : r.diffs) diffs.push_back({{"field", d.field}, {"expected", d.expected}, {"computed", d.computed}});
      Json j = {{"row", r.row}, {"status", to_string(r.status)}, {"matched", r.matched()}, {"diffs", diffs}};
      if (!r.error.empty()) j["error"] = r.error;
      out.push_back(j);
    }
    std::cout << Json{{"rows", out}, {"matched", matched}, {"total", results.size()}}.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "row,status,matched,field,expected,computed\n";
    for (const auto& r : results) {
      const std::string head = std::to_string(r.row) + "," + to_string(r.status) + "," + (r.matched() ? "1" : "0");
      if (!r.error.empty()) std::cout << head << ",error,," << csv_escape(r.error) << "\n";
      for (const auto& d : r.diffs)
        std::cout << head << "," << d.field << "," << csv_escape(d.expected) << "," << csv_escape(d.computed) << "\n";
      if (r.diffs.empty() && r.error.empty()) std::cout << head << ",,,\n";
    }
  } else {
    std::cout << "| row | status | field | expected | computed |\n|---|---|---|---|---|\n";
    for (const auto& r : results) {
      if (!r.error.empty()) std::cout << "| " << r.row << " | error | | | " << md_escape(r.error) << " |\n";
      for (const auto& d : r.diffs)
        std::cout << "| " << r.row << " | " << to_string(r.status) << " | " << d.field << " | " << md_escape(d.expected)
                  << " | " << md_escape(d.computed) << " |\n";
    }
    std::cout << "\n" << matched << "/" << results.size() << " rows matched\n";
  }
  return matched == results.size() ? kOk : kMismatch;
}

int enumerate(const Common& c, const SearchBounds& b, bool pruning) {
  EnumerationStats stats;
  const auto found = enumerate_candidates(b, {pruning, c.jobs}, &stats);

  std::map<SpecifyingData, int> known;
  try {
    for (const auto& r : c.table().rows) known.emplace(canonical_form(r.data()), r.row);
  } catch (const ReferenceError&) {
    // without reference data the orbits are simply not labelled
  }

  Json records = Json::array();
  for (const auto& cand : found) {
    Json j;
    try {
      j = to_json(compute_record(cand.data));
    } catch (const std::exception& e) {
      j = datum_to_json(cand.data);
      j["verification"] = report_to_json(cand.report);
      j["invariants_error"] = e.what();
    }
    const auto it = known.find(cand.data);
    j["reference_row"] = it == known.end() ? Json(nullptr) : Json(it->second);
    records.push_back(j);
  }

  if (c.format == "json") {
    std::cout << records.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "reference_row,degree_matrix,relation_degree,minus_K,fano_index,K4,h21,h31,h22,overall\n";
    for (const auto& j : records) {
      const SpecifyingData d = datum_from_json(j);
      std::cout << (j["reference_row"].is_null() ? "" : j["reference_row"].dump()) << "," << csv_escape(matrix_text(d))
                << "," << csv_escape(std::to_string(d.mu.x) + "," + std::to_string(d.mu.y));
      if (j.contains("K4")) {
        std::cout << "," << csv_escape(std::to_string(j["minus_K"][0].get<Int>()) + "," + std::to_string(j["minus_K"][1].get<Int>()))
                  << "," << j["fano_index"] << "," << j["K4"] << "," << j["hodge"][0] << "," << j["hodge"][1] << ","
                  << j["hodge"][2];
      } else {
        std::cout << ",,,,,,";
      }
      std::cout << "," << j["verification"]["overall"].get<std::string>() << "\n";
    }
  } else {
    std::cout << "| row | degree matrix | mu | K4 | hodge | status |\n|---|---|---|---|---|---|\n";
    for (const auto& j : records) {
      const SpecifyingData d = datum_from_json(j);
      std::cout << "| " << (j["reference_row"].is_null() ? "-" : j["reference_row"].dump()) << " | " << matrix_text(d)
                << " | " << d.mu.x << "," << d.mu.y << " | " << (j.contains("K4") ? j["K4"].dump() : "-") << " | "
                << (j.contains("hodge") ? j["hodge"].dump() : "-") << " | "
                << j["verification"]["overall"].get<std::string>() << " |\n";
    }
  }
  std::cerr << found.size() << " orbits; " << stats.column_sets << " column sets, " << stats.pairs
            << " pairs examined, " << stats.pruned << " pruned\n";
  return kOk;
}

SpecifyingData read_datum(const Common& c, int row, bool from_stdin) {
  if (row > 0 && from_stdin) throw UsageError("use either --row or --stdin");
  if (row > 0) {
    try {
      return c.table().row(row).data();
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  if (!from_stdin) throw UsageError("a datum is required: --row N or --stdin");
  try {
    return datum_from_json(Json::parse(std::cin));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  } catch (const InvalidData& e) {
    throw UsageError(std::string("invalid datum: ") + e.what());
  }
}

int domain_error(const std::string& kind, const std::string& what) {
  std::cout << Json{{"error", kind}, {"message", what}}.dump() << "\n";
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth Fano fourfolds of Picard number two with hypersurface Cox ring"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--reference", common.reference, "reference data file (default: $FANO_COX_REFERENCE or the shipped table)");
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  auto* verify = app.add_subcommand("verify-table", "recompute every reference row and print the differences");
  std::string rows_spec;
  verify->add_option("--rows", rows_spec, "row selection, e.g. 1,4-6");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "bounded search for specifying data up to admissible changes");
  Int bound_entry = SearchBounds{}.max_abs_entry;
  std::string bound_mu = "12,12";
  bool no_pruning = false;
  enumerate_cmd->add_option("--bounds-entry", bound_entry, "largest entry of the normalized degree matrix")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  enumerate_cmd->add_option("--bounds-mu", bound_mu, "componentwise bound A,B on mu")->capture_default_str();
  enumerate_cmd->add_flag("--no-pruning", no_pruning, "disable the necessary-condition filters");

  auto* invariants = app.add_subcommand("invariants", "invariant record of one datum");
  int inv_row = 0;
  bool inv_stdin = false;
  invariants->add_option("--row", inv_row, "reference row number");
  invariants->add_flag("--stdin", inv_stdin, "read {degree_matrix, relation_degree} JSON from stdin");

  auto* deform = app.add_subcommand("deform", "h^1 of the tangent sheaf from dim Aut(X)");
  int def_row = 0;
  bool def_stdin = false;
  Int dim_aut = 0;
  deform->add_option("--row", def_row, "reference row number");
  deform->add_flag("--stdin", def_stdin, "read the datum as JSON from stdin");
  deform->add_option("--dim-aut", dim_aut, "dimension of Aut(X)")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return verify_table(common, rows_spec);
    if (*enumerate_cmd) {
      const Vec2 mu = parse_pair(bound_mu);
      if (mu.x < 0 || mu.y < 0) throw UsageError("--bounds-mu must be nonnegative");
      return enumerate(common, {bound_entry, mu}, !no_pruning);
    }
    if (*invariants) {
      const SpecifyingData d = read_datum(common, inv_row, inv_stdin);
      const Json j = to_json(compute_record(d));
      if (common.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else if (common.format == "csv") {
        std::cout << "degree_matrix,relation_degree,fano_index,K4,h21,h31,h22,overall\n"
                  << csv_escape(matrix_text(d)) << "," << csv_escape(std::to_string(d.mu.x) + "," + std::to_string(d.mu.y))
                  << "," << j["fano_index"] << "," << j["K4"] << "," << j["hodge"][0] << "," << j["hodge"][1] << ","
                  << j["hodge"][2] << "," << j["verification"]["overall"].get<std::string>() << "\n";
      } else {
        std::cout << "| field | value |\n|---|---|\n";
        for (const auto& [k, v] : j.items()) std::cout << "| " << k << " | " << md_escape(v.dump()) << " |\n";
      }
      return kOk;
    }
    if (*deform) {
      const SpecifyingData d = read_datum(common, def_row, def_stdin);
      std::cout << deformation_h1(d, dim_aut) << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ReferenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotFano& e) {
    return domain_error("NotFano", e.what());
  } catch (const NotApplicable& e) {
    return domain_error("NotApplicable", e.what());
  } catch (const std::domain_error& e) {
    return domain_error("DomainError", e.what());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
