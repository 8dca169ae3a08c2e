#include "fano/reference.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef FANO_COX_DATA_DIR
#define FANO_COX_DATA_DIR "data"
#endif

namespace fano {

using nlohmann::json;

SpecifyingData ReferenceRow::data() const { return sort_columns(SpecifyingData{printed_w, mu}); }

const ReferenceRow& ReferenceTable::row(int number) const {
  for (const auto& r : rows)
    if (r.row == number) return r;
  throw std::out_of_range("no reference row " + std::to_string(number));
}

namespace {

Vec2 vec2(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ReferenceError("expected an integer pair");
  return {j.at(0).get<Int>(), j.at(1).get<Int>()};
}

ContractionDescriptor contraction(const json& j) {
  ContractionDescriptor c;
  const std::string kind = j.at("kind").get<std::string>();
  c.via_small_modification = j.at("small_modification").get<bool>();
  if (kind == "fibration") {
    c.kind = ContractionDescriptor::Kind::Fibration;
    c.base_or_target = j.at("base").get<std::string>();
    c.fiber_or_center = j.at("fiber").get<std::string>();
  } else if (kind == "birational") {
    c.kind = ContractionDescriptor::Kind::Birational;
    c.base_or_target = j.at("target").get<std::string>();
    c.fiber_or_center = j.at("center").get<std::string>();
    c.singular_target = j.at("singular").get<bool>();
  } else {
    throw ReferenceError("unknown contraction kind " + kind);
  }
  return c;
}

}  // namespace

ReferenceTable parse_reference(const std::string& text) {
  ReferenceTable t;
  try {
    json doc = json::parse(text);
    t.version = doc.at("version").get<int>();
    std::set<int> seen;
    for (const auto& jr : doc.at("rows")) {
      ReferenceRow r;
      r.row = jr.at("row").get<int>();
      if (!seen.insert(r.row).second) throw ReferenceError("duplicate row " + std::to_string(r.row));
      const auto& q = jr.at("degree_matrix");
      if (q.size() != 2 || q.at(0).size() != kVars || q.at(1).size() != kVars)
        throw ReferenceError("row " + std::to_string(r.row) + ": degree matrix must be 2x7");
      for (int i = 0; i < kVars; ++i) r.printed_w[i] = {q.at(0).at(i).get<Int>(), q.at(1).at(i).get<Int>()};
      r.mu = vec2(jr.at("relation_degree"));
      r.minus_K = vec2(jr.at("minus_K"));
      r.K4 = jr.at("K4").get<Int>();
      const auto& h = jr.at("hodge");
      r.hodge = {h.at(0).get<Int>(), h.at(1).get<Int>(), h.at(2).get<Int>()};
      if (jr.contains("product")) {
        ContractionDescriptor c;
        c.kind = ContractionDescriptor::Kind::Product;
        c.base_or_target = jr.at("product").at("factor").get<std::string>();
        c.fiber_or_center = jr.at("product").at("times").get<std::string>();
        r.contractions.push_back(c);
      }
      for (const auto& jc : jr.at("contractions")) r.contractions.push_back(contraction(jc));
      t.rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ReferenceError(std::string("malformed reference data: ") + e.what());
  }
  return t;
}

ReferenceTable load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ReferenceError("cannot open reference data " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_reference(ss.str());
}

std::string default_reference_path() {
  if (const char* env = std::getenv("FANO_COX_REFERENCE"); env && *env) return env;
  return std::string(FANO_COX_DATA_DIR) + "/reference_v1.json";
}

}  // namespace fano
