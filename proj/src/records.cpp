#include "fano/records.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace fano {

namespace {

Json pair(const Vec2& v) { return Json::array({v.x, v.y}); }

Vec2 read_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InvalidData(std::string(what) + " must be a pair of integers");
  return {j[0].get<Int>(), j[1].get<Int>()};
}

std::string hodge_text(const HodgeTriple& h) {
  return std::to_string(h.h21) + "," + std::to_string(h.h31) + "," + std::to_string(h.h22);
}

std::string pair_text(const Vec2& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

}  // namespace

Json datum_to_json(const SpecifyingData& d) {
  Json xs = Json::array(), ys = Json::array();
  for (const auto& w : d.w) {
    xs.push_back(w.x);
    ys.push_back(w.y);
  }
  return {{"degree_matrix", Json::array({xs, ys})}, {"relation_degree", pair(d.mu)}};
}

SpecifyingData datum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree_matrix") || !j.contains("relation_degree"))
    throw InvalidData("expected an object with degree_matrix and relation_degree");
  const Json& q = j.at("degree_matrix");
  if (!q.is_array() || q.size() != 2 || !q[0].is_array() || !q[1].is_array() || q[0].size() != kVars ||
      q[1].size() != kVars)
    throw InvalidData("degree_matrix must be 2x7");
  Degrees w;
  for (int i = 0; i < kVars; ++i) w[i] = read_pair(Json::array({q[0][i], q[1][i]}), "degree_matrix entry");
  return make_specifying_data(w, read_pair(j.at("relation_degree"), "relation_degree"));
}

Json contraction_to_json(const ContractionDescriptor& c) {
  using Kind = ContractionDescriptor::Kind;
  switch (c.kind) {
    case Kind::Product: return {{"kind", "product"}, {"factor", c.base_or_target}, {"times", c.fiber_or_center}};
    case Kind::Fibration:
      return {{"kind", "fibration"},
              {"small_modification", c.via_small_modification},
              {"base", c.base_or_target},
              {"fiber", c.fiber_or_center}};
    case Kind::Birational:
      return {{"kind", "birational"},
              {"small_modification", c.via_small_modification},
              {"target", c.base_or_target},
              {"center", c.fiber_or_center},
              {"singular", c.singular_target}};
  }
  return {};
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::object();
  for (const auto& [name, s] : r.checks) checks[name] = to_string(s);
  return {{"overall", to_string(r.overall)},
          {"checks", checks},
          {"fano_chamber", Json::array({pair(r.fano_chamber.lo()), pair(r.fano_chamber.hi())})},
          {"factoriality_route", r.factoriality_route},
          {"smoothness_route", r.smoothness_route}};
}

InvariantRecord compute_record(const SpecifyingData& d) {
  if (auto e = validation_error(d)) throw InvalidData(*e);
  InvariantRecord r;
  r.data = d;
  r.canonical = canonical_form(d);
  r.report = verify_candidate(d);
  r.minus_K = anticanonical_class(d);
  r.fano_index = fano_index(d);
  r.hilbert = hilbert_values(d, 7);
  r.K4 = anticanonical_degree(d);
  r.hodge = hodge_numbers(d);
  r.contractions = elementary_contractions(d);
  r.deformation_applicable = deformation_applicable(d);
  return r;
}

Json to_json(const InvariantRecord& r) {
  Json j = datum_to_json(r.data);
  j["canonical"] = datum_to_json(r.canonical);
  j["minus_K"] = pair(r.minus_K);
  j["fano_index"] = r.fano_index;
  j["K4"] = r.K4;
  j["hilbert"] = r.hilbert;
  j["hodge"] = Json::array({r.hodge.h21, r.hodge.h31, r.hodge.h22});
  j["contractions"] = Json::array();
  for (const auto& c : r.contractions) j["contractions"].push_back(contraction_to_json(c));
  j["verification"] = report_to_json(r.report);
  j["deformation_applicable"] = r.deformation_applicable;
  return j;
}

std::string describe(const ContractionDescriptor& c) {
  using Kind = ContractionDescriptor::Kind;
  if (c.kind == Kind::Product) return c.base_or_target + " x " + c.fiber_or_center;
  std::string s = c.via_small_modification ? "X' -> " : "X -> ";
  s += c.base_or_target;
  if (c.kind == Kind::Birational && c.singular_target) s += "*";
  s += c.kind == Kind::Fibration ? " fiber " : " center ";
  return s + c.fiber_or_center;
}

RowComparison compare_row(const ReferenceRow& ref) {
  RowComparison out;
  out.row = ref.row;
  try {
    const SpecifyingData d = ref.data();
    if (auto e = validation_error(d)) throw InvalidData(*e);
    const VerificationReport rep = verify_candidate(d);
    out.status = rep.overall;
    if (rep.overall == Status::Fail) out.diffs.push_back({"verification", "pass", to_string(rep.overall)});

    const Vec2 k = anticanonical_class(d);
    if (k != ref.minus_K) out.diffs.push_back({"minus_K", pair_text(ref.minus_K), pair_text(k)});
    const Int K4 = anticanonical_degree(d);
    if (K4 != ref.K4) out.diffs.push_back({"K4", std::to_string(ref.K4), std::to_string(K4)});
    const HodgeTriple h = hodge_numbers(d);
    if (h != ref.hodge) out.diffs.push_back({"hodge", hodge_text(ref.hodge), hodge_text(h)});

    auto keys = [](const std::vector<ContractionDescriptor>& cs) {
      std::vector<std::string> v;
      for (ContractionDescriptor c : cs) {
        c.base_or_target = normalize_label(c.base_or_target);
        c.fiber_or_center = normalize_label(c.fiber_or_center);
        v.push_back(describe(c));
      }
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto want = keys(ref.contractions), got = keys(elementary_contractions(d));
    std::vector<std::string> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
      return s;
    };
    if (!missing.empty() || !extra.empty()) out.diffs.push_back({"contractions", join(missing), join(extra)});
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<RowComparison> compare_rows(const std::vector<ReferenceRow>& rows, unsigned jobs) {
  std::vector<RowComparison> out(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) out[i] = compare_row(rows[i]);
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace fano
