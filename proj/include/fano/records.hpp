#pragma once

#include "fano/reference.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fano {

using Json = nlohmann::json;

// {"degree_matrix": [[x_1..x_7], [y_1..y_7]], "relation_degree": [a, b]},
// columns in stored order
Json datum_to_json(const SpecifyingData& d);
// Accepts the layout above; throws InvalidData on a malformed or invalid datum.
SpecifyingData datum_from_json(const Json& j);

Json contraction_to_json(const ContractionDescriptor& c);
Json report_to_json(const VerificationReport& r);

struct InvariantRecord {
  SpecifyingData data;  // columns in stored order
  SpecifyingData canonical;
  Vec2 minus_K{};
  Int fano_index = 0;
  Int K4 = 0;
  std::vector<Int> hilbert;  // k = 0..6
  HodgeTriple hodge;
  std::vector<ContractionDescriptor> contractions;
  VerificationReport report;
  bool deformation_applicable = false;
};

// Throws NotFano, InvalidData or FitInconsistent. A product datum gets a
// single product descriptor.
InvariantRecord compute_record(const SpecifyingData& d);
// The datum plus its canonical form under "canonical".
Json to_json(const InvariantRecord& r);

// Labels are compared after normalize_label; the order of contractions is
// ignored.
struct FieldDiff {
  std::string field;
  std::string expected;
  std::string computed;
};

struct RowComparison {
  int row = 0;
  Status status = Status::Pass;
  std::vector<FieldDiff> diffs;
  std::string error;  // set when the computation threw

  bool matched() const { return diffs.empty() && error.empty() && status != Status::Fail; }
};

RowComparison compare_row(const ReferenceRow& ref);
std::vector<RowComparison> compare_rows(const std::vector<ReferenceRow>& rows, unsigned jobs = 1);

std::string describe(const ContractionDescriptor& c);

}  // namespace fano
