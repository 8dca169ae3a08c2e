#pragma once

#include "fano/invariants.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct ReferenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReferenceRow {
  int row = 0;
  Degrees printed_w{};  // printed column order
  Vec2 mu{};
  Vec2 minus_K{};
  Int K4 = 0;
  HodgeTriple hodge;
  std::vector<ContractionDescriptor> contractions;  // one product entry for product rows

  SpecifyingData data() const;
};

struct ReferenceTable {
  int version = 0;
  std::vector<ReferenceRow> rows;
  const ReferenceRow& row(int number) const;
};

ReferenceTable parse_reference(const std::string& json_text);
ReferenceTable load_reference(const std::string& path);
// $FANO_COX_REFERENCE, else the data file of the source tree
std::string default_reference_path();

}  // namespace fano
