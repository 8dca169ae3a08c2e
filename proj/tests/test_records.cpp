#include "fano/records.hpp"

#include <doctest.h>

using namespace fano;

namespace {

const ReferenceTable& table() {
  static const ReferenceTable t = load_reference(default_reference_path());
  return t;
}

}  // namespace

TEST_SUITE("records") {
  TEST_CASE("datum round trip") {
    for (const auto& r : table().rows) {
      const SpecifyingData d = r.data();
      CHECK(datum_from_json(Json::parse(datum_to_json(d).dump())) == d);
    }
  }

  TEST_CASE("malformed data") {
    CHECK_THROWS_AS(datum_from_json(Json::parse("{}")), InvalidData);
    CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"degree_matrix": [[1,1],[0,0]], "relation_degree": [1,1]})")),
                    InvalidData);
    CHECK_THROWS_AS(
        datum_from_json(Json::parse(
            R"({"degree_matrix": [[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]], "relation_degree": [1,"x"]})")),
        InvalidData);
    // mu equal to a column
    CHECK_THROWS_AS(
        datum_from_json(Json::parse(R"({"degree_matrix": [[1,1,1,1,0,0,0],[0,0,0,0,1,1,1]], "relation_degree": [1,0]})")),
        InvalidData);
  }

  TEST_CASE("invariant record of row 1") {
    const Json j = to_json(compute_record(table().row(1).data()));
    CHECK(j.at("K4") == 432);
    CHECK(j.at("fano_index") == 1);
    CHECK(j.at("hodge") == Json::array({0, 0, 3}));
    CHECK(j.at("hilbert").size() == 7);
    CHECK(j.at("hilbert")[0] == 1);
    CHECK(j.at("verification").at("overall") == "pass");
    CHECK(j.at("contractions").size() == 2);
    // the record re-parses to the same datum and to its canonical form
    const SpecifyingData d = datum_from_json(j);
    CHECK(d == table().row(1).data());
    CHECK(canonical_form(d) == datum_from_json(j.at("canonical")));
    CHECK(canonical_form(datum_from_json(j.at("canonical"))) == datum_from_json(j.at("canonical")));
  }

  TEST_CASE("row comparison") {
    const auto c1 = compare_row(table().row(1));
    CHECK(c1.matched());
    ReferenceRow bad = table().row(1);
    bad.K4 = 431;
    const auto c = compare_row(bad);
    CHECK_FALSE(c.matched());
    REQUIRE(c.diffs.size() == 1);
    CHECK(c.diffs[0].field == "K4");
    CHECK(c.diffs[0].expected == "431");
    CHECK(c.diffs[0].computed == "432");
  }

  TEST_CASE("reference data") {
    CHECK(table().version == 1);
    CHECK(table().rows.size() == 67);
    CHECK_THROWS_AS(parse_reference("{"), ReferenceError);
    CHECK_THROWS_AS(parse_reference(R"({"version": 1, "rows": [{"row": 1}]})"), ReferenceError);
    CHECK_THROWS_AS(load_reference("/nonexistent/reference.json"), ReferenceError);
  }
}
