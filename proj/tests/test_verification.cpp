#include "fano/reference.hpp"

#include <doctest.h>

#include <set>

using namespace fano;

namespace {

const ReferenceTable& table() {
  static const ReferenceTable t = load_reference(default_reference_path());
  return t;
}

SpecifyingData row(int n) { return table().row(n).data(); }

// row 1 with w_1 = (2,0)
SpecifyingData row1_variant() {
  return make_specifying_data({Vec2{2, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}}, {1, 1});
}

const Cone2 kOrthant = Cone2::wedge({1, 0}, {0, 1});

}  // namespace

TEST_SUITE("verification") {
  TEST_CASE("local factoriality") {
    const SpecifyingData d = row(1);
    CHECK(locally_factorial(d, newton_data(d), kOrthant));
    const SpecifyingData v = row1_variant();
    CHECK_FALSE(locally_factorial(v, newton_data(v), kOrthant));
  }

  TEST_CASE("quasismoothness by degrees") {
    const SpecifyingData d9 = row(9);
    const NewtonData n9 = newton_data(d9);
    CHECK(quasismooth_degree_test(d9, n9, fano_chamber(d9, n9)));
    // a_7 = 0 and mu = (1,3) on cone(w_3, w_4)
    const SpecifyingData ib = make_specifying_data({Vec2{1, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 1}, {0, 1}}, {1, 3});
    CHECK_FALSE(quasismooth_degree_test(ib, newton_data(ib), Cone2::wedge({1, 0}, {1, 1})));
  }

  TEST_CASE("Fano chamber") {
    CHECK(anticanonical_class(row(1)) == Vec2{3, 2});
    CHECK(fano_chamber(row(1), newton_data(row(1))) == kOrthant);
    CHECK(anticanonical_class(row(9)) == Vec2{1, 2});
    CHECK(fano_chamber(row(9), newton_data(row(9))) == Cone2::wedge(row(9).w[0], row(9).w[4]));
    SpecifyingData d = row(1);
    d.mu = d.column_sum();
    REQUIRE_FALSE(validation_error(d));
    CHECK_THROWS_AS(fano_chamber(d, newton_data(d)), NotFano);
  }

  TEST_CASE("small modifications") {
    CHECK(all_small_modifications_smooth(row(1), newton_data(row(1))) == Status::Pass);
    CHECK(mov_chambers(row(16), newton_data(row(16))).size() == 2);
    CHECK(all_small_modifications_smooth(row(16), newton_data(row(16))) == Status::Pass);
    const SpecifyingData v = row1_variant();
    CHECK(all_small_modifications_smooth(v, newton_data(v)) == Status::Fail);
  }

  TEST_CASE("base point freeness") {
    const SpecifyingData d = row(1);
    CHECK(base_point_free(d, newton_data(d), d.mu));
    CHECK(base_point_free(d, newton_data(d), {0, 0}));
    // {(1,0), (2,1)} is a relevant pair and (0,1) is outside its monoid
    const SpecifyingData e =
        make_specifying_data({Vec2{1, 0}, {1, 0}, {1, 0}, {1, 0}, {2, 1}, {1, 1}, {0, 1}}, {3, 2});
    CHECK(fano_chamber(e, newton_data(e)) == Cone2::wedge({1, 0}, {2, 1}));
    CHECK_FALSE(base_point_free(e, newton_data(e), {0, 1}));
    CHECK(base_point_free(e, newton_data(e), {2, 1}));
  }

  TEST_CASE("smoothness of the ambient") {
    CHECK(z_mu_smooth(row(1), newton_data(row(1))));
  }

  TEST_CASE("irreducibility of general members") {
    CHECK(general_member_irreducible({Exponent{2, 0, 0, 0, 0, 0, 0}, Exponent{0, 2, 0, 0, 0, 0, 0},
                                      Exponent{1, 1, 0, 0, 0, 0, 0}, Exponent{0, 0, 1, 0, 0, 0, 0}}));
    // T_1^2 and T_2^2 only: a pencil of squares splits
    CHECK_FALSE(general_member_irreducible({Exponent{2, 0, 0, 0, 0, 0, 0}, Exponent{0, 2, 0, 0, 0, 0, 0}}));
    CHECK_FALSE(general_member_irreducible({Exponent{1, 1, 0, 0, 0, 0, 0}}));
    CHECK(general_member_irreducible({Exponent{0, 0, 1, 0, 0, 0, 0}}));
    CHECK_FALSE(general_member_irreducible({Exponent{1, 1, 0, 0, 0, 0, 0}, Exponent{1, 0, 1, 0, 0, 0, 0}}));
    CHECK(prime_generators(newton_data(row(1))));
  }

  TEST_CASE("verify_candidate") {
    const auto r12 = verify_candidate(row(12));
    CHECK(r12.overall == Status::Pass);
    CHECK(r12.factoriality_route == "dolgachev");
    const auto r13 = verify_candidate(row(13));
    CHECK(r13.overall == Status::RequiresOracle);
    CHECK(r13.smoothness_route == "oracle");
    CHECK(r13.factoriality_route != "oracle");

    // a full scan of the printed rows: every one survives
    std::set<int> oracle_rows;
    for (const auto& r : table().rows) {
      const auto rep = verify_candidate(r.data());
      CHECK(rep.overall != Status::Fail);
      if (rep.overall == Status::RequiresOracle) oracle_rows.insert(r.row);
    }
    CHECK(oracle_rows == std::set<int>{13, 14, 15, 22, 23, 24, 25, 33, 42, 43, 45, 47, 49});
  }
}
