#pragma once

// Brute-force and closed-form oracles shared by the unit tests and the
// acceptance binary. Nothing here calls the routine it is checking.

#include "fano/reference.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace fano::oracle {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

using Rng = std::mt19937_64;

// Valid specifying data (not necessarily Fano), spread by a random
// unimodular change.
SpecifyingData random_datum(Rng& rng);

// GIT fans of random data with prime generators: chambers have disjoint
// interiors and cover Eff, rays are faces of adjacent chambers, and sampled
// interior points of a chamber lie in the same orbit cones while neighbours
// differ.
Outcome fan_axioms(int samples, std::uint64_t seed);
// fiber_points against nested loops over the box 0 <= nu_i <= k(w)/k(w_i).
Outcome fiber_vs_box(int samples, std::uint64_t seed);
// l*(jP) = (-1)^d L(-j) with L interpolated from brute-force counts of
// full-dimensional random polytopes in dimension 2 and 3.
Outcome ehrhart_reciprocity(int samples, std::uint64_t seed);
// generates_group iff the 2x2 minors have gcd 1.
Outcome generates_group_vs_minors(int samples, std::uint64_t seed);
// {u, a1 w, a2 w} generating Z^2 with w primitive forces det(u, w) = +-1 and
// u primitive.
Outcome two_on_one_ray(int samples, std::uint64_t seed);
// Exhaustive over [-2,2]^2: four determinants equal to one force w1 = w2 or
// w3 = w4.
Outcome four_determinants();
// canonical_form fixed by itself and constant under random admissible
// changes.
Outcome canonical_orbits(const ReferenceTable& t, int changes_per_row, std::uint64_t seed);
Outcome quartic_residuals(const ReferenceTable& t);

// (-K_Z - X)^4 . X on the ambient toric variety, by expanding in the two
// generators of the intersection ring. Handles P_m x P_n ambients and
// P_1-bundles with five columns (a_i, 0), one (c, 1) and one (0, 1).
std::optional<Int> ambient_anticanonical_degree(const SpecifyingData& d);
// For Y x P_1 with Y a quasismooth Fermat threefold of degree d in
// P(a_1..a_5): (h21(Y), 0, 2), h21(Y) being the degree 2d - sum a part of
// the Jacobian ring. Empty when the data are not of that shape.
std::optional<HodgeTriple> product_hodge(const SpecifyingData& d);

}  // namespace fano::oracle
