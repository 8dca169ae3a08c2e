#pragma once

#include "fano/grading.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fano {

struct NotFano : std::domain_error {
  using std::domain_error::domain_error;
};

// Ordered so that the maximum is the aggregate.
enum class Status { Pass = 0, RequiresOracle = 1, Fail = 2 };
std::string to_string(Status s);

inline Vec2 anticanonical_class(const SpecifyingData& d) { return d.column_sum() - d.mu; }

bool locally_factorial(const SpecifyingData& d, const NewtonData& n, const Cone2& lambda);
bool quasismooth_degree_test(const SpecifyingData& d, const NewtonData& n, const Cone2& lambda);

// Chamber whose interior holds -K; throws NotFano if -K is outside Mov°, on
// a wall, or the chamber leaves Mov.
Cone2 fano_chamber(const SpecifyingData& d, const NewtonData& n);

// Full-dimensional GIT chambers inside Mov.
std::vector<Cone2> mov_chambers(const SpecifyingData& d, const NewtonData& n);
Status all_small_modifications_smooth(const SpecifyingData& d, const NewtonData& n);

bool base_point_free(const SpecifyingData& d, const Cone2& lambda, const Vec2& w);
bool base_point_free(const SpecifyingData& d, const NewtonData& n, const Vec2& w);
bool z_mu_smooth(const SpecifyingData& d, const NewtonData& n);

// Whether a general linear combination of the monomials is irreducible:
// no common variable, and the exponents span an affine space of dimension
// >= 2 or form a primitive segment. A single monomial must be a variable.
bool general_member_irreducible(const std::vector<Exponent>& monomials);
// g and every g(T_i = 0) irreducible for general g in S_mu, i.e. g is prime
// and each T_i is prime in R_g.
bool prime_generators(const NewtonData& n);

struct VerificationReport {
  Cone2 fano_chamber;
  std::vector<std::pair<std::string, Status>> checks;
  Status overall = Status::Pass;
  std::string factoriality_route;  // "dolgachev", "base-point-free" or "oracle"
  std::string smoothness_route;    // "z-mu-smooth" or "oracle"

  Status check(const std::string& name) const;
};

// Throws NotFano; data must already satisfy the SpecifyingData invariants.
VerificationReport verify_candidate(const SpecifyingData& d);
VerificationReport verify_candidate(const SpecifyingData& d, const NewtonData& n);

}  // namespace fano
