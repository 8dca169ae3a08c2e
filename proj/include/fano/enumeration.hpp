#pragma once

#include "fano/verification.hpp"

#include <cstddef>
#include <vector>

namespace fano {

// Entries of the normalized degree matrix lie in [0, max_abs_entry] and
// mu <= max_mu componentwise.
struct SearchBounds {
  Int max_abs_entry = 6;
  Vec2 max_mu{12, 12};
};

struct EnumerationOptions {
  bool pruning = true;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct Candidate {
  SpecifyingData data;  // canonical
  VerificationReport report;
};

struct EnumerationStats {
  std::size_t column_sets = 0;  // normalized multisets visited
  std::size_t almost_free = 0;  // ... passing almost-freeness and Mov full-dimensional
  std::size_t pairs = 0;        // (columns, mu) pairs reaching the Newton stage
  std::size_t pruned = 0;       // rejected by the lemma predicates
};

// Sorted by canonical encoding, one entry per orbit.
std::vector<Candidate> enumerate_candidates(const SearchBounds& b = {}, const EnumerationOptions& o = {},
                                            EnumerationStats* stats = nullptr);

// Necessary conditions, cheap relative to the chamber-wise checks.
//
// Every 6 of the 7 columns generate Z^2.
bool almost_free(const Degrees& w);
// If Mov = Eff and mu in Eff°, then Eff is regular with primitive boundary
// columns.
bool regular_eff_condition(const SpecifyingData& d);
// Pairs w_i, w_j whose cone contains a chamber inside Mov span a relevant
// face of that chamber: either det(w_i, w_j) = +-1 and the face passes the
// quasismoothness test, or mu is the degree of its only monomial.
bool cross_pair_condition(const SpecifyingData& d);
bool cross_pair_condition(const SpecifyingData& d, const Cone2& mov);
// Three-generator condition on every chamber inside Mov: w_i, w_j in
// lambda^-, w_k in lambda^+ and no pure power of T_k in g force w_i, w_j, w_k
// to generate Z^2; likewise mirrored.
bool three_generator_condition(const SpecifyingData& d, const NewtonData& n);

}  // namespace fano
