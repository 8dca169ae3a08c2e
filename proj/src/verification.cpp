#include "fano/verification.hpp"

#include <algorithm>

namespace fano {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::RequiresOracle: return "requires-oracle";
    case Status::Fail: return "fail";
  }
  return "?";
}

Status VerificationReport::check(const std::string& name) const {
  for (const auto& [k, v] : checks)
    if (k == name) return v;
  throw std::out_of_range("no check named " + name);
}

namespace {

std::vector<Vec2> columns(const SpecifyingData& d, FaceMask I) {
  std::vector<Vec2> out;
  for (int i : indices_of(I)) out.push_back(d.w[i]);
  return out;
}

}  // namespace

bool general_member_irreducible(const std::vector<Exponent>& monomials) {
  if (monomials.empty()) return false;
  for (int k = 0; k < kVars; ++k) {
    Int lowest = monomials.front()[k];
    for (const auto& m : monomials) lowest = std::min(lowest, m[k]);
    if (lowest > 0) return monomials.size() == 1 && total_degree(monomials.front()) == 1;
  }
  if (monomials.size() == 1) return false;  // the constant 1 is excluded upstream

  const Exponent& base = monomials.front();
  IntMat diffs(static_cast<Eigen::Index>(monomials.size()) - 1, kVars);
  for (std::size_t r = 1; r < monomials.size(); ++r)
    for (int k = 0; k < kVars; ++k) diffs(static_cast<Eigen::Index>(r) - 1, k) = monomials[r][k] - base[k];
  if (matrix_rank(diffs) >= 2) return true;

  // on a line base + t delta: a general member splits into as many factors as
  // the segment has lattice steps
  IntVec delta = diffs.row(0).transpose();
  make_primitive(delta);
  int axis = 0;
  while (delta(axis) == 0) ++axis;
  Int lo = 0, hi = 0;
  for (Eigen::Index r = 0; r < diffs.rows(); ++r) {
    const Int t = diffs(r, axis) / delta(axis);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo == 1;
}

bool prime_generators(const NewtonData& n) {
  if (!general_member_irreducible(n.monomials)) return false;
  for (int i = 0; i < kVars; ++i) {
    std::vector<Exponent> rest;
    for (const auto& m : n.monomials)
      if (m[i] == 0) rest.push_back(m);
    if (!general_member_irreducible(rest)) return false;
  }
  return true;
}

bool locally_factorial(const SpecifyingData& d, const NewtonData& n, const Cone2& lambda) {
  for (FaceMask I : relevant_faces(d, n, lambda))
    if (!generates_group(columns(d, I))) return false;
  return true;
}

bool quasismooth_degree_test(const SpecifyingData& d, const NewtonData& n, const Cone2& lambda) {
  for (FaceMask I : relevant_faces(d, n, lambda)) {
    if (n.supported_count[I] > 0) continue;
    // mu - w_k in the monoid of w_I: some T_k T^a in M(mu) with supp(a) in I
    bool ok = false;
    for (const auto& m : n.monomials) {
      for (int k = 0; k < kVars && !ok; ++k) {
        if (m[k] == 0) continue;
        Exponent rest = m;
        --rest[k];
        if ((support(rest) & ~I) == 0) ok = true;
      }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<Cone2> mov_chambers(const SpecifyingData& d, const NewtonData& n) {
  Cone2 mov = moving_cone(d);
  std::vector<Cone2> out;
  for (const auto& c : git_fan(d, n).chambers)
    if (mov.contains(c)) out.push_back(c);
  return out;
}

Cone2 fano_chamber(const SpecifyingData& d, const NewtonData& n) {
  const Vec2 k = anticanonical_class(d);
  Cone2 mov = moving_cone(d);
  if (mov.kind() != Cone2::Kind::Wedge || !mov.contains_interior(k)) throw NotFano("-K is not in the interior of the moving cone");
  for (const auto& c : git_fan(d, n).chambers) {
    if (!c.contains(k)) continue;
    if (!c.contains_interior(k)) throw NotFano("-K lies on a wall of the GIT fan");
    if (!mov.contains(c)) throw NotFano("the chamber of -K is not inside the moving cone");
    return c;
  }
  throw NotFano("-K lies in no GIT chamber");
}

Status all_small_modifications_smooth(const SpecifyingData& d, const NewtonData& n) {
  auto chambers = mov_chambers(d, n);
  if (chambers.empty()) return Status::Fail;
  for (const auto& c : chambers)
    if (!locally_factorial(d, n, c) || !quasismooth_degree_test(d, n, c)) return Status::Fail;
  return Status::Pass;
}

bool base_point_free(const SpecifyingData& d, const Cone2& lambda, const Vec2& w) {
  for (FaceMask I : toric_relevant_faces(d, lambda))
    if (!in_monoid(d.w, w, I)) return false;
  return true;
}

bool base_point_free(const SpecifyingData& d, const NewtonData& n, const Vec2& w) {
  return base_point_free(d, fano_chamber(d, n), w);
}

bool z_mu_smooth(const SpecifyingData& d, const NewtonData& n) {
  const Cone2 lambda = fano_chamber(d, n);
  for (FaceMask I : toric_relevant_faces(d, lambda))
    if (xbar_face(n, I) && !generates_group(columns(d, I))) return false;
  return true;
}

VerificationReport verify_candidate(const SpecifyingData& d) { return verify_candidate(d, newton_data(d)); }

VerificationReport verify_candidate(const SpecifyingData& d, const NewtonData& n) {
  VerificationReport r;
  r.fano_chamber = fano_chamber(d, n);
  r.checks.emplace_back("fano", Status::Pass);
  r.checks.emplace_back("small_modifications_smooth", all_small_modifications_smooth(d, n));
  r.checks.emplace_back("prime_generators", prime_generators(n) ? Status::Pass : Status::Fail);

  Status factorial = Status::RequiresOracle;
  r.factoriality_route = "oracle";
  if (is_dolgachev(n.polytope())) {
    factorial = Status::Pass;
    r.factoriality_route = "dolgachev";
  } else if (base_point_free(d, r.fano_chamber, d.mu) && r.fano_chamber.contains_interior(d.mu)) {
    factorial = Status::Pass;
    r.factoriality_route = "base-point-free";
  }
  r.checks.emplace_back("factorial", factorial);

  Status smooth = Status::RequiresOracle;
  r.smoothness_route = "oracle";
  if (z_mu_smooth(d, n) && r.fano_chamber.contains(d.mu)) {
    smooth = Status::Pass;
    r.smoothness_route = "z-mu-smooth";
  }
  r.checks.emplace_back("smooth", smooth);

  for (const auto& [name, s] : r.checks) r.overall = std::max(r.overall, s);
  return r;
}

}  // namespace fano
