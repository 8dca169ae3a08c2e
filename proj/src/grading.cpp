#include "fano/grading.hpp"

#include <algorithm>

namespace fano {

Vec2 SpecifyingData::column_sum() const {
  Vec2 s;
  for (const auto& v : w) s += v;
  return s;
}

std::array<Int, 2 * kVars + 2> SpecifyingData::encoding() const {
  std::array<Int, 2 * kVars + 2> e{};
  for (int i = 0; i < kVars; ++i) {
    e[2 * i] = w[i].x;
    e[2 * i + 1] = w[i].y;
  }
  e[2 * kVars] = mu.x;
  e[2 * kVars + 1] = mu.y;
  return e;
}

SpecifyingData sort_columns(SpecifyingData d) {
  std::stable_sort(d.w.begin(), d.w.end(), ccw_before);
  return d;
}

std::optional<std::string> validation_error(const SpecifyingData& d) {
  try {
    positive_functional(d.w);
  } catch (const NotPointed&) {
    return "grading is not pointed";
  }
  for (int i = 0; i + 1 < kVars; ++i)
    if (ccw_before(d.w[i + 1], d.w[i])) return "columns are not in counter-clockwise order";
  for (int i = 0; i < kVars; ++i) {
    std::vector<Vec2> rest;
    for (int j = 0; j < kVars; ++j)
      if (j != i) rest.push_back(d.w[j]);
    if (!generates_group(rest)) return "not almost free: omitting column " + std::to_string(i + 1) + " leaves a proper sublattice";
  }
  if (d.mu.is_zero()) return "relation degree is zero";
  for (const auto& v : d.w)
    if (v == d.mu) return "relation degree equals a generator degree";
  if (!in_monoid(d.w, d.mu, kAllVars)) return "no monomial of the relation degree";
  return std::nullopt;
}

SpecifyingData make_specifying_data(const Degrees& w, const Vec2& mu) {
  SpecifyingData d{w, mu};
  try {
    positive_functional(d.w);
  } catch (const NotPointed&) {
    throw InvalidData("grading is not pointed");
  }
  d = sort_columns(d);
  if (auto err = validation_error(d)) throw InvalidData(*err);
  return d;
}

Cone2 effective_cone(const SpecifyingData& d) { return cone_hull(d.w); }

Cone2 moving_cone(const SpecifyingData& d) {
  Cone2 mov = effective_cone(d);
  for (int i = 0; i < kVars; ++i) {
    std::vector<Vec2> rest;
    for (int j = 0; j < kVars; ++j)
      if (j != i) rest.push_back(d.w[j]);
    mov = cone_intersect(mov, cone_hull(rest));
  }
  return mov;
}

// ---------------------------------------------------------------------------

const LatticePolytope& NewtonData::polytope() const {
  if (!polytope_) {
    std::vector<Point> pts;
    for (const auto& m : monomials) pts.emplace_back(m.begin(), m.end());
    polytope_ = LatticePolytope::hull(pts);
  }
  return *polytope_;
}

NewtonData newton_data(const SpecifyingData& d) {
  NewtonData n;
  n.monomials = fiber_points(d.w, d.mu);
  for (const auto& m : n.monomials) n.supports.push_back(support(m));
  for (int I = 0; I < 128; ++I) {
    int c = 0;
    for (auto s : n.supports)
      if ((s & ~I) == 0 && ++c == 2) break;
    n.supported_count[I] = static_cast<std::uint8_t>(c);
  }
  return n;
}

std::vector<int> indices_of(FaceMask m) {
  std::vector<int> out;
  for (int i = 0; i < kVars; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

FaceMask mask_of(std::initializer_list<int> zero_based) {
  FaceMask m = 0;
  for (int i : zero_based) m |= static_cast<FaceMask>(1u << i);
  return m;
}

std::string face_label(FaceMask m) {
  std::string s = "{";
  bool first = true;
  for (int i : indices_of(m)) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

bool xbar_face(const NewtonData& n, FaceMask I) { return n.supported_count[I & kAllVars] != 1; }

Cone2 orbit_cone(const SpecifyingData& d, FaceMask I) {
  std::vector<Vec2> cols;
  for (int i : indices_of(I)) cols.push_back(d.w[i]);
  return cone_hull(cols);
}

GitFan git_fan(const SpecifyingData& d, const NewtonData& n) {
  std::vector<Vec2> rays;
  for (int I = 1; I < 128; ++I) {
    if (!xbar_face(n, static_cast<FaceMask>(I))) continue;
    for (const auto& g : orbit_cone(d, static_cast<FaceMask>(I)).generators()) rays.push_back(g);
  }
  std::sort(rays.begin(), rays.end(), ccw_before);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  GitFan fan;
  for (const auto& r : rays) fan.rays.push_back(Cone2::ray(r));
  for (std::size_t k = 0; k + 1 < rays.size(); ++k) fan.chambers.push_back(Cone2::wedge(rays[k], rays[k + 1]));
  return fan;
}

std::vector<FaceMask> relevant_faces(const SpecifyingData& d, const NewtonData& n, const Cone2& lambda) {
  std::vector<FaceMask> out;
  const Vec2 p = lambda.interior_point();
  for (int I = 1; I < 128; ++I) {
    auto m = static_cast<FaceMask>(I);
    if (xbar_face(n, m) && orbit_cone(d, m).contains_interior(p)) out.push_back(m);
  }
  return out;
}

std::vector<FaceMask> toric_relevant_faces(const SpecifyingData& d, const Cone2& lambda) {
  std::vector<FaceMask> out;
  const Vec2 p = lambda.interior_point();
  for (int I = 1; I < 128; ++I) {
    auto m = static_cast<FaceMask>(I);
    if (orbit_cone(d, m).contains_interior(p)) out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------

SpecifyingData apply_unimodular(const SpecifyingData& d, Int a, Int b, Int c, Int e) {
  Int det = arith::sub(arith::mul(a, e), arith::mul(b, c));
  if (det != 1 && det != -1) throw std::invalid_argument("apply_unimodular: determinant must be +-1");
  auto map = [&](const Vec2& v) {
    return Vec2{arith::add(arith::mul(a, v.x), arith::mul(b, v.y)), arith::add(arith::mul(c, v.x), arith::mul(e, v.y))};
  };
  SpecifyingData out;
  for (int i = 0; i < kVars; ++i) out.w[i] = map(d.w[i]);
  out.mu = map(d.mu);
  return sort_columns(out);
}

namespace {

// Send Eff to cone((1,0), (p,q)) with 0 <= p < q, keeping orientation.
SpecifyingData normalize_oriented(const SpecifyingData& d) {
  Cone2 eff = effective_cone(d);
  if (eff.kind() != Cone2::Kind::Wedge) throw InvalidData("effective cone is not two-dimensional");
  const Vec2 lo = eff.lo();
  // complete lo to a positively oriented basis (lo, u)
  auto [g, s, t] = detail::xgcd(lo.x, lo.y);
  (void)g;
  // s lo.x + t lo.y = 1, so u = (-t, s) has det(lo, u) = 1
  Vec2 u{-t, s};
  // inverse of [lo u] is [[u.y, -u.x], [-lo.y, lo.x]]
  SpecifyingData m = apply_unimodular(d, u.y, -u.x, -lo.y, lo.x);
  Cone2 e2 = effective_cone(m);
  const Vec2 hi = e2.hi();
  Int k = -arith::floor_div(hi.x, hi.y);
  return apply_unimodular(m, 1, k, 0, 1);
}

}  // namespace

SpecifyingData canonical_form(const SpecifyingData& d) {
  SpecifyingData a = normalize_oriented(sort_columns(d));
  SpecifyingData b = normalize_oriented(apply_unimodular(d, 1, 0, 0, -1));
  return a.encoding() <= b.encoding() ? a : b;
}

}  // namespace fano
