#include "fano/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fano {

Int fano_index(const SpecifyingData& d) {
  Vec2 k = anticanonical_class(d);
  return arith::gcd(k.x, k.y);
}

Int hilbert_dim(const SpecifyingData& d, const Vec2& w) {
  Int total = static_cast<Int>(count_fiber(d.w, w));
  Int shifted = static_cast<Int>(count_fiber(d.w, w - d.mu));
  return total - shifted;
}

std::vector<Int> hilbert_values(const SpecifyingData& d, int count) {
  const Vec2 k = anticanonical_class(d);
  std::vector<Int> out;
  for (int i = 0; i < count; ++i) out.push_back(hilbert_dim(d, k * i));
  return out;
}

QuarticFit quartic_fit(const std::vector<Int>& f) {
  if (f.size() < 7) throw std::invalid_argument("quartic_fit needs seven values");
  // forward differences at 0
  std::vector<std::vector<Int>> diff{f};
  for (int order = 1; order <= 6; ++order) {
    const auto& prev = diff.back();
    std::vector<Int> next;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(arith::sub(prev[i + 1], prev[i]));
    diff.push_back(next);
  }
  QuarticFit fit;
  fit.K4 = diff[4][0];
  fit.residual5 = diff[5][0];
  fit.residual6 = diff[6][0] + 6 * fit.residual5;
  return fit;
}

Int anticanonical_degree(const SpecifyingData& d) {
  QuarticFit fit = quartic_fit(hilbert_values(d, 7));
  if (fit.residual5 != 0 || fit.residual6 != 0) throw FitInconsistent("Hilbert function is not a quartic on k = 0..6");
  if (fit.K4 <= 0) throw FitInconsistent("nonpositive anticanonical degree");
  return fit.K4;
}

// ---------------------------------------------------------------------------

EPoly& EPoly::operator+=(const EPoly& o) {
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) e[p][q] = arith::add(e[p][q], o.e[p][q]);
  return *this;
}

EPoly EPoly::operator*(const EPoly& o) const {
  EPoly r;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      if (e[p][q] == 0) continue;
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          if (o.e[a][b] == 0) continue;
          if (p + a > 5 || q + b > 5) throw std::overflow_error("E-polynomial degree exceeds 5");
          r.e[p + a][q + b] = arith::add(r.e[p + a][q + b], arith::mul(e[p][q], o.e[a][b]));
        }
    }
  return r;
}

Int EPoly::at_one() const {
  Int s = 0;
  for (const auto& row : e)
    for (Int v : row) s = arith::add(s, v);
  return s;
}

namespace {

Int binom(Int n, Int k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Int sign(Int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

EPoly torus_epoly(int n) {
  EPoly r;
  for (int i = 0; i <= n; ++i) r.e[i][i] = sign(n - i) * binom(n, i);
  return r;
}

HypersurfaceEPoly hypersurface_epoly(const LatticePolytope& poly) {
  const int n = poly.dim();
  if (n == 0) throw StratumDegenerate("Newton polytope of a stratum is a point");
  if (n > 5) throw std::invalid_argument("hypersurface_epoly supports tori of dimension at most 5");

  std::vector<Int> lstar(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= n; ++j) lstar[j] = poly.interior_count(j);
  auto phi = [&](int i) {
    Int s = 0;
    for (int j = 1; j <= i; ++j) s += sign(i + j) * binom(n + 1, i - j) * lstar[j];
    return s;
  };
  std::vector<Int> row_sum(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) row_sum[p] = sign(p + n - 1) * binom(n, p + 1) + sign(n - 1) * phi(n - p);
  const std::vector<Int> carrier = poly.carrier_face_counts();

  // value = fixed + t * per_t
  HypersurfaceEPoly out;
  auto& F = out.fixed.e;
  auto& T = out.per_t.e;
  std::array<std::array<bool, 6>, 6> known{};
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q)
      if (p + q >= n) {
        F[p][q] = (p == q && p + 1 <= n) ? sign(n - p - 1) * binom(n, p + 1) : 0;
        known[p][q] = true;
      }
  for (int p = 1; p <= n - 1; ++p) {
    F[p][0] = F[0][p] = sign(n - 1) * carrier[p + 1];
    known[p][0] = known[0][p] = true;
  }

  for (int p = n - 1; p >= 0; --p) {
    Int rest_f = row_sum[p], rest_t = 0;
    std::vector<int> open;
    for (int q = 0; q <= 5; ++q) {
      if (!known[p][q] && q > p && known[q][p]) {
        F[p][q] = F[q][p];
        T[p][q] = T[q][p];
        known[p][q] = true;
      }
      if (known[p][q]) {
        rest_f -= F[p][q];
        rest_t -= T[p][q];
      } else {
        open.push_back(q);
      }
    }
    if (open.empty()) {
      if (rest_f != 0 || rest_t != 0) throw std::logic_error("Danilov-Khovanskii row sum inconsistent");
    } else if (open.size() == 1) {
      F[p][open[0]] = rest_f;
      T[p][open[0]] = rest_t;
      known[p][open[0]] = true;
    } else if (open.size() == 2 && n == 5 && p == 2) {
      // free parameter t = e^{2,1}
      F[2][1] = 0;
      T[2][1] = 1;
      F[2][2] = rest_f;
      T[2][2] = rest_t - 1;
      known[2][1] = known[2][2] = true;
    } else {
      throw std::logic_error("Danilov-Khovanskii system underdetermined");
    }
  }
  return out;
}

HodgeResult hodge_data(const SpecifyingData& d) {
  NewtonData n = newton_data(d);
  const Cone2 lambda = fano_chamber(d, n);
  EPoly fixed, per_t;
  Int euler = 0;
  for (FaceMask I : relevant_faces(d, n, lambda)) {
    const int dim_orbit = static_cast<int>(indices_of(I).size()) - 2;
    if (n.supported_count[I] == 0) {
      EPoly t = torus_epoly(dim_orbit);
      fixed += t;
      euler += t.at_one();
      continue;
    }
    std::vector<Point> pts;
    for (std::size_t m = 0; m < n.monomials.size(); ++m)
      if ((n.supports[m] & ~I) == 0) pts.emplace_back(n.monomials[m].begin(), n.monomials[m].end());
    if (pts.size() < 2) throw StratumDegenerate("stratum " + face_label(I) + " carries a single monomial");
    LatticePolytope poly = LatticePolytope::hull(pts);
    HypersurfaceEPoly h = hypersurface_epoly(poly);
    EPoly torus = torus_epoly(dim_orbit - poly.dim());
    EPoly f = h.fixed * torus;
    EPoly t = h.per_t * torus;
    fixed += f;
    per_t += t;
    euler += f.at_one() + t.at_one();
  }

  Int t = 0;
  if (per_t.e[1][1] != 0) {
    Int num = 2 - fixed.e[1][1];
    if (num % per_t.e[1][1] != 0) throw std::logic_error("h11 = 2 has no integral solution");
    t = num / per_t.e[1][1];
  }
  HodgeResult r;
  r.total = fixed;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) r.total.e[p][q] += t * per_t.e[p][q];
  r.euler_strata = euler;

  const auto& e = r.total.e;
  bool ok = e[0][0] == 1 && e[1][1] == 2;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      if (e[p][q] != e[q][p]) ok = false;
      if (p > 4 || q > 4) {
        if (e[p][q] != 0) ok = false;
      } else if (e[p][q] != e[4 - p][4 - q]) {
        ok = false;
      }
      if ((p == 0) != (q == 0) && e[p][q] != 0) ok = false;
    }
  if (!ok) throw std::logic_error("assembled E-polynomial is not that of a smooth projective fourfold with h11 = 2");
  r.triple = {-e[2][1], e[3][1], e[2][2]};
  return r;
}

HodgeTriple hodge_numbers(const SpecifyingData& d) { return hodge_data(d).triple; }

// ---------------------------------------------------------------------------

std::string to_string(ContractionDescriptor::Kind k) {
  switch (k) {
    case ContractionDescriptor::Kind::Fibration: return "fibration";
    case ContractionDescriptor::Kind::Birational: return "birational";
    case ContractionDescriptor::Kind::Product: return "product";
  }
  return "?";
}

namespace {

std::string weight_list(std::vector<Int> weights) {
  std::sort(weights.begin(), weights.end());
  std::string s;
  for (std::size_t i = 0; i < weights.size();) {
    std::size_t j = i;
    while (j < weights.size() && weights[j] == weights[i]) ++j;
    if (!s.empty()) s += ",";
    s += std::to_string(weights[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

bool all_equal(const std::vector<Int>& w) {
  return std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) == w.end();
}

}  // namespace

std::string projective_label(std::vector<Int> weights) {
  if (weights.size() <= 1) return "pt";
  if (all_equal(weights)) return "P" + std::to_string(weights.size() - 1);
  std::sort(weights.begin(), weights.end());
  std::string s = "P(";
  for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
  return s + ")";
}

std::string hypersurface_label(Int degree, std::vector<Int> weights) {
  bool ones = std::all_of(weights.begin(), weights.end(), [](Int a) { return a == 1; });
  if (ones) return "Y" + std::to_string(degree) + ";" + std::to_string(weights.size() - 1);
  return "Y" + std::to_string(degree) + ";" + weight_list(weights);
}

std::string normalize_label(const std::string& label) {
  if (label == "Q4") return "Y2;5";
  if (label == "P0") return "pt";
  if (label.size() < 2 || label[0] != 'Y') return label;
  auto semi = label.find(';');
  if (semi == std::string::npos) return label;
  Int degree = std::stoll(label.substr(1, semi - 1));
  std::string rest = label.substr(semi + 1);
  Int n = -1;
  if (rest.find_first_of(",^") == std::string::npos) {
    n = std::stoll(rest);
  } else if (rest.rfind("1^", 0) == 0 && rest.find(',') == std::string::npos) {
    n = std::stoll(rest.substr(2)) - 1;
  }
  if (n < 0) return label;
  if (degree == 1) return n == 1 ? "pt" : "P" + std::to_string(n - 1);
  if (degree == 2 && n == 2) return "P1";
  if (degree == 2 && n == 3) return "P1xP1";
  return "Y" + std::to_string(degree) + ";" + std::to_string(n);
}

// ---------------------------------------------------------------------------

namespace {

// w = a v with v primitive and a > 0; 0 if w is off the ray
Int height_on(const Vec2& v, const Vec2& w) {
  if (det2(v, w) != 0 || dot2(v, w) <= 0) return 0;
  return v.x != 0 ? w.x / v.x : w.y / v.y;
}

}  // namespace

std::string ProductSplit::factor_label() const { return hypersurface_label(factor_degree, factor_weights); }
std::string ProductSplit::other_label() const { return projective_label(other_weights); }

std::optional<ProductSplit> product_split(const SpecifyingData& d) {
  std::vector<Vec2> dirs;
  for (const auto& w : d.w) dirs.push_back(primitive(w));
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  if (dirs.size() != 2) return std::nullopt;
  if (arith::abs(det2(dirs[0], dirs[1])) != 1) return std::nullopt;
  int home = -1;
  for (int r = 0; r < 2; ++r)
    if (height_on(dirs[r], d.mu) > 0) home = r;
  if (home < 0) return std::nullopt;
  ProductSplit s;
  for (int i = 0; i < kVars; ++i) {
    if (primitive(d.w[i]) == dirs[home]) {
      s.factor_columns.push_back(i);
      s.factor_weights.push_back(height_on(dirs[home], d.w[i]));
    } else {
      s.other_columns.push_back(i);
      s.other_weights.push_back(height_on(dirs[1 - home], d.w[i]));
    }
  }
  s.factor_degree = height_on(dirs[home], d.mu);
  return s;
}

std::vector<ContractionDescriptor> elementary_contractions(const SpecifyingData& d) {
  using Kind = ContractionDescriptor::Kind;
  if (auto split = product_split(d)) {
    ContractionDescriptor c;
    c.kind = Kind::Product;
    c.base_or_target = split->factor_label();
    c.fiber_or_center = split->other_label();
    return {c};
  }
  const NewtonData n = newton_data(d);
  const Cone2 lambda = fano_chamber(d, n);
  const Cone2 mov = moving_cone(d);
  const Cone2 eff = effective_cone(d);

  std::vector<ContractionDescriptor> out;
  for (int side = 0; side < 2; ++side) {
    const Vec2 v = side == 0 ? mov.lo() : mov.hi();
    const Vec2 outer = side == 0 ? eff.lo() : eff.hi();
    ContractionDescriptor c;
    c.via_small_modification = !lambda.is_face(Cone2::ray(v));

    std::vector<int> S, T;
    for (int i = 0; i < kVars; ++i) (height_on(v, d.w[i]) > 0 ? S : T).push_back(i);

    if (outer == v) {
      c.kind = Kind::Fibration;
      std::vector<Int> heights, phis;
      for (int i : S) heights.push_back(height_on(v, d.w[i]));
      for (int i : T) phis.push_back(arith::abs(det2(v, d.w[i])));
      if (height_on(v, d.mu) > 0) {
        c.base_or_target = hypersurface_label(height_on(v, d.mu), heights);
        c.fiber_or_center = projective_label(phis);
      } else {
        c.base_or_target = projective_label(heights);
        c.fiber_or_center = hypersurface_label(arith::abs(det2(v, d.mu)), phis);
      }
      out.push_back(c);
      continue;
    }

    c.kind = Kind::Birational;
    int cidx = -1;
    for (int i = 0; i < kVars; ++i)
      if (height_on(outer, d.w[i]) > 0) cidx = i;
    const Vec2 wc = primitive(d.w[cidx]);
    Int orient = 0;
    for (int i = 0; i < kVars; ++i)
      if (i != cidx && det2(wc, d.w[i]) != 0) orient = det2(wc, d.w[i]) > 0 ? 1 : -1;
    auto psi = [&](const Vec2& u) { return orient * det2(wc, u); };

    const Int deg = psi(d.mu);
    std::vector<int> rest;
    for (int i = 0; i < kVars; ++i)
      if (i != cidx) rest.push_back(i);
    // a monomial T_c^k T_j lets the target equation solve for T_j
    int eliminated = -1;
    for (const auto& m : n.monomials) {
      if (m[cidx] == 0) continue;
      Exponent r = m;
      r[cidx] = 0;
      if (total_degree(r) == 1) {
        int j = static_cast<int>(std::find(r.begin(), r.end(), 1) - r.begin());
        if (psi(d.w[j]) == deg) eliminated = j;
      }
    }
    std::vector<Int> weights;
    for (int i : rest)
      if (i != eliminated) weights.push_back(psi(d.w[i]));
    c.base_or_target = eliminated >= 0 ? projective_label(weights) : hypersurface_label(deg, weights);

    // singular along the center: every monomial has order >= 2 there
    Int min_order = -1;
    for (const auto& m : n.monomials) {
      Int o = 0;
      for (int i : T)
        if (i != cidx) o += m[i];
      if (min_order < 0 || o < min_order) min_order = o;
    }
    // or the target meets a stratum of the weighted projective space with
    // nontrivial isotropy
    bool meets_isotropy = false;
    for (int J = 1; J <= kAllVars && !meets_isotropy; ++J) {
      if ((J >> cidx & 1) || (eliminated >= 0 && (J >> eliminated & 1))) continue;
      Int g = 0;
      for (int i : indices_of(static_cast<FaceMask>(J))) g = arith::gcd(g, psi(d.w[i]));
      if (g <= 1) continue;
      meets_isotropy = eliminated >= 0 || n.supported_count[J | (1 << cidx)] != 1;
    }
    c.singular_target = min_order >= 2 || meets_isotropy;

    // the center lives in the coordinates on v, graded by height
    std::vector<Int> center_weights;
    for (int i : S) center_weights.push_back(height_on(v, d.w[i]));
    FaceMask face = static_cast<FaceMask>(1u << cidx);
    for (int i : S) face |= static_cast<FaceMask>(1u << i);
    if (S.size() <= 1) {
      c.fiber_or_center = "pt";
    } else if (n.supported_count[face] == 0) {
      c.fiber_or_center = projective_label(center_weights);
    } else {
      c.fiber_or_center = hypersurface_label(deg / psi(v), center_weights);
    }
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool deformation_applicable(const SpecifyingData& d) {
  const NewtonData n = newton_data(d);
  const Cone2 lambda = fano_chamber(d, n);
  if (!base_point_free(d, lambda, d.mu)) return false;
  for (const auto& w : d.w)
    if (in_monoid(d.w, w - d.mu, kAllVars)) return false;
  return true;
}

Int deformation_h1(const SpecifyingData& d, Int dim_aut_x) {
  if (!deformation_applicable(d)) throw NotApplicable("deformation formula hypotheses fail");
  Int h = static_cast<Int>(count_fiber(d.w, d.mu)) - 1 + 2;
  for (const auto& w : d.w) h -= static_cast<Int>(count_fiber(d.w, w));
  return h + dim_aut_x;
}

}  // namespace fano
