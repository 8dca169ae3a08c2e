#include "fano/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace fano {

std::string to_string(const Vec2& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

bool is_primitive(const Vec2& v) { return arith::gcd(v.x, v.y) == 1; }

Vec2 primitive(const Vec2& v) {
  Int g = arith::gcd(v.x, v.y);
  if (g == 0) return v;
  return {v.x / g, v.y / g};
}

bool ccw_before(const Vec2& a, const Vec2& b) {
  Int d = det2(a, b);
  if (d != 0) return d > 0;
  return dot2(a, a) < dot2(b, b);
}

namespace {
int half_plane(const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }
}  // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

Int sublattice_index(std::span<const Vec2> vs) {
  if (vs.size() < 2) return 0;
  IntMat m(2, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    m(0, static_cast<Eigen::Index>(j)) = vs[j].x;
    m(1, static_cast<Eigen::Index>(j)) = vs[j].y;
  }
  auto snf = smith_normal_form<Int>(m);
  if (snf.rank < 2) return 0;
  return snf.D(0, 0) * snf.D(1, 1);
}

bool generates_group(std::span<const Vec2> vs) { return sublattice_index(vs) == 1; }

// ---------------------------------------------------------------------------

Cone2 Cone2::ray(const Vec2& v) {
  if (v.is_zero()) return zero();
  Cone2 c;
  c.kind_ = Kind::Ray;
  c.lo_ = c.hi_ = primitive(v);
  return c;
}

Cone2 Cone2::wedge(const Vec2& lo, const Vec2& hi) {
  if (det2(lo, hi) <= 0) throw std::invalid_argument("wedge generators must satisfy det(lo,hi) > 0");
  Cone2 c;
  c.kind_ = Kind::Wedge;
  c.lo_ = primitive(lo);
  c.hi_ = primitive(hi);
  return c;
}

std::vector<Vec2> Cone2::generators() const {
  switch (kind_) {
    case Kind::Zero: return {};
    case Kind::Ray: return {lo_};
    case Kind::Wedge: return {lo_, hi_};
  }
  return {};
}

bool Cone2::contains(const Vec2& v) const {
  switch (kind_) {
    case Kind::Zero: return v.is_zero();
    case Kind::Ray: return det2(lo_, v) == 0 && dot2(lo_, v) >= 0;
    case Kind::Wedge: return det2(lo_, v) >= 0 && det2(v, hi_) >= 0;
  }
  return false;
}

bool Cone2::contains_interior(const Vec2& v) const {
  switch (kind_) {
    case Kind::Zero: return v.is_zero();
    case Kind::Ray: return det2(lo_, v) == 0 && dot2(lo_, v) > 0;
    case Kind::Wedge: return det2(lo_, v) > 0 && det2(v, hi_) > 0;
  }
  return false;
}

bool Cone2::contains(const Cone2& c) const {
  for (const auto& g : c.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone2::is_face(const Cone2& f) const {
  switch (f.kind()) {
    case Kind::Zero: return true;
    case Kind::Ray:
      if (kind_ == Kind::Zero) return false;
      return f.lo() == lo_ || f.lo() == hi_;
    case Kind::Wedge: return *this == f;
  }
  return false;
}

std::string to_string(const Cone2& c) {
  switch (c.kind()) {
    case Cone2::Kind::Zero: return "zero";
    case Cone2::Kind::Ray: return "ray<" + to_string(c.lo()) + ">";
    case Cone2::Kind::Wedge: return "wedge<" + to_string(c.lo()) + "," + to_string(c.hi()) + ">";
  }
  return "?";
}

Cone2 cone_hull(std::span<const Vec2> vs) {
  std::vector<Vec2> dirs;
  for (const auto& v : vs)
    if (!v.is_zero()) dirs.push_back(primitive(v));
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  if (dirs.empty()) return Cone2::zero();
  if (dirs.size() == 1) return Cone2::ray(dirs[0]);
  // A pointed hull leaves exactly one angular gap wider than pi.
  const std::size_t n = dirs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = dirs[i];
    const Vec2& b = dirs[(i + 1) % n];
    if (det2(a, b) < 0) return Cone2::wedge(b, a);
  }
  throw NotPointed("cone hull contains a line");
}

Cone2 cone_intersect(const Cone2& a, const Cone2& b) {
  std::vector<Vec2> rays;
  for (const auto& g : a.generators())
    if (b.contains(g)) rays.push_back(g);
  for (const auto& g : b.generators())
    if (a.contains(g)) rays.push_back(g);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.empty()) return Cone2::zero();
  if (rays.size() == 1) return Cone2::ray(rays[0]);
  if (rays.size() != 2) throw std::logic_error("cone_intersect: more than two extremal rays");
  Int d = det2(rays[0], rays[1]);
  return d > 0 ? Cone2::wedge(rays[0], rays[1]) : Cone2::wedge(rays[1], rays[0]);
}

// ---------------------------------------------------------------------------

FaceMask support(const Exponent& e) {
  FaceMask m = 0;
  for (int i = 0; i < kVars; ++i)
    if (e[i] != 0) m |= static_cast<FaceMask>(1u << i);
  return m;
}

Int total_degree(const Exponent& e) {
  Int s = 0;
  for (Int v : e) s += v;
  return s;
}

Vec2 degree_of(const Degrees& w, const Exponent& e) {
  Vec2 s;
  for (int i = 0; i < kVars; ++i) s += w[i] * e[i];
  return s;
}

Vec2 positive_functional(const Degrees& w, FaceMask mask) {
  auto ok = [&](const Vec2& c) {
    for (int i = 0; i < kVars; ++i)
      if ((mask >> i & 1) && dot2(c, w[i]) <= 0) return false;
    return true;
  };
  // small |c| first so the bounds stay tight
  for (Int r = 0; r <= 50; ++r)
    for (Int a = -r; a <= r; ++a)
      for (Int b : {r - arith::abs(a), arith::abs(a) - r}) {
        Vec2 c{a, b};
        if (ok(c)) return c;
      }
  throw NotPointed("no positive functional with |c| <= 50");
}

namespace {

// Depth-first walk over nonnegative solutions, pruned by the cones spanned by
// the not yet assigned columns.
class FiberWalk {
 public:
  FiberWalk(const Degrees& w, FaceMask mask) : w_(w) {
    for (int i = 0; i < kVars; ++i)
      if (mask >> i & 1) idx_.push_back(i);
    if (!idx_.empty()) c_ = positive_functional(w, mask);
    suffix_.resize(idx_.size() + 1);
    std::vector<Vec2> cols;
    for (std::size_t k = idx_.size(); k-- > 0;) {
      cols.push_back(w[idx_[k]]);
      suffix_[k] = cone_hull(cols);
    }
  }

  template <class Emit>
  void walk(const Vec2& target, Emit&& emit) {
    Exponent e{};
    if (!suffix_[0].contains(target)) return;
    rec(0, target, e, emit);
  }

  std::size_t count(const Vec2& target) { return count_rec(0, target); }

  bool exists(const Vec2& target) {
    bool found = false;
    walk(target, [&](const Exponent&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  template <class Emit>
  bool rec(std::size_t k, const Vec2& t, Exponent& e, Emit& emit) {
    if (k == idx_.size()) {
      if (!t.is_zero()) return true;
      return emit(e);
    }
    const Vec2& wk = w_[idx_[k]];
    if (k + 1 == idx_.size()) {
      // t must be a nonnegative multiple of wk
      if (det2(wk, t) != 0) return true;
      Int num = dot2(c_, t), den = dot2(c_, wk);
      if (num < 0 || num % den != 0) return true;
      e[idx_[k]] = num / den;
      bool go = emit(e);
      e[idx_[k]] = 0;
      return go;
    }
    Vec2 rest = t;
    for (Int a = 0; dot2(c_, rest) >= 0; ++a) {
      if (suffix_[k + 1].contains(rest)) {
        e[idx_[k]] = a;
        if (!rec(k + 1, rest, e, emit)) {
          e[idx_[k]] = 0;
          return false;
        }
      }
      rest -= wk;
    }
    e[idx_[k]] = 0;
    return true;
  }

  std::size_t count_rec(std::size_t k, const Vec2& t) {
    if (k == idx_.size()) return t.is_zero() ? 1 : 0;
    if (!suffix_[k].contains(t)) return 0;
    const Vec2& wk = w_[idx_[k]];
    if (k + 1 == idx_.size()) {
      if (det2(wk, t) != 0) return 0;
      Int num = dot2(c_, t), den = dot2(c_, wk);
      return (num >= 0 && num % den == 0) ? 1 : 0;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(k) << 56) ^
                        (static_cast<std::uint64_t>(t.x & 0xfffffff) << 28) ^
                        static_cast<std::uint64_t>(t.y & 0xfffffff);
    bool small = arith::abs(t.x) < (1 << 26) && arith::abs(t.y) < (1 << 26);
    if (small) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    std::size_t n = 0;
    Vec2 rest = t;
    while (dot2(c_, rest) >= 0) {
      n += count_rec(k + 1, rest);
      rest -= wk;
    }
    if (small) memo_.emplace(key, n);
    return n;
  }

  const Degrees& w_;
  std::vector<int> idx_;
  Vec2 c_{};
  std::vector<Cone2> suffix_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace

std::vector<Exponent> fiber_points(const Degrees& w, const Vec2& target, FaceMask mask) {
  std::vector<Exponent> out;
  FiberWalk walk(w, mask);
  walk.walk(target, [&](const Exponent& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::size_t count_fiber(const Degrees& w, const Vec2& target, FaceMask mask) {
  FiberWalk walk(w, mask);
  return walk.count(target);
}

bool in_monoid(const Degrees& w, const Vec2& target, FaceMask mask) {
  if (target.is_zero()) return true;
  FiberWalk walk(w, mask);
  return walk.exists(target);
}

}  // namespace fano
