#include "fano/polytope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

int popcount(const Bits& a) {
  int n = 0;
  for (auto w : a) n += std::popcount(w);
  return n;
}

Int row_dot(const IntMat& A, int i, const IntVec& r) {
  Int s = 0;
  for (int k = 0; k < A.cols(); ++k) s = arith::add(s, arith::mul(A(i, k), r(k)));
  return s;
}

}  // namespace

std::vector<IntVec> extreme_rays(const IntMat& A) {
  const int n = static_cast<int>(A.rows());
  const int m = static_cast<int>(A.cols());
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;

  // independent starting rows
  std::vector<int> basis_rows;
  IntMat B(0, m);
  for (int i = 0; i < n && static_cast<int>(basis_rows.size()) < m; ++i) {
    IntMat trial(B.rows() + 1, m);
    trial.topRows(B.rows()) = B;
    trial.row(B.rows()) = A.row(i);
    if (matrix_rank<Int>(trial) == trial.rows()) {
      B = trial;
      basis_rows.push_back(i);
    }
  }
  if (static_cast<int>(basis_rows.size()) < m) throw std::invalid_argument("extreme_rays: constraint matrix is not of full column rank");

  struct Ray {
    IntVec v;
    Bits zero;
  };
  std::vector<Ray> rays;
  IntMat adj = adjugate<Int>(B);
  Int det = determinant<Int>(B);
  for (int i = 0; i < m; ++i) {
    IntVec r = adj.col(i);
    if (det < 0) r = -r;
    make_primitive<Int>(r);
    Bits z(words, 0);
    for (int j = 0; j < m; ++j)
      if (j != i) z[basis_rows[j] / 64] |= std::uint64_t(1) << (basis_rows[j] % 64);
    rays.push_back({r, z});
  }

  std::vector<char> done(n, 0);
  for (int i : basis_rows) done[i] = 1;

  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    done[i] = 1;
    std::vector<Int> s(rays.size());
    std::vector<int> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = row_dot(A, i, rays[k].v);
      if (s[k] > 0) pos.push_back(static_cast<int>(k));
      else if (s[k] < 0) neg.push_back(static_cast<int>(k));
      else rays[k].zero[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (s[k] >= 0) next.push_back(rays[k]);
    for (int p : pos)
      for (int q : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
        if (popcount(common) < m - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (static_cast<int>(k) == p || static_cast<int>(k) == q) continue;
          if (subset_of(common, rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec v(m);
        for (int c = 0; c < m; ++c)
          v(c) = arith::sub(arith::mul(s[p], rays[q].v(c)), arith::mul(s[q], rays[p].v(c)));
        make_primitive<Int>(v);
        common[i / 64] |= std::uint64_t(1) << (i % 64);
        next.push_back({v, common});
      }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  for (auto& r : rays) out.push_back(r.v);
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  return out;
}

// ---------------------------------------------------------------------------

bool AffineChart::contains(const Point& x) const {
  for (int c = 0; c < normal.cols(); ++c) {
    Int s = 0;
    for (int i = 0; i < normal.rows(); ++i) s = arith::add(s, arith::mul(x[i] - origin[i], normal(i, c)));
    if (s != 0) return false;
  }
  return true;
}

Point AffineChart::to_chart(const Point& x) const {
  Point c(static_cast<std::size_t>(dim()), 0);
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < coords.rows(); ++i) c[j] = arith::add(c[j], arith::mul(x[i] - origin[i], coords(i, j)));
  return c;
}

Point AffineChart::from_chart(const Point& c) const {
  Point x = origin;
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < basis.cols(); ++i) x[i] = arith::add(x[i], arith::mul(c[j], basis(j, i)));
  return x;
}

AffineChart affine_chart(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_chart: no points");
  const int d = static_cast<int>(pts[0].size());
  AffineChart ch;
  ch.origin = pts[0];
  IntMat D(static_cast<Eigen::Index>(pts.size()), d);
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (int i = 0; i < d; ++i) D(static_cast<Eigen::Index>(r), i) = arith::sub(pts[r][i], pts[0][i]);
  auto snf = smith_normal_form<Int>(D);
  const int k = snf.rank;
  ch.basis = snf.V_inv.topRows(k);
  ch.coords = snf.V.leftCols(k);
  ch.normal = snf.V.rightCols(d - k);
  return ch;
}

// ---------------------------------------------------------------------------

struct LatticePolytope::Impl {
  int ambient = 0;
  AffineChart chart;
  std::vector<Point> vertices;       // ambient
  std::vector<Point> chart_vertices;  // chart coordinates
  std::vector<Facet> facets;
  std::vector<std::pair<int, int>> edges;
  // inequalities of the projections to the first m chart coordinates, m = 1..k
  std::vector<std::vector<Facet>> levels;

  int dim() const { return chart.dim(); }

  Bits tight(const Point& c, Int j) const {
    Bits t((facets.size() + 63) / 64, 0);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      Int s = arith::mul(facets[f].b, j);
      for (std::size_t i = 0; i < c.size(); ++i) s = arith::add(s, arith::mul(facets[f].a[i], c[i]));
      if (s == 0) t[f / 64] |= std::uint64_t(1) << (f % 64);
    }
    return t;
  }

  int normal_rank(const Bits& t) const {
    std::vector<int> rows;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (t[f / 64] >> (f % 64) & 1) rows.push_back(static_cast<int>(f));
    IntMat M(static_cast<Eigen::Index>(rows.size()), dim());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int i = 0; i < dim(); ++i) M(static_cast<Eigen::Index>(r), i) = facets[rows[r]].a[i];
    return matrix_rank<Int>(M);
  }

  template <class Visit>
  void for_each_point(Int j, Visit&& visit) const {
    const int k = dim();
    Point x(static_cast<std::size_t>(k), 0);
    std::function<void(int)> rec = [&](int m) {
      // bounds for x[m] from the level-(m+1) inequalities
      Int lo = 0, hi = -1;
      bool has_lo = false, has_hi = false;
      for (const auto& f : levels[m]) {
        Int rest = arith::mul(f.b, j);
        for (int i = 0; i < m; ++i) rest = arith::add(rest, arith::mul(f.a[i], x[i]));
        Int am = f.a[m];
        if (am > 0) {
          Int l = arith::ceil_div<Int>(-rest, am);
          if (!has_lo || l > lo) lo = l;
          has_lo = true;
        } else if (am < 0) {
          Int h = arith::floor_div<Int>(rest, -am);
          if (!has_hi || h < hi) hi = h;
          has_hi = true;
        } else if (rest < 0) {
          return;
        }
      }
      if (!has_lo || !has_hi) throw std::logic_error("unbounded projection");
      for (Int v = lo; v <= hi; ++v) {
        x[m] = v;
        if (m + 1 == k) visit(x);
        else rec(m + 1);
      }
    };
    if (k == 0) {
      visit(x);
      return;
    }
    rec(0);
  }

  bool strictly_inside(const Point& c, Int j) const {
    for (const auto& f : facets) {
      Int s = arith::mul(f.b, j);
      for (std::size_t i = 0; i < c.size(); ++i) s = arith::add(s, arith::mul(f.a[i], c[i]));
      if (s <= 0) return false;
    }
    return true;
  }
};

namespace {

std::vector<Facet> facets_of(const std::vector<Point>& pts, int k) {
  IntMat A(static_cast<Eigen::Index>(pts.size()), k + 1);
  for (std::size_t r = 0; r < pts.size(); ++r) {
    A(static_cast<Eigen::Index>(r), 0) = 1;
    for (int i = 0; i < k; ++i) A(static_cast<Eigen::Index>(r), i + 1) = pts[r][i];
  }
  std::vector<Facet> out;
  for (const auto& y : extreme_rays(A)) {
    Facet f;
    f.b = y(0);
    f.a.assign(y.data() + 1, y.data() + y.size());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<Point>& input) {
  if (input.empty()) throw std::invalid_argument("LatticePolytope::hull: no points");
  std::vector<Point> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto impl = std::make_shared<Impl>();
  impl->ambient = static_cast<int>(pts[0].size());
  impl->chart = affine_chart(pts);
  const int k = impl->chart.dim();

  std::vector<Point> cpts;
  for (const auto& p : pts) cpts.push_back(impl->chart.to_chart(p));

  if (k == 0) {
    impl->vertices = {pts[0]};
    impl->chart_vertices = {cpts[0]};
  } else {
    impl->facets = facets_of(cpts, k);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (impl->normal_rank(impl->tight(cpts[i], 1)) == k) {
        impl->vertices.push_back(pts[i]);
        impl->chart_vertices.push_back(cpts[i]);
      }
    const auto& cv = impl->chart_vertices;
    for (std::size_t a = 0; a < cv.size(); ++a)
      for (std::size_t b = a + 1; b < cv.size(); ++b) {
        Bits ta = impl->tight(cv[a], 1), tb = impl->tight(cv[b], 1);
        for (std::size_t w = 0; w < ta.size(); ++w) ta[w] &= tb[w];
        if (impl->normal_rank(ta) == k - 1) impl->edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    impl->levels.resize(static_cast<std::size_t>(k));
    impl->levels[k - 1] = impl->facets;
    for (int m = 1; m < k; ++m) {
      std::set<Point> proj;
      for (const auto& v : cv) proj.insert(Point(v.begin(), v.begin() + m));
      impl->levels[m - 1] = facets_of(std::vector<Point>(proj.begin(), proj.end()), m);
    }
  }
  LatticePolytope p;
  p.impl_ = std::move(impl);
  return p;
}

int LatticePolytope::ambient_dim() const { return impl_->ambient; }
int LatticePolytope::dim() const { return impl_->dim(); }
const std::vector<Point>& LatticePolytope::vertices() const { return impl_->vertices; }
const AffineChart& LatticePolytope::chart() const { return impl_->chart; }
const std::vector<Facet>& LatticePolytope::facets() const { return impl_->facets; }
const std::vector<std::pair<int, int>>& LatticePolytope::edges() const { return impl_->edges; }

Int LatticePolytope::lattice_point_count(Int j) const {
  if (j == 0) return 1;
  Int n = 0;
  impl_->for_each_point(j, [&](const Point&) { ++n; });
  return n;
}

Int LatticePolytope::interior_count(Int j) const {
  if (j <= 0) throw std::invalid_argument("interior_count: dilation must be positive");
  Int n = 0;
  impl_->for_each_point(j, [&](const Point& x) {
    if (impl_->strictly_inside(x, j)) ++n;
  });
  return n;
}

std::vector<Int> LatticePolytope::carrier_face_counts() const {
  const int k = dim();
  std::vector<Int> c(static_cast<std::size_t>(k + 1), 0);
  std::map<Bits, int> cache;
  impl_->for_each_point(1, [&](const Point& x) {
    Bits t = impl_->tight(x, 1);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, k - impl_->normal_rank(t)).first;
    ++c[static_cast<std::size_t>(it->second)];
  });
  return c;
}

Int interior_count(const LatticePolytope& p, Int j) { return p.interior_count(j); }

bool is_dolgachev(const LatticePolytope& p) {
  const int k = p.dim();
  if (k < 4) return false;
  for (int i = 0; i < p.ambient_dim(); ++i) {
    bool meets = false;
    for (const auto& v : p.vertices())
      if (v[i] == 0) meets = true;
    if (!meets) return false;
  }
  const auto& facets = p.facets();
  for (const auto& [a, b] : p.edges()) {
    Point ca = p.chart().to_chart(p.vertices()[a]);
    Point cb = p.chart().to_chart(p.vertices()[b]);
    std::vector<const Facet*> through;
    for (const auto& f : facets) {
      Int sa = f.b, sb = f.b;
      for (int i = 0; i < k; ++i) {
        sa += f.a[i] * ca[i];
        sb += f.a[i] * cb[i];
      }
      if (sa == 0 && sb == 0) through.push_back(&f);
    }
    if (static_cast<int>(through.size()) != k - 1) return false;
    IntMat N(k - 1, k);
    for (int r = 0; r < k - 1; ++r)
      for (int i = 0; i < k; ++i) N(r, i) = through[r]->a[i];
    auto snf = smith_normal_form<Int>(N);
    if (snf.rank != k - 1) return false;
    for (Int d : snf.divisors())
      if (d != 1) return false;
  }
  return true;
}

}  // namespace fano
