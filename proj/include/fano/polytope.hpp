#pragma once

#include "fano/integer.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace fano {

using Point = std::vector<Int>;

// Extreme rays of the pointed cone { y : A y >= 0 } (A of full column rank),
// by the double description method. Rays are primitive and sorted.
std::vector<IntVec> extreme_rays(const IntMat& A);

// Integral affine chart of the affine hull of a point set: x = origin + c B
// with B a basis of the saturated direction lattice.
struct AffineChart {
  Point origin;
  IntMat basis;   // k x d
  IntMat coords;  // d x k, c = (x - origin) coords
  IntMat normal;  // d x (d - k), x - origin in the hull iff (x - origin) normal = 0

  int dim() const { return static_cast<int>(basis.rows()); }
  bool contains(const Point& x) const;
  Point to_chart(const Point& x) const;
  Point from_chart(const Point& c) const;
};

AffineChart affine_chart(const std::vector<Point>& pts);

// b + <a, x> >= 0 in chart coordinates, (b, a) primitive
struct Facet {
  Int b = 0;
  Point a;
};

class LatticePolytope {
 public:
  LatticePolytope() = default;
  // Convex hull of the points; only the vertices are retained.
  static LatticePolytope hull(const std::vector<Point>& pts);

  int ambient_dim() const;
  int dim() const;
  const std::vector<Point>& vertices() const;
  const AffineChart& chart() const;
  const std::vector<Facet>& facets() const;
  // vertex index pairs spanning one-dimensional faces
  const std::vector<std::pair<int, int>>& edges() const;

  // Lattice points of j P, and of its relative interior, in the lattice of
  // the affine hull.
  Int lattice_point_count(Int j) const;
  Int interior_count(Int j) const;
  // c[d] = number of lattice points of P whose smallest face has dimension d
  std::vector<Int> carrier_face_counts() const;

  bool empty() const { return !impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Int interior_count(const LatticePolytope& p, Int j);

// Dimension at least 4, every coordinate hyperplane meets P, and at every
// edge the facet normals through it form part of a lattice basis.
bool is_dolgachev(const LatticePolytope& p);

}  // namespace fano
