#pragma once

#include "fano/integer.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct NotPointed : std::domain_error {
  using std::domain_error::domain_error;
};

struct Vec2 {
  Int x = 0;
  Int y = 0;

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {arith::add(x, o.x), arith::add(y, o.y)}; }
  Vec2 operator-(const Vec2& o) const { return {arith::sub(x, o.x), arith::sub(y, o.y)}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(Int k) const { return {arith::mul(x, k), arith::mul(y, k)}; }
  Vec2& operator+=(const Vec2& o) { return *this = *this + o; }
  Vec2& operator-=(const Vec2& o) { return *this = *this - o; }
  bool is_zero() const { return x == 0 && y == 0; }
};

std::string to_string(const Vec2& v);

inline Int det2(const Vec2& u, const Vec2& v) {
  return arith::sub(arith::mul(u.x, v.y), arith::mul(u.y, v.x));
}
inline Int dot2(const Vec2& u, const Vec2& v) {
  return arith::add(arith::mul(u.x, v.x), arith::mul(u.y, v.y));
}

bool is_primitive(const Vec2& v);
// v / gcd(v); zero stays zero.
Vec2 primitive(const Vec2& v);

// Strict weak order "a before b counter-clockwise" for vectors of a pointed
// cone; equal directions are ordered by length.
bool ccw_before(const Vec2& a, const Vec2& b);

// Full angular order on nonzero vectors, starting at the positive x-axis.
bool angle_less(const Vec2& a, const Vec2& b);

// Index of the sublattice spanned by the vectors (0 if rank < 2), read off the
// Smith normal form of the 2 x n matrix.
Int sublattice_index(std::span<const Vec2> vs);
bool generates_group(std::span<const Vec2> vs);

class Cone2 {
 public:
  enum class Kind { Zero, Ray, Wedge };

  Cone2() = default;
  static Cone2 zero() { return Cone2(); }
  static Cone2 ray(const Vec2& v);
  // det(lo, hi) > 0 required
  static Cone2 wedge(const Vec2& lo, const Vec2& hi);

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(kind_); }
  // Clockwise and counter-clockwise primitive generators; equal for a ray.
  const Vec2& lo() const { return lo_; }
  const Vec2& hi() const { return hi_; }
  std::vector<Vec2> generators() const;

  bool contains(const Vec2& v) const;
  // relative interior
  bool contains_interior(const Vec2& v) const;
  bool contains(const Cone2& c) const;
  // A representative of the relative interior.
  Vec2 interior_point() const { return kind_ == Kind::Wedge ? lo_ + hi_ : lo_; }
  bool is_face(const Cone2& f) const;

  friend bool operator==(const Cone2&, const Cone2&) = default;
  friend auto operator<=>(const Cone2&, const Cone2&) = default;

 private:
  Kind kind_ = Kind::Zero;
  Vec2 lo_{};
  Vec2 hi_{};
};

std::string to_string(const Cone2& c);

// Throws NotPointed when the generated cone contains a line.
Cone2 cone_hull(std::span<const Vec2> vs);
Cone2 cone_intersect(const Cone2& a, const Cone2& b);
inline bool cone_contains(const Cone2& c, const Vec2& v, bool strict) {
  return strict ? c.contains_interior(v) : c.contains(v);
}

// ---------------------------------------------------------------------------
// Monomial fibers of a Z^2-grading with seven variables.

inline constexpr int kVars = 7;
using Exponent = std::array<Int, kVars>;
using Degrees = std::array<Vec2, kVars>;
// subset of {0..6} as a bit mask
using FaceMask = std::uint8_t;
inline constexpr FaceMask kAllVars = 0x7f;

FaceMask support(const Exponent& e);
Int total_degree(const Exponent& e);
Vec2 degree_of(const Degrees& w, const Exponent& e);

// Some c with <c, w_i> > 0 for every column in `mask`, scanning |c| <= 50.
// Throws NotPointed if none exists.
Vec2 positive_functional(const Degrees& w, FaceMask mask = kAllVars);

// All nu >= 0 supported in `mask` with Q nu = target.
std::vector<Exponent> fiber_points(const Degrees& w, const Vec2& target, FaceMask mask = kAllVars);
std::size_t count_fiber(const Degrees& w, const Vec2& target, FaceMask mask = kAllVars);
// target in the monoid generated by the columns in `mask`
bool in_monoid(const Degrees& w, const Vec2& target, FaceMask mask);

}  // namespace fano
