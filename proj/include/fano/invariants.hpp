#pragma once

#include "fano/verification.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct FitInconsistent : std::domain_error {
  using std::domain_error::domain_error;
};
struct StratumDegenerate : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotApplicable : std::domain_error {
  using std::domain_error::domain_error;
};

Int fano_index(const SpecifyingData& d);

// dim R_w = #M(w) - #M(w - mu)
Int hilbert_dim(const SpecifyingData& d, const Vec2& w);
// k -> hilbert_dim(k (-K)) for k = 0..count-1
std::vector<Int> hilbert_values(const SpecifyingData& d, int count = 7);

struct QuarticFit {
  Int K4 = 0;
  // f(k) - p(k) at k = 5, 6 for the quartic p through k = 0..4
  Int residual5 = 0;
  Int residual6 = 0;
};
QuarticFit quartic_fit(const std::vector<Int>& values);
// throws FitInconsistent on nonzero residuals or nonpositive degree
Int anticanonical_degree(const SpecifyingData& d);

// ---------------------------------------------------------------------------

// e[p][q] coefficients of x^p xbar^q
struct EPoly {
  std::array<std::array<Int, 6>, 6> e{};
  EPoly& operator+=(const EPoly& o);
  EPoly operator*(const EPoly& o) const;
  Int at_one() const;
  friend bool operator==(const EPoly&, const EPoly&) = default;
};
EPoly torus_epoly(int n);  // (x xbar - 1)^n

// E-polynomial of a nondegenerate hypersurface of a torus whose Newton
// polytope is full-dimensional in the torus. Rows p + q <= n - 1 in the
// middle are left open when n = 5: the returned pair is (fixed part,
// coefficient pattern of the free parameter t = e^{1,2}).
struct HypersurfaceEPoly {
  EPoly fixed;
  EPoly per_t;
};
HypersurfaceEPoly hypersurface_epoly(const LatticePolytope& p);

struct HodgeTriple {
  Int h21 = 0;
  Int h31 = 0;
  Int h22 = 0;
  friend bool operator==(const HodgeTriple&, const HodgeTriple&) = default;
};

struct HodgeResult {
  HodgeTriple triple;
  EPoly total;           // e(X) with the free parameter resolved
  Int euler_strata = 0;  // sum over strata of E(1,1)
};
HodgeResult hodge_data(const SpecifyingData& d);
HodgeTriple hodge_numbers(const SpecifyingData& d);

// ---------------------------------------------------------------------------

struct ContractionDescriptor {
  enum class Kind { Fibration, Birational, Product };
  Kind kind = Kind::Fibration;
  bool via_small_modification = false;
  std::string base_or_target;
  std::string fiber_or_center;
  bool singular_target = false;

  friend bool operator==(const ContractionDescriptor&, const ContractionDescriptor&) = default;
};
std::string to_string(ContractionDescriptor::Kind k);

// "P<n>" for equal weights, otherwise "P(a,b,...)"
std::string projective_label(std::vector<Int> weights);
// "Y<d>;<n>" when all weights are 1, otherwise "Y<d>;1^4,3" style
std::string hypersurface_label(Int degree, std::vector<Int> weights);
// Identifies labels naming the same variety: Y1;n = P(n-1), conics, quadric
// surfaces, Q4.
std::string normalize_label(const std::string& label);

struct ProductSplit {
  std::vector<int> factor_columns;  // zero-based, carries M(mu)
  std::vector<int> other_columns;
  std::vector<Int> factor_weights;
  Int factor_degree = 0;
  std::vector<Int> other_weights;
  std::string factor_label() const;
  std::string other_label() const;
};
std::optional<ProductSplit> product_split(const SpecifyingData& d);

std::vector<ContractionDescriptor> elementary_contractions(const SpecifyingData& d);

// ---------------------------------------------------------------------------

bool deformation_applicable(const SpecifyingData& d);
// throws NotApplicable
Int deformation_h1(const SpecifyingData& d, Int dim_aut_x);

}  // namespace fano
