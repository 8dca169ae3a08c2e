#pragma once

#include "fano/lattice.hpp"
#include "fano/polytope.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct InvalidData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generator degrees w_1..w_7 and relation degree mu.
struct SpecifyingData {
  Degrees w{};
  Vec2 mu{};

  friend bool operator==(const SpecifyingData&, const SpecifyingData&) = default;
  friend auto operator<=>(const SpecifyingData&, const SpecifyingData&) = default;

  Vec2 column_sum() const;
  // x_1, y_1, ..., x_7, y_7, mu_x, mu_y
  std::array<Int, 2 * kVars + 2> encoding() const;
};

// Stable counter-clockwise sort of the columns.
SpecifyingData sort_columns(SpecifyingData d);

// Empty if every invariant holds, otherwise the first violated one.
std::optional<std::string> validation_error(const SpecifyingData& d);
// sorts the columns, then throws InvalidData on a violated invariant
SpecifyingData make_specifying_data(const Degrees& w, const Vec2& mu);

Cone2 effective_cone(const SpecifyingData& d);
Cone2 moving_cone(const SpecifyingData& d);

// M(mu) with cached support statistics.
struct NewtonData {
  std::vector<Exponent> monomials;
  std::vector<FaceMask> supports;
  // number of monomials supported in each face, saturated at 2
  std::array<std::uint8_t, 128> supported_count{};

  const LatticePolytope& polytope() const;

 private:
  mutable std::optional<LatticePolytope> polytope_;
};

NewtonData newton_data(const SpecifyingData& d);

std::vector<int> indices_of(FaceMask m);
FaceMask mask_of(std::initializer_list<int> zero_based);
std::string face_label(FaceMask m);  // one-based, e.g. "{1,5}"

// The face gamma_I meets the total coordinate space in a point with support
// exactly I. The monomials supported in I span a face of the Newton polytope;
// it has one vertex exactly when it holds one monomial.
bool xbar_face(const NewtonData& n, FaceMask I);

struct GitFan {
  std::vector<Cone2> rays;
  std::vector<Cone2> chambers;  // counter-clockwise
};

// Q(gamma_I)
Cone2 orbit_cone(const SpecifyingData& d, FaceMask I);
GitFan git_fan(const SpecifyingData& d, const NewtonData& n);

// X-faces of the chamber or ray lambda.
std::vector<FaceMask> relevant_faces(const SpecifyingData& d, const NewtonData& n, const Cone2& lambda);
// Faces of the ambient toric variety: no Newton condition.
std::vector<FaceMask> toric_relevant_faces(const SpecifyingData& d, const Cone2& lambda);

// Admissible coordinate changes: unimodular maps of Z^2 together with the
// column reordering they force.
SpecifyingData apply_unimodular(const SpecifyingData& d, Int a, Int b, Int c, Int e);
SpecifyingData canonical_form(const SpecifyingData& d);

}  // namespace fano
