#pragma once

#include <optional>
#include <vector>

#include "spinscreen/angular.hpp"
#include "spinscreen/half_int.hpp"

namespace spinscreen {

/// Regge shift rho = [(j2+j) - (j1+j3)]/2 and semi-perimeter
/// s = (j1+j2+j3+j)/2, with s = rho + j1 + j3 = -rho + j2 + j.
struct ReggeData {
  HalfInt rho;
  HalfInt s;
};

ReggeData regge_rho(const SixJLabels& labels);

/// (j1+rho, j2-rho, j12, j3+rho, j-rho, j23); an involution that keeps
/// j12, j23 and the whole screen domain fixed.
SixJLabels regge_transform(const SixJLabels& labels);

/// Deduplicated set of label tuples with identical 6j value.
struct SymmetryOrbit {
  std::vector<SixJLabels> elements;  // sorted, unique
  std::size_t size() const { return elements.size(); }
  bool contains(const SixJLabels& l) const;
};

/// The 24 classical rearrangements: column permutations and
/// simultaneous upper-lower flips of two columns.
SymmetryOrbit classical_orbit(const SixJLabels& labels);

/// Closure of the classical orbit under the Regge transform; size
/// divides 144.
SymmetryOrbit full_orbit(const SixJLabels& labels);

/// Lexicographically least element of the full orbit under the key
/// (j1, j2, j3, j, j12, j23). Deterministic and idempotent.
SixJLabels canonical_form(const SixJLabels& labels);

/// Linear-configuration degeneracies. B and C are transpose-equivalent;
/// D is the Regge-degenerate case rho = 0.
struct DegeneracyFlags {
  bool B = false;  // j1 + j = j2 + j3
  bool C = false;  // j1 + j2 = j3 + j
  bool D = false;  // j1 + j3 = j2 + j
  bool any() const { return B || C || D; }
};

DegeneracyFlags degeneracy_flags(const SixJLabels& labels);

/// Which column equality certifies the exact x <-> y mirror symmetry
/// of the screen.
enum class PieroWhich { j1_eq_j3, j2_eq_j };

/// Present only when j1 == j3 or j2 == j; those equalities make the
/// screen exactly transpose-symmetric. The Regge-degenerate case D is
/// reported via degeneracy_flags, not certified here: it produces the
/// qualitative near-mirror look of the caustic but no exact symmetry.
std::optional<PieroWhich> piero_axis(const SixJLabels& labels);

/// Screen size predicted from the edges of both Regge twins:
/// 2 * min over {J1, J2, J3, J} and the twin edges {S/2 - Ji} with
/// S = J1+J2+J3+J. Exact integer arithmetic.
std::int64_t screen_size_from_edges(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j);

}  // namespace spinscreen
