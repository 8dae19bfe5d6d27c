#include "spinscreen/symmetry.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace spinscreen {

namespace {

// Comparison key per the canonical ordering (j1, j2, j3, j, j12, j23).
std::array<std::int64_t, 6> canonical_key(const SixJLabels& l) {
  return {l.j1.twice(), l.j2.twice(), l.j3.twice(),
          l.j.twice(),  l.j12.twice(), l.j23.twice()};
}

// The 24 classical rearrangements of {a b c; d e f}: 6 column orders
// times 4 upper-lower flip patterns (identity or flipping the rows of
// exactly two columns).
void classical_images(const SixJLabels& l, std::vector<SixJLabels>& out) {
  struct Col {
    HalfInt up, dn;
  };
  const std::array<Col, 3> cols = {{{l.j1, l.j3}, {l.j2, l.j}, {l.j12, l.j23}}};
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  // flip mask: bit i set = swap upper/lower of column i; valid masks
  // flip zero or two columns.
  static constexpr int masks[4] = {0b000, 0b011, 0b101, 0b110};
  for (const auto& p : perms) {
    for (int mask : masks) {
      std::array<Col, 3> c = {cols[p[0]], cols[p[1]], cols[p[2]]};
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) std::swap(c[i].up, c[i].dn);
      out.push_back({c[0].up, c[1].up, c[2].up, c[0].dn, c[1].dn, c[2].dn});
    }
  }
}

}  // namespace

bool SymmetryOrbit::contains(const SixJLabels& l) const {
  return std::binary_search(elements.begin(), elements.end(), l);
}

ReggeData regge_rho(const SixJLabels& l) {
  ReggeData out;
  out.rho = HalfInt::from_twice(((l.j2 + l.j) - (l.j1 + l.j3)).twice() / 2);
  out.s = HalfInt::from_twice((l.j1 + l.j2 + l.j3 + l.j).twice() / 2);
  return out;
}

SixJLabels regge_transform(const SixJLabels& l) {
  const HalfInt rho = regge_rho(l).rho;
  return {l.j1 + rho, l.j2 - rho, l.j12, l.j3 + rho, l.j - rho, l.j23};
}

SymmetryOrbit classical_orbit(const SixJLabels& labels) {
  std::vector<SixJLabels> images;
  images.reserve(24);
  classical_images(labels, images);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return {std::move(images)};
}

SymmetryOrbit full_orbit(const SixJLabels& labels) {
  std::set<SixJLabels> seen;
  std::vector<SixJLabels> frontier = {labels};
  while (!frontier.empty()) {
    std::vector<SixJLabels> next;
    for (const SixJLabels& l : frontier) {
      std::vector<SixJLabels> images;
      classical_images(l, images);
      images.push_back(regge_transform(l));
      for (const SixJLabels& img : images)
        if (seen.insert(img).second) next.push_back(img);
    }
    frontier = std::move(next);
  }
  SymmetryOrbit out;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

SixJLabels canonical_form(const SixJLabels& labels) {
  const SymmetryOrbit orbit = full_orbit(labels);
  const SixJLabels* best = &orbit.elements.front();
  for (const SixJLabels& l : orbit.elements)
    if (canonical_key(l) < canonical_key(*best)) best = &l;
  return *best;
}

DegeneracyFlags degeneracy_flags(const SixJLabels& l) {
  DegeneracyFlags f;
  f.B = (l.j1 + l.j) == (l.j2 + l.j3);
  f.C = (l.j1 + l.j2) == (l.j3 + l.j);
  f.D = (l.j1 + l.j3) == (l.j2 + l.j);
  return f;
}

std::optional<PieroWhich> piero_axis(const SixJLabels& l) {
  if (l.j1 == l.j3) return PieroWhich::j1_eq_j3;
  if (l.j2 == l.j) return PieroWhich::j2_eq_j;
  return std::nullopt;
}

std::int64_t screen_size_from_edges(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j) {
  // u_i = 2 J_i; the Regge twin's edges are S/2 - u_i with S = sum u_i.
  const std::array<std::int64_t, 4> u = {j1.twice() + 1, j2.twice() + 1,
                                         j3.twice() + 1, j.twice() + 1};
  const std::int64_t half_sum = (u[0] + u[1] + u[2] + u[3]) / 2;
  std::int64_t best = u[0];
  for (std::int64_t v : u) {
    best = std::min(best, v);
    best = std::min(best, half_sum - v);
  }
  return best;
}

}  // namespace spinscreen
