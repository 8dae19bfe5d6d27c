#include "spinscreen/angular.hpp"

#include <cctype>
#include <charconv>

#include "spinscreen/errors.hpp"

namespace spinscreen {

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
  if (a.is_negative() || b.is_negative() || c.is_negative()) return false;
  if ((a + b + c).is_half_odd()) return false;
  return abs(a - b) <= c && c <= a + b;
}

std::string SixJLabels::to_string() const {
  return "{" + j1.to_string() + " " + j2.to_string() + " " + j12.to_string() +
         "; " + j3.to_string() + " " + j.to_string() + " " + j23.to_string() + "}";
}

std::vector<HalfInt> ScreenDomain::j12_values() const {
  std::vector<HalfInt> v;
  v.reserve(size);
  for (int i = 0; i < size; ++i) v.push_back(j12_at(i));
  return v;
}

std::vector<HalfInt> ScreenDomain::j23_values() const {
  std::vector<HalfInt> v;
  v.reserve(size);
  for (int i = 0; i < size; ++i) v.push_back(j23_at(i));
  return v;
}

ScreenDomain screen_domain(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j) {
  ScreenDomain d;
  d.j12_min = max(abs(j1 - j2), abs(j3 - j));
  d.j12_max = min(j1 + j2, j3 + j);
  d.j23_min = max(abs(j2 - j3), abs(j1 - j));
  d.j23_max = min(j2 + j3, j1 + j);
  // Quadrilateral closure needs an integer total: the two triads
  // sharing j12 (or j23) must agree on its parity.
  if ((j1 + j2 + j3 + j).is_half_odd() || d.j12_min > d.j12_max ||
      d.j23_min > d.j23_max)
    throw EmptyDomainError("no allowed (j12, j23) for j1=" + j1.to_string() +
                           " j2=" + j2.to_string() + " j3=" + j3.to_string() +
                           " j=" + j.to_string());
  const std::int64_t n12 = (d.j12_max - d.j12_min).twice() / 2 + 1;
  const std::int64_t n23 = (d.j23_max - d.j23_min).twice() / 2 + 1;
  // The closure quadrilateral forces a square screen.
  if (n12 != n23)
    throw EmptyDomainError("internal: screen not square");
  d.size = static_cast<int>(n12);
  return d;
}

HalfInt parse_half_int(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty half-integer");

  const auto slash = s.find('/');
  std::int64_t num = 0;
  std::string head = slash == std::string::npos ? s : s.substr(0, slash);
  auto res = std::from_chars(head.data(), head.data() + head.size(), num);
  if (res.ec != std::errc{} || res.ptr != head.data() + head.size())
    throw ParseError("bad half-integer '" + text + "'");
  if (slash == std::string::npos) return HalfInt(num);

  std::string tail = s.substr(slash + 1);
  std::int64_t den = 0;
  res = std::from_chars(tail.data(), tail.data() + tail.size(), den);
  if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size())
    throw ParseError("bad half-integer '" + text + "'");
  if (den == 1) return HalfInt(num);
  if (den == 2) return HalfInt::from_twice(num);
  throw ParseError("half-integer denominator must be 1 or 2 in '" + text + "'");
}

}  // namespace spinscreen
