#include "spinscreen/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "spinscreen/errors.hpp"

namespace spinscreen {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{}) throw ParseError("bad double '" + s + "'");
  return v;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::classical_inside: return "classical_inside";
    case Region::flat_on_caustic: return "flat_on_caustic";
    case Region::forbidden_outside: return "forbidden_outside";
  }
  return "?";
}

const char* quadrilateral_name(Quadrilateral q) {
  switch (q) {
    case Quadrilateral::convex: return "convex";
    case Quadrilateral::concave: return "concave";
    case Quadrilateral::crossed: return "crossed";
    case Quadrilateral::none: return "none";
  }
  return "?";
}

const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::caustic: return "caustic";
    case CurveKind::ridge_x: return "ridge_x";
    case CurveKind::ridge_y: return "ridge_y";
  }
  return "?";
}

const char* curve_branch_name(CurveBranch b) {
  return b == CurveBranch::plus ? "plus" : "minus";
}

namespace {

std::string flags_string(const DegeneracyFlags& f) {
  std::string s;
  if (f.B) s += "B";
  if (f.C) s += "C";
  if (f.D) s += "D";
  return s.empty() ? "-" : s;
}

void write_params_header(std::ostream& os, HalfInt j1, HalfInt j2, HalfInt j3,
                         HalfInt j, const std::string& stamp) {
  os << "# spinscreen\n";
  os << "# j1=" << j1.to_string() << " j2=" << j2.to_string()
     << " j3=" << j3.to_string() << " j=" << j.to_string() << "\n";
  if (!stamp.empty()) os << "# stamp=" << stamp << "\n";
}

}  // namespace

void write_screen_csv(std::ostream& os, const Screen& s, const std::string& stamp) {
  write_params_header(os, s.j1, s.j2, s.j3, s.j, stamp);
  const ScreenDomain& d = s.domain;
  os << "# j12 in [" << d.j12_min.to_string() << ", " << d.j12_max.to_string()
     << "] j23 in [" << d.j23_min.to_string() << ", " << d.j23_max.to_string()
     << "] size=" << d.size << "\n";
  os << "# J12 in [" << format_double(d.J12_lo()) << ", " << format_double(d.J12_hi())
     << "] J23 in [" << format_double(d.J23_lo()) << ", " << format_double(d.J23_hi())
     << "]\n";
  const OrthonormalityDefect cd = orthonormality_defect(s, Axis::columns);
  const OrthonormalityDefect rd = orthonormality_defect(s, Axis::rows);
  os << "# column_defect=" << format_double(cd.max())
     << " row_defect=" << format_double(rd.max())
     << " exact_fallback_columns=" << s.exact_fallback_columns << "\n";
  os << "j12,j23,J12,J23,value,region,quadrilateral\n";

  const ScreenQuad quad = ScreenQuad::from_labels(s.j1, s.j2, s.j3, s.j);
  for (int iy = 0; iy < d.size; ++iy) {
    const HalfInt j23 = d.j23_at(iy);
    const double y = j23.to_double() + 0.5;
    for (int ix = 0; ix < d.size; ++ix) {
      const HalfInt j12 = d.j12_at(ix);
      const double x = j12.to_double() + 0.5;
      const ConfigClass cc = classify_point(x, y, quad);
      os << j12.to_string() << ',' << j23.to_string() << ',' << format_double(x)
         << ',' << format_double(y) << ',' << format_double(s.at(ix, iy)) << ','
         << region_name(cc.region) << ',' << quadrilateral_name(cc.quadrilateral)
         << "\n";
    }
  }
}

namespace {

void write_curve_rows(std::ostream& os, const CurveSet& cs, const CurveSample& c,
                      double sx, double sy) {
  for (const CurvePoint& p : c.points) {
    const double x = sx * p.x, y = sy * p.y;
    const double v2 =
        volume_squared_cm({cs.quad.J1, cs.quad.J2, cs.quad.J3, cs.quad.J,
                           std::abs(x), std::abs(y)});
    double residual = 0.0;
    if (c.kind == CurveKind::caustic) {
      residual = v2;
    } else {
      // Ridge: central difference of V^2 in the transverse variable.
      const double h = 1e-4 * std::max(1.0, cs.quad.max_edge());
      const double ax = std::abs(x), ay = std::abs(y);
      if (c.kind == CurveKind::ridge_x)
        residual = (volume_squared_cm({cs.quad.J1, cs.quad.J2, cs.quad.J3,
                                       cs.quad.J, ax + h, ay}) -
                    volume_squared_cm({cs.quad.J1, cs.quad.J2, cs.quad.J3,
                                       cs.quad.J, ax - h, ay})) /
                   (2.0 * h);
      else
        residual = (volume_squared_cm({cs.quad.J1, cs.quad.J2, cs.quad.J3,
                                       cs.quad.J, ax, ay + h}) -
                    volume_squared_cm({cs.quad.J1, cs.quad.J2, cs.quad.J3,
                                       cs.quad.J, ax, ay - h})) /
                   (2.0 * h);
    }
    os << curve_kind_name(c.kind) << ',' << curve_branch_name(c.branch) << ','
       << format_double(x) << ',' << format_double(y) << ','
       << format_double(residual) << "\n";
  }
}

}  // namespace

void write_curves_csv(std::ostream& os, const CurveSet& cs, const std::string& stamp) {
  write_params_header(os, cs.j1, cs.j2, cs.j3, cs.j, stamp);
  os << "# J12 in [" << format_double(cs.quad.x_lo()) << ", "
     << format_double(cs.quad.x_hi()) << "] J23 in ["
     << format_double(cs.quad.y_lo()) << ", " << format_double(cs.quad.y_hi())
     << "]\n";
  os << "# degeneracy_flags=" << flags_string(cs.flags) << "\n";
  os << "kind,branch,x,y,V2_residual\n";
  for (const CurveSample& c : cs.curves) {
    write_curve_rows(os, cs, c, 1.0, 1.0);
    if (cs.mirrored) {
      write_curve_rows(os, cs, c, -1.0, 1.0);
      write_curve_rows(os, cs, c, 1.0, -1.0);
      write_curve_rows(os, cs, c, -1.0, -1.0);
    }
  }
}

namespace {

json domain_to_json(const ScreenDomain& d) {
  return json{{"j12_min", d.j12_min.to_string()}, {"j12_max", d.j12_max.to_string()},
              {"j23_min", d.j23_min.to_string()}, {"j23_max", d.j23_max.to_string()},
              {"size", d.size}};
}

json params_to_json(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j) {
  return json{{"j1", j1.to_string()}, {"j2", j2.to_string()},
              {"j3", j3.to_string()}, {"j", j.to_string()}};
}

}  // namespace

std::string screen_to_json(const Screen& s, const std::string& stamp) {
  json out;
  out["params"] = params_to_json(s.j1, s.j2, s.j3, s.j);
  out["domain"] = domain_to_json(s.domain);
  const OrthonormalityDefect cd = orthonormality_defect(s, Axis::columns);
  const OrthonormalityDefect rd = orthonormality_defect(s, Axis::rows);
  out["defect"] = json{{"column", cd.max()}, {"row", rd.max()}};
  // Shortest-form strings keep the round trip bit-exact regardless of
  // the JSON library's own float policy.
  json values = json::array();
  for (double v : s.values) values.push_back(format_double(v));
  out["values"] = std::move(values);
  out["curves"] = json::array();
  if (!stamp.empty()) out["stamp"] = stamp;
  return out.dump();
}

Screen screen_from_json(const std::string& text) {
  const json in = json::parse(text);
  Screen s;
  s.j1 = parse_half_int(in.at("params").at("j1").get<std::string>());
  s.j2 = parse_half_int(in.at("params").at("j2").get<std::string>());
  s.j3 = parse_half_int(in.at("params").at("j3").get<std::string>());
  s.j = parse_half_int(in.at("params").at("j").get<std::string>());
  s.domain.j12_min = parse_half_int(in.at("domain").at("j12_min").get<std::string>());
  s.domain.j12_max = parse_half_int(in.at("domain").at("j12_max").get<std::string>());
  s.domain.j23_min = parse_half_int(in.at("domain").at("j23_min").get<std::string>());
  s.domain.j23_max = parse_half_int(in.at("domain").at("j23_max").get<std::string>());
  s.domain.size = in.at("domain").at("size").get<int>();
  for (const auto& v : in.at("values"))
    s.values.push_back(parse_double(v.get<std::string>()));
  s.column_defect.assign(s.domain.size, 0.0);
  return s;
}

std::string curves_to_json(const CurveSet& cs, const std::string& stamp) {
  json out;
  out["params"] = params_to_json(cs.j1, cs.j2, cs.j3, cs.j);
  out["domain"] = json{{"J12_lo", cs.quad.x_lo()}, {"J12_hi", cs.quad.x_hi()},
                       {"J23_lo", cs.quad.y_lo()}, {"J23_hi", cs.quad.y_hi()}};
  out["degeneracy_flags"] = flags_string(cs.flags);
  json curves = json::array();
  for (const CurveSample& c : cs.curves) {
    json jc;
    jc["kind"] = curve_kind_name(c.kind);
    jc["branch"] = curve_branch_name(c.branch);
    jc["closed"] = c.closed;
    jc["has_gaps"] = c.has_gaps;
    json pts = json::array();
    for (const CurvePoint& p : c.points)
      pts.push_back(json::array({format_double(p.x), format_double(p.y)}));
    jc["points"] = std::move(pts);
    curves.push_back(std::move(jc));
  }
  out["curves"] = std::move(curves);
  if (!stamp.empty()) out["stamp"] = stamp;
  return out.dump();
}

}  // namespace spinscreen
