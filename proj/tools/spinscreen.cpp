// Command-line front end: exact 6j/3j values, recurrence screens,
// caustic/ridge curves, the 3j limit tables, and symmetry reports, as
// CSV/JSON files ready for gnuplot.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinscreen/errors.hpp"
#include "spinscreen/exact.hpp"
#include "spinscreen/geometry.hpp"
#include "spinscreen/io.hpp"
#include "spinscreen/recurrence.hpp"
#include "spinscreen/symmetry.hpp"

namespace {

using namespace spinscreen;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEmptyDomain = 3;
constexpr int kExitNumerical = 4;

struct SixJArgs {
  std::vector<std::string> labels;
  bool exact = true;
  bool as_float = false;
};

struct ScreenArgs {
  std::vector<std::string> labels;
  std::string out;
  std::string format = "csv";
  int threads = 0;
  bool stamp = false;
};

struct CurvesArgs {
  std::vector<std::string> labels;
  std::string which = "both";
  int n = 512;
  std::string out;
  std::string format = "csv";
  bool mirror = false;
  std::string sweep;
  bool stamp = false;
};

struct Limit3JArgs {
  std::vector<std::string> labels;
  std::vector<std::string> fd;
  std::string schedule = "10,20,40,80,160";
  std::string det_schedule = "100,10000,1000000";
  std::string out;
};

struct SymmetryArgs {
  std::vector<std::string> labels;
  bool orbit = false;
  bool canonical = false;
  bool regge = false;
  bool flags = false;
};

std::string now_stamp() {
  char buf[64];
  std::time_t t = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::vector<std::int64_t> parse_schedule(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw ParseError("bad R value '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad R value '" + tok + "'");
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open output file " + path);
  os << content;
}

int run_sixj(const SixJArgs& a) {
  SixJLabels l;
  l.j1 = parse_half_int(a.labels[0]);
  l.j2 = parse_half_int(a.labels[1]);
  l.j12 = parse_half_int(a.labels[2]);
  l.j3 = parse_half_int(a.labels[3]);
  l.j = parse_half_int(a.labels[4]);
  l.j23 = parse_half_int(a.labels[5]);

  if (!l.valid()) {
    std::string reason = "quadrilateral closure";
    if (!triangle_ok(l.j1, l.j2, l.j12)) reason = "triangle violation j1 j2 j12";
    else if (!triangle_ok(l.j3, l.j, l.j12)) reason = "triangle violation j3 j j12";
    else if (!triangle_ok(l.j1, l.j, l.j23)) reason = "triangle violation j1 j j23";
    else if (!triangle_ok(l.j3, l.j2, l.j23)) reason = "triangle violation j3 j2 j23";
    std::printf("0 (%s)\n", reason.c_str());
    return kExitOk;
  }
  const ExactRadical v = sixj_exact(l);
  if (a.as_float)
    std::printf("%.17g\n", v.to_double());
  else
    std::printf("%s = %.17g\n", v.to_string().c_str(), v.to_double());
  return kExitOk;
}

int run_screen(const ScreenArgs& a) {
  const HalfInt j1 = parse_half_int(a.labels[0]);
  const HalfInt j2 = parse_half_int(a.labels[1]);
  const HalfInt j3 = parse_half_int(a.labels[2]);
  const HalfInt j = parse_half_int(a.labels[3]);
  const Screen s = build_screen(j1, j2, j3, j, a.threads);
  const std::string stamp = a.stamp ? now_stamp() : "";

  std::string content;
  if (a.format == "json") {
    content = screen_to_json(s, stamp);
  } else {
    std::ostringstream os;
    write_screen_csv(os, s, stamp);
    content = os.str();
  }
  if (a.out.empty())
    std::fwrite(content.data(), 1, content.size(), stdout);
  else
    write_file(a.out, content);
  return kExitOk;
}

CurveSet make_curves(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                     const std::string& which, int n, bool mirror) {
  // Validates the quantum domain before any sampling.
  const ScreenDomain dom = screen_domain(j1, j2, j3, j);
  CurveSet cs;
  cs.j1 = j1;
  cs.j2 = j2;
  cs.j3 = j3;
  cs.j = j;
  cs.quad = ScreenQuad::from_labels(j1, j2, j3, j);
  cs.flags = degeneracy_flags({j1, j2, dom.j12_min, j3, j, dom.j23_min});
  cs.mirrored = mirror;
  if (which == "caustic" || which == "both")
    cs.curves.push_back(sample_caustic(cs.quad, n));
  if (which == "ridges" || which == "both")
    for (CurveSample& r : sample_ridges(cs.quad, n)) cs.curves.push_back(std::move(r));
  return cs;
}

int run_curves(const CurvesArgs& a) {
  const HalfInt j1 = parse_half_int(a.labels[0]);
  const HalfInt j2 = parse_half_int(a.labels[1]);
  const HalfInt j3 = parse_half_int(a.labels[2]);
  const HalfInt j = parse_half_int(a.labels[3]);
  const std::string stamp = a.stamp ? now_stamp() : "";

  std::vector<std::pair<HalfInt, std::string>> runs;  // (j value, out path)
  if (a.sweep.empty()) {
    runs.emplace_back(j, a.out);
  } else {
    // "name=lo:hi:step"; only the fourth label sweeps.
    const auto eq = a.sweep.find('=');
    if (eq == std::string::npos || a.sweep.substr(0, eq) != "j")
      throw ParseError("--sweep expects j=lo:hi:step");
    std::istringstream in(a.sweep.substr(eq + 1));
    std::string lo_s, hi_s, step_s;
    if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
        !std::getline(in, step_s, ':'))
      throw ParseError("--sweep expects j=lo:hi:step");
    const HalfInt lo = parse_half_int(lo_s), hi = parse_half_int(hi_s);
    const HalfInt step = parse_half_int(step_s);
    if (step.twice() <= 0) throw ParseError("--sweep step must be positive");
    for (HalfInt v = lo; v <= hi; v += step) {
      std::string path = a.out;
      if (!path.empty()) {
        const auto dot = path.rfind('.');
        const std::string suffix = "_j" + v.to_string();
        if (dot == std::string::npos)
          path += suffix;
        else
          path.insert(dot, suffix);
      }
      runs.emplace_back(v, path);
    }
  }

  for (const auto& [jv, path] : runs) {
    const CurveSet cs = make_curves(j1, j2, j3, jv, a.which, a.n, a.mirror);
    std::string content;
    if (a.format == "json") {
      content = curves_to_json(cs, stamp);
    } else {
      std::ostringstream os;
      write_curves_csv(os, cs, stamp);
      content = os.str();
    }
    if (path.empty())
      std::fwrite(content.data(), 1, content.size(), stdout);
    else
      write_file(path, content);
  }
  return kExitOk;
}

int run_limit3j(const Limit3JArgs& a) {
  const HalfInt j1 = parse_half_int(a.labels[0]);
  const HalfInt j2 = parse_half_int(a.labels[1]);
  const HalfInt j3 = parse_half_int(a.labels[2]);
  const std::vector<std::int64_t> sched = parse_schedule(a.schedule);

  LimitEstimate est;
  HalfInt l1, l2, l3;
  if (!a.fd.empty()) {
    if (a.labels.size() != 3)
      throw ParseError("--fd replaces l1 l2 l3; give only j1 j2 j3");
    const HalfInt F = parse_half_int(a.fd[0]);
    const HalfInt D = parse_half_int(a.fd[1]);
    l1 = F;
    l2 = -F;
    l3 = D;
    est = threej_limit_estimate_fd(j1, j2, j3, F, D, sched);
  } else {
    if (a.labels.size() != 6)
      throw ParseError("limit3j needs j1 j2 j3 l1 l2 l3 (or --fd F D)");
    l1 = parse_half_int(a.labels[3]);
    l2 = parse_half_int(a.labels[4]);
    l3 = parse_half_int(a.labels[5]);
    est = threej_limit_estimate(j1, j2, j3, l1, l2, l3, sched);
  }

  std::ostringstream os;
  os << "# 3j target (m1=" << est.m1.to_string() << " m2=" << est.m2.to_string()
     << " m3=" << est.m3.to_string() << "): " << format_double(est.threej) << "\n";
  os << "R,scaled_sixj,abs_delta,sign\n";
  for (const LimitRow& r : est.rows)
    os << r.R << ',' << format_double(r.scaled_sixj) << ','
       << format_double(r.abs_delta) << ',' << r.sign << "\n";

  os << "# caustic determinant ratio (5x5 / (2 R^2)) / (4x4)\n";
  os << "R,det_ratio,abs_ratio_minus_one\n";
  for (std::int64_t R : parse_schedule(a.det_schedule)) {
    const double ratio =
        limit_det_ratio(j1.to_double(), j2.to_double(), j3.to_double(),
                        l1.to_double(), l2.to_double(), l3.to_double(),
                        static_cast<double>(R));
    os << R << ',' << format_double(ratio) << ','
       << format_double(std::fabs(ratio - 1.0)) << "\n";
  }

  const std::string content = os.str();
  std::fwrite(content.data(), 1, content.size(), stdout);
  if (!a.out.empty()) write_file(a.out, content);
  return kExitOk;
}

int run_symmetry(const SymmetryArgs& a) {
  const HalfInt j1 = parse_half_int(a.labels[0]);
  const HalfInt j2 = parse_half_int(a.labels[1]);
  const HalfInt j3 = parse_half_int(a.labels[2]);
  const HalfInt j = parse_half_int(a.labels[3]);
  const ScreenDomain dom = screen_domain(j1, j2, j3, j);
  HalfInt j12 = dom.j12_min, j23 = dom.j23_min;
  if (a.labels.size() == 6) {
    j12 = parse_half_int(a.labels[4]);
    j23 = parse_half_int(a.labels[5]);
  }
  const SixJLabels l = {j1, j2, j12, j3, j, j23};
  if (!l.valid()) {
    std::printf("invalid labels %s\n", l.to_string().c_str());
    return kExitEmptyDomain;
  }

  const bool all = !(a.orbit || a.canonical || a.regge || a.flags);
  if (all || a.regge) {
    const ReggeData r = regge_rho(l);
    const SixJLabels t = regge_transform(l);
    std::printf("rho = %s, s = %s\n", r.rho.to_string().c_str(), r.s.to_string().c_str());
    std::printf("regge twin: %s\n", t.to_string().c_str());
  }
  if (all || a.orbit) {
    std::printf("classical orbit size: %zu\n", classical_orbit(l).size());
    std::printf("full orbit size: %zu\n", full_orbit(l).size());
  }
  if (all || a.canonical)
    std::printf("canonical form: %s\n", canonical_form(l).to_string().c_str());
  if (all || a.flags) {
    const DegeneracyFlags f = degeneracy_flags(l);
    std::string fs;
    if (f.B) fs += "B (j1+j = j2+j3) ";
    if (f.C) fs += "C (j1+j2 = j3+j) ";
    if (f.D) fs += "D (j1+j3 = j2+j) ";
    if (fs.empty()) fs = "none";
    std::printf("degeneracy flags: %s\n", fs.c_str());
    const auto cert = piero_axis(l);
    if (cert)
      std::printf("piero axis: %s\n",
                  *cert == PieroWhich::j1_eq_j3 ? "j1 = j3" : "j2 = j");
    else if (f.D)
      std::printf("piero axis: none (Regge-degenerate rho = 0; caustic is only "
                  "approximately specular)\n");
    else
      std::printf("piero axis: none\n");
    std::printf("screen size: %d\n", dom.size);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner 6j screens: exact values, recurrence matrices, and "
               "semiclassical tetrahedron geometry"};
  app.require_subcommand(1);

  SixJArgs sixj_args;
  CLI::App* sixj = app.add_subcommand("sixj", "exact 6j symbol {j1 j2 j12; j3 j j23}");
  sixj->add_option("labels", sixj_args.labels, "j1 j2 j12 j3 j j23")
      ->expected(6)
      ->required();
  sixj->add_flag("--exact", sixj_args.exact, "print exact radical form (default)");
  sixj->add_flag("--float", sixj_args.as_float, "print decimal value only");

  ScreenArgs screen_args;
  CLI::App* screen = app.add_subcommand("screen", "build the (j12, j23) 6j matrix");
  screen->add_option("labels", screen_args.labels, "j1 j2 j3 j")->expected(4)->required();
  screen->add_option("--out", screen_args.out, "output path (stdout if omitted)");
  screen->add_option("--format", screen_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  screen->add_option("--threads", screen_args.threads, "worker threads (0 = auto)");
  screen->add_flag("--stamp", screen_args.stamp, "embed a timestamp header");

  CurvesArgs curves_args;
  CLI::App* curves = app.add_subcommand("curves", "sample caustic and ridge curves");
  curves->add_option("labels", curves_args.labels, "j1 j2 j3 j")->expected(4)->required();
  curves->add_option("--which", curves_args.which, "caustic, ridges or both")
      ->check(CLI::IsMember({"caustic", "ridges", "both"}));
  curves->add_option("--n", curves_args.n, "points per curve")->check(CLI::Range(16, 1000000));
  curves->add_option("--out", curves_args.out, "output path (stdout if omitted)");
  curves->add_option("--format", curves_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  curves->add_flag("--mirror", curves_args.mirror, "emit mirror replicas in negative quadrants");
  curves->add_option("--sweep", curves_args.sweep, "sweep the j label, e.g. j=25:275:25");
  curves->add_flag("--stamp", curves_args.stamp, "embed a timestamp header");

  Limit3JArgs limit_args;
  CLI::App* limit = app.add_subcommand("limit3j", "3j as the large-R limit of the 6j");
  limit->add_option("labels", limit_args.labels, "j1 j2 j3 [l1 l2 l3]")
      ->expected(3, 6)
      ->required();
  limit->add_option("--fd", limit_args.fd, "F D instead of l1 l2 l3")->expected(2);
  limit->add_option("--R-schedule", limit_args.schedule, "comma separated, increasing");
  limit->add_option("--det-R-schedule", limit_args.det_schedule,
                    "R values for the determinant ratio");
  limit->add_option("--out", limit_args.out, "also write the table to a file");

  SymmetryArgs sym_args;
  CLI::App* sym = app.add_subcommand("symmetry", "Regge/classical symmetry report");
  sym->add_option("labels", sym_args.labels, "j1 j2 j3 j [j12 j23]")
      ->expected(4, 6)
      ->required();
  sym->add_flag("--orbit", sym_args.orbit, "orbit sizes only");
  sym->add_flag("--canonical", sym_args.canonical, "canonical form only");
  sym->add_flag("--regge", sym_args.regge, "rho, s and the twin only");
  sym->add_flag("--flags", sym_args.flags, "degeneracy flags only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sixj->parsed()) return run_sixj(sixj_args);
    if (screen->parsed()) return run_screen(screen_args);
    if (curves->parsed()) return run_curves(curves_args);
    if (limit->parsed()) return run_limit3j(limit_args);
    if (sym->parsed()) return run_symmetry(sym_args);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const EmptyDomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEmptyDomain;
  } catch (const InvalidScheduleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}
