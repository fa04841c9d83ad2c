// uradius: radius queries, disk-sampling membership checks, parameter
// sweeps and transform inspection. Machine-readable output on stdout
// (JSON or CSV), human summaries on stderr.
//
// Exit codes: 0 holds / success, 1 violated, 2 domain error,
//             64 usage, 65 parse error, 74 I/O error, 70 internal.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "uradius/analysis.hpp"
#include "uradius/radii.hpp"
#include "uradius/report_json.hpp"
#include "uradius/series_io.hpp"
#include "uradius/verify.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;

using uradius::Complex;
using uradius::NormalizedFunction;
using uradius::TruncatedSeries;

struct RadiusArgs {
  double a2 = 0.0;
  std::string theorem;
  double tol = 1e-12;
};

struct VerifyArgs {
  std::string series;
  std::string series_file;
  double radius = 0.0;
  std::string quantity = "U";
  int order = uradius::kDefaultOrder;
  int n_radii = 64;
  int n_angles = 128;
  std::string spacing = "uniform_r_squared";
};

struct SweepArgs {
  std::vector<double> a2_values;
  double start = 0.0, stop = 0.0, step = 0.0;
  bool have_range = false;
  std::vector<std::string> theorems;
  std::string format = "csv";
  std::string out;
  double tol = 1e-12;
};

struct TransformArgs {
  std::string series;
  std::string series_file;
  std::string emit = "g";
  int order = uradius::kDefaultOrder;
};

TruncatedSeries load_series(const std::string& inline_text, const std::string& path, int order) {
  std::string text = inline_text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open series file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return uradius::with_order(uradius::parse_series_literal(text), order);
}

uradius::RadiusResult radius_for(const std::string& theorem, double a2, double tol,
                                 std::string* note) {
  if (theorem == "thm1") {
    *note = "valid for class-U inputs with 5/4 <= |a2| <= 2";
    return uradius::radius_theorem1(a2);
  }
  if (theorem == "thm2") {
    *note = "valid for S+ inputs (nonnegative reciprocal coefficients)";
    return uradius::radius_half_a2(a2);
  }
  if (theorem == "thm3") {
    *note = "valid for univalent inputs";
    return uradius::radius_theorem3(a2, tol);
  }
  if (theorem == "thmA") {
    // The |a2|/2 baseline holds for class-U membership of g only when
    // |a2| <= 1; that hypothesis is enforced here.
    if (!(a2 > 0.0 && a2 <= 1.0))
      throw uradius::DomainError("thmA: hypothesis requires 0 < |a2| <= 1");
    *note = "valid for class-U inputs with 0 < |a2| <= 1";
    return uradius::radius_half_a2(a2);
  }
  throw CLI::ValidationError("--theorem", "unknown theorem tag: " + theorem);
}

int cmd_radius(const RadiusArgs& a) {
  std::string note;
  const uradius::RadiusResult r = radius_for(a.theorem, a.a2, a.tol, &note);
  std::cout << uradius::to_json(r) << "\n";
  std::cerr << a.theorem << " radius at |a2|=" << a.a2 << ": " << std::setprecision(10) << r.value
            << " (" << uradius::method_name(r.method) << "; " << note << ")\n";
  return kExitHolds;
}

int cmd_verify(const VerifyArgs& a) {
  if (a.series.empty() == a.series_file.empty())
    throw CLI::ValidationError("--series", "give exactly one of --series / --series-file");
  if (!(a.radius > 0.0 && a.radius < 1.0))
    throw uradius::DomainError("verify: radius must lie in (0, 1)");
  const NormalizedFunction f{load_series(a.series, a.series_file, a.order)};
  uradius::DiskGrid grid = uradius::DiskGrid::defaults(a.radius);
  grid.n_radii = a.n_radii;
  grid.n_angles = a.n_angles;
  grid.spacing = uradius::spacing_from_name(a.spacing);
  const uradius::MembershipReport rep = uradius::check_on_disk(f, uradius::quantity_from_name(a.quantity), grid);
  std::cout << uradius::to_json(rep) << "\n";
  std::cerr << "sup |" << a.quantity << "| = " << std::setprecision(10) << rep.sup_modulus
            << " on " << grid.n_radii << "x" << grid.n_angles << " grid, radius " << a.radius
            << ": " << uradius::verdict_name(rep.verdict) << "\n";
  return rep.verdict == uradius::Verdict::holds_on_grid ? kExitHolds : kExitViolated;
}

int cmd_sweep(const SweepArgs& a) {
  std::vector<double> values = a.a2_values;
  if (a.have_range) {
    if (!(a.step > 0.0)) throw CLI::ValidationError("--a2-step", "step must be positive");
    const int count = static_cast<int>(std::floor((a.stop - a.start) / a.step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) values.push_back(a.start + i * a.step);
  }
  if (values.empty()) throw CLI::ValidationError("--a2", "no a2 values given");
  std::vector<std::string> theorems = a.theorems;
  if (theorems.size() == 1 && theorems[0] == "all") theorems = {"thm1", "thm2", "thm3", "thmA"};
  for (const auto& t : theorems)
    if (t != "thm1" && t != "thm2" && t != "thm3" && t != "thmA")
      throw CLI::ValidationError("--theorems", "unknown theorem tag: " + t);

  std::ostringstream body;
  body << std::setprecision(17);
  nlohmann::json rows = nlohmann::json::array();
  if (a.format == "csv") body << "a2,theorem,radius,method,tol\n";

  for (double a2 : values) {
    for (const auto& t : theorems) {
      std::string note;
      try {
        const uradius::RadiusResult r = radius_for(t, a2, a.tol, &note);
        if (a.format == "csv") {
          body << a2 << "," << t << "," << r.value << "," << uradius::method_name(r.method) << ","
               << r.tol << "\n";
        } else {
          rows.push_back({{"a2", a2},
                          {"theorem", t},
                          {"radius", r.value},
                          {"method", uradius::method_name(r.method)},
                          {"tol", r.tol}});
        }
      } catch (const std::domain_error&) {
        // Per-row domain violations are reported in-band, not fatal.
        if (a.format == "csv")
          body << a2 << "," << t << ",domain_error,,\n";
        else
          rows.push_back({{"a2", a2}, {"theorem", t}, {"error", "domain_error"}});
      }
    }
  }

  const std::string text = a.format == "csv" ? body.str() : rows.dump() + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::ios_base::failure("cannot open output file: " + a.out);
    out << text;
    if (!out.good()) throw std::ios_base::failure("write failed: " + a.out);
  }
  std::cerr << "sweep: " << values.size() * theorems.size() << " rows ("
            << values.size() << " a2 values x " << theorems.size() << " theorems)\n";
  return kExitHolds;
}

int cmd_transform(const TransformArgs& a) {
  if (a.series.empty() == a.series_file.empty())
    throw CLI::ValidationError("--series", "give exactly one of --series / --series-file");
  const NormalizedFunction f{load_series(a.series, a.series_file, a.order)};
  if (a.emit == "g") {
    const NormalizedFunction g = uradius::g_transform(f);
    std::cout << uradius::emit_series_literal(g.series()) << "\n";
  } else if (a.emit == "omega") {
    const uradius::SchwarzFunction w = uradius::extract_omega(f);
    std::cout << uradius::emit_series_literal(w.omega()) << "\n";
  } else if (a.emit == "u-series") {
    std::cout << uradius::emit_series_literal(uradius::u_functional(f)) << "\n";
  } else {
    throw CLI::ValidationError("--emit", "unknown target: " + a.emit);
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"class-U radius toolkit for the transform g = ((z/f) - 1)/(-a2)"};
  app.require_subcommand(1);

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "radius bound for one theorem tag");
  radius->add_option("--a2", ra.a2, "|a2| of the input function")->required();
  radius->add_option("--theorem", ra.theorem, "one of thm1, thm2, thm3, thmA")->required();
  radius->add_option("--tol", ra.tol, "bisection tolerance (thm3)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "sample a membership quantity on a disk grid");
  verify->add_option("--series", va.series, "series literal [[re,im],...] for f");
  verify->add_option("--series-file", va.series_file, "file holding the series literal");
  verify->add_option("--radius", va.radius, "grid radius in (0, 1)")->required();
  verify->add_option("--quantity", va.quantity, "U | f_prime_minus_1 | zfp_over_f_minus_1");
  verify->add_option("--order", va.order, "truncation order for the parsed series");
  verify->add_option("--n-radii", va.n_radii, "number of rings");
  verify->add_option("--n-angles", va.n_angles, "number of angles");
  verify->add_option("--spacing", va.spacing, "uniform_r | uniform_r_squared");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "tabulate radius bounds over a2 values");
  sweep->add_option("--a2", sa.a2_values, "comma-separated a2 values")->delimiter(',');
  auto* st = sweep->add_option("--a2-start", sa.start, "range start");
  sweep->add_option("--a2-stop", sa.stop, "range stop (inclusive)")->needs(st);
  sweep->add_option("--a2-step", sa.step, "range step")->needs(st);
  sweep->add_option("--theorems", sa.theorems, "subset of thm1,thm2,thm3,thmA or 'all'")
      ->delimiter(',')
      ->required();
  sweep->add_option("--format", sa.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", sa.out, "output path (default stdout)");
  sweep->add_option("--tol", sa.tol, "bisection tolerance (thm3)");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "emit g, omega or the U-series of f");
  transform->add_option("--series", ta.series, "series literal [[re,im],...] for f");
  transform->add_option("--series-file", ta.series_file, "file holding the series literal");
  transform->add_option("--emit", ta.emit, "g | omega | u-series");
  transform->add_option("--order", ta.order, "truncation order for the parsed series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  sa.have_range = st->count() > 0;

  try {
    if (radius->parsed()) return cmd_radius(ra);
    if (verify->parsed()) return cmd_verify(va);
    if (sweep->parsed()) return cmd_sweep(sa);
    if (transform->parsed()) return cmd_transform(ta);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const uradius::SeriesParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const uradius::NotInU& e) {
    // A failed representation certificate is a violated membership.
    std::cerr << "violated: " << e.what() << "\n";
    return kExitViolated;
  } catch (const uradius::PoleAtSample& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
