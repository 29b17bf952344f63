#include "ivpp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ivpp/acceptance.hpp"
#include "ivpp/decomposition.hpp"
#include "ivpp/denominators.hpp"
#include "ivpp/dsl.hpp"
#include "ivpp/error.hpp"
#include "ivpp/io.hpp"
#include "ivpp/ivpp2d.hpp"
#include "ivpp/lotka_volterra.hpp"
#include "ivpp/raster.hpp"

namespace ivpp::cli {
namespace {

struct Options {
  std::string map = "f2d";
  double r = -3.0;
  double s = -1.0;
  std::string start;
  int steps = 10;
  double tol = 0.0;  // 0: the subcommand default
  int period = 3;
  int branch = 0;    // 0: first admissible m
  std::string sign = "+";
  std::string method = "analytic";
  std::string window = "-4,4,-4,4";
  std::string resolution = "800x800";
  std::string format = "pgm";
  std::string output;
  int n_max = 8;
  int depth = 3;
  unsigned threads = 0;
  std::string r_range = "-5,5";
  std::vector<double> slice;
  std::string file;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double parse_double(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "-inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  for (const auto& p : split(text, ',')) values.push_back(parse_double(p));
  if (expected && values.size() != expected) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(expected) + " values");
  }
  return values;
}

Window parse_window(const std::string& text) {
  const auto v = parse_list(text, 4, "--window");
  Window w{v[0], v[1], v[2], v[3]};
  validate(w, Resolution{1, 1});
  return w;
}

Resolution parse_resolution(const std::string& text) {
  const auto parts = split(text, 'x');
  if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "--resolution must look like 800x800");
  Resolution r{static_cast<int>(parse_double(parts[0])), static_cast<int>(parse_double(parts[1]))};
  validate(Window{}, r);
  return r;
}

RationalMapSpec load_map(const Options& o) {
  if (o.map.ends_with(".rmap")) {
    std::ifstream in(o.map);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + o.map);
    std::stringstream text;
    text << in.rdbuf();
    return dsl::parse_map(text.str());
  }
  return builtin::by_name(o.map, o.r);
}

bool is_lv(const Options& o) { return o.map == "f3d"; }

BranchSign parse_sign(const std::string& text) {
  if (text == "+" || text == "plus") return BranchSign::Plus;
  if (text == "-" || text == "minus") return BranchSign::Minus;
  throw Error(ErrorKind::InvalidArgument, "--sign must be + or -");
}

IvppBranch2D pick_branch(const Options& o) {
  if (o.map != "f2d") throw Error(ErrorKind::InvalidArgument, "2D branches need --map f2d");
  const auto all = branches(o.period);
  return o.branch == 0 ? all.front() : branch(o.period, o.branch);
}

void write_output(const Options& o, const std::string& data, std::ostream& out) {
  if (o.output.empty() || o.output == "-") {
    out << data;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.output);
  file << data;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const auto map = load_map(o);
  std::vector<ExtendedComplex> coords;
  for (double v : parse_list(o.start, static_cast<std::size_t>(map.dimension()), "--start")) {
    coords.emplace_back(std::isinf(v) ? ExtendedComplex::infinity() : ExtendedComplex(v));
  }
  const auto trace = iterate(map, PointD(std::move(coords)), o.steps, o.tol > 0 ? o.tol : kTolEq);
  out << dump(to_json(trace));
  return 0;
}

int cmd_ivpp(const Options& o, std::ostream& out) {
  nlohmann::json j;
  j["period"] = o.period;
  if (is_lv(o)) {
    const Complex g = lv_gamma(o.period, o.r, o.s);
    j["r"] = o.r;
    j["s"] = o.s;
    j["gamma"] = to_json(ExtendedComplex(g));
  } else {
    const auto all = branches(o.period);
    const auto g = gamma_poly(o.period);
    j["gamma_monic"] = g.monic;
    if (g.integer_scaled) j["gamma_integer"] = *g.integer_scaled;
    auto list = nlohmann::json::array();
    for (const auto& b : all) list.push_back({{"m", b.m}, {"rho", b.rho}, {"label", b.label()}});
    j["branches"] = std::move(list);
  }
  out << dump(j);
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  if (is_lv(o)) {
    if (o.period != 2) throw Error(ErrorKind::UnsupportedPeriod, "only period 2 is decomposed for f3d");
    out << dump(to_json(lv_decompose_period2(o.r, parse_sign(o.sign))));
    return 0;
  }
  if (o.method != "analytic" && o.method != "empirical") {
    throw Error(ErrorKind::InvalidArgument, "--method must be analytic or empirical");
  }
  const auto b = pick_branch(o);
  out << dump(to_json(decompose(b, o.method == "analytic" ? Method::Analytic : Method::Empirical)));
  return 0;
}

int cmd_boundaries(const Options& o, std::ostream& out) {
  std::vector<int> periods;
  if (o.period == 0) {
    periods = {3, 4, 5, 6};
  } else {
    periods = {o.period};
  }
  out << std::setprecision(12);
  for (int n : periods) {
    for (const auto& b : branches(n)) {
      const auto a = boundaries_analytic(b);
      const auto e = boundaries_empirical(builtin::f2d(), [b](double x) { return b.point(x); }, n);
      double diff = a.size() == e.size() ? 0.0 : std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k + 1 < std::min(a.size(), e.size()); ++k) diff = std::max(diff, std::abs(a[k] - e[k]));
      out << "n=" << n << " " << b.label() << " rho=" << b.rho << "\n  analytic: ";
      for (double x : a) out << ' ' << x;
      out << "\n  empirical:";
      for (double x : e) out << ' ' << x;
      out << "\n  max diff:  " << diff << '\n';
    }
  }
  return 0;
}

int cmd_raster(const Options& o, std::ostream& out) {
  const Window window = parse_window(o.window);
  const Resolution resolution = parse_resolution(o.resolution);
  RasterOptions options;
  options.n_max = o.n_max;
  options.tol = o.tol > 0 ? o.tol : 1e-6;
  options.threads = o.threads;
  std::vector<RasterTarget> targets;
  std::optional<RationalMapSpec> map;
  if (is_lv(o)) {
    if (o.period != 2) throw Error(ErrorKind::UnsupportedPeriod, "only period 2 is rastered for f3d");
    const auto range = parse_list(o.r_range, 2, "--r-range");
    targets.push_back(lv_raster_target(parse_sign(o.sign), range[0], range[1]));
    map = builtin::f3d();
    // Off the branch an (x, y) slice needs a z; only draw generic cells when given one.
    options.classify_generic = !o.slice.empty();
    options.slice = o.slice;
  } else {
    const auto b = pick_branch(o);
    targets.push_back(ivpp2d_target(b, decompose(b, Method::Analytic)));
    map = builtin::f2d();
  }
  const auto raster = render_tiling(*map, targets, window, resolution, options);
  if (o.format == "pgm") {
    write_output(o, raster.to_pgm(), out);
  } else if (o.format == "csv") {
    write_output(o, raster.to_csv(), out);
  } else {
    throw Error(ErrorKind::InvalidArgument, "--format must be pgm or csv");
  }
  return 0;
}

int cmd_denoms(const Options& o, std::ostream& out) {
  const auto map = load_map(o);
  const auto set = denominator_zero_curves(map, o.depth, parse_window(o.window), parse_resolution(o.resolution),
                                           o.slice, o.threads);
  if (o.format == "pgm") {
    write_output(o, first_hit_pgm(set), out);
  } else if (o.format == "csv") {
    write_output(o, zero_set_csv(set), out);
  } else {
    throw Error(ErrorKind::InvalidArgument, "--format must be pgm or csv");
  }
  return 0;
}

int cmd_verify(std::ostream& out) {
  bool all = true;
  for (const auto& r : run_acceptance()) {
    out << format_result(r) << '\n';
    all = all && r.passed;
  }
  out << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}

int cmd_parse(const Options& o, std::ostream& out, std::ostream& err) {
  std::string source;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + o.file);
    std::stringstream text;
    text << in.rdbuf();
    source = text.str();
  } else {
    source = dsl::format_map(load_map(o));
  }
  const auto first = dsl::parse_map(source);
  const std::string text = dsl::format_map(first);
  const auto second = dsl::parse_map(text);
  out << text;
  if (!first.same_structure(second) || dsl::format_map(second) != text) {
    err << "round trip changed the map\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant varieties of periodic points of rational maps", "ivpp"};
  app.require_subcommand(1);
  Options o;

  auto add_map = [&](CLI::App* sub) {
    sub->add_option("--map", o.map, "f2d, f3d, f2d-reduced, lv-recurrence or a *.rmap file");
  };
  auto add_raster_common = [&](CLI::App* sub) {
    sub->add_option("--window", o.window, "xmin,xmax,ymin,ymax");
    sub->add_option("--resolution", o.resolution, "WIDTHxHEIGHT");
    sub->add_option("--format", o.format, "pgm or csv");
    sub->add_option("--output,-o", o.output, "output file (default stdout)");
    sub->add_option("--threads", o.threads, "worker threads (default IVPP_THREADS or all cores)");
    sub->add_option("--slice", o.slice, "fixed coordinates beyond (x, y) for 3D maps")->delimiter(',');
  };

  auto* orbit = app.add_subcommand("orbit", "iterate a map and print the trace as JSON");
  add_map(orbit);
  orbit->add_option("--start", o.start, "comma-separated coordinates, 'inf' allowed")->required();
  orbit->add_option("--steps", o.steps, "number of steps")->check(CLI::NonNegativeNumber);
  orbit->add_option("--tol", o.tol, "chordal closure tolerance")->check(CLI::PositiveNumber);
  orbit->add_option("--r", o.r, "level for f2d-reduced");

  auto* ivpp = app.add_subcommand("ivpp", "period-n condition and branches");
  add_map(ivpp);
  ivpp->add_option("--period", o.period)->required();
  ivpp->add_option("--r", o.r, "level r (f3d)");
  ivpp->add_option("--s", o.s, "level s (f3d)");

  auto* dec = app.add_subcommand("decompose", "component decomposition as JSON");
  add_map(dec);
  dec->add_option("--period", o.period)->required();
  dec->add_option("--branch", o.branch, "branch index m (default: smallest)");
  dec->add_option("--method", o.method, "analytic or empirical");
  dec->add_option("--sign", o.sign, "branch sign for f3d");
  dec->add_option("--r", o.r, "level r for f3d");

  auto* bounds = app.add_subcommand("boundaries", "analytic vs empirical boundaries");
  int bounds_period = 0;
  bounds->add_option("--period", bounds_period, "period (default: 3..6)");

  auto* raster = app.add_subcommand("raster", "tiling raster as PGM or CSV");
  add_map(raster);
  add_raster_common(raster);
  raster->add_option("--period", o.period);
  raster->add_option("--branch", o.branch);
  raster->add_option("--sign", o.sign, "branch sign for f3d");
  raster->add_option("--r-range", o.r_range, "rmin,rmax for f3d, stepped by 1");
  raster->add_option("--n-max", o.n_max, "largest period tested")->check(CLI::PositiveNumber);
  raster->add_option("--tol", o.tol, "period tolerance")->check(CLI::PositiveNumber);

  auto* denoms = app.add_subcommand("denoms", "first-hit layers of the denominator zero curves");
  add_map(denoms);
  add_raster_common(denoms);
  denoms->add_option("--depth", o.depth, "largest step k (1..6)");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");

  auto* parse = app.add_subcommand("parse", "parse, print and re-parse a map");
  parse->add_option("file", o.file, "*.rmap file");
  add_map(parse);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (ivpp->parsed()) return cmd_ivpp(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (bounds->parsed()) {
      o.period = bounds_period;
      return cmd_boundaries(o, out);
    }
    if (raster->parsed()) return cmd_raster(o, out);
    if (denoms->parsed()) return cmd_denoms(o, out);
    if (verify->parsed()) return cmd_verify(out);
    if (parse->parsed()) return cmd_parse(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ivpp::cli
