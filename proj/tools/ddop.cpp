// Command-line front end for the discrete differential operator library.
//
// Exit status: 0 success, 1 an --assert claim failed, 2 usage error,
// 3 numerical failure (singular matrix).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ddop/cli/builtins.hpp"
#include "ddop/cli/csv.hpp"
#include "ddop/cli/harness.hpp"
#include "ddop/diffop1d.hpp"
#include "ddop/diffop2d.hpp"
#include "ddop/errors.hpp"
#include "ddop/vandermonde.hpp"

namespace {

using namespace ddop;
using namespace ddop::cli;

constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// "0..10", "1,3,5" or a mix like "0..2,6".
std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw DomainError("empty order range '" + item + "'");
        for (int i = lo; i <= hi; ++i) out.push_back(i);
      }
    } catch (const std::logic_error&) {
      throw DomainError("invalid order list '" + text + "'");
    }
  }
  return out;
}

std::vector<double> parse_spacings(const std::string& text) {
  auto hs = parse_number_list(text);
  if (hs.empty()) throw DomainError("--h needs at least one spacing");
  for (double h : hs) {
    if (!(h > 0.0)) throw DomainError("--h: spacings must be > 0");
  }
  return hs;
}

// Destination for CSV output: the --output file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int report_claims(const std::vector<ClaimResult>& claims) {
  bool ok = true;
  for (const auto& c : claims) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.claim;
    if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
    std::cerr << '\n';
    ok = ok && c.passed;
  }
  return ok ? 0 : kExitAssert;
}

struct Options {
  std::string fn = "exp2x";
  std::string input;
  std::string output;
  std::string h;
  int n_points = 0;
  std::string orders;
  int factor = 4;
  std::string method = "ddp";
  int levels = 2;
  std::string kernel = "binomial";
  int side = 3;
  int max_points = 0;
  int min_points = 3;
  double start = -10.0;
  int count = 300;
  std::string offsets;
  std::string center;
  bool passthrough_zeroth = false;
  bool assert_claims = false;
};

std::string with_input(const Options& o) {
  return o.input.empty() ? "fn=" + o.fn : "input=" + o.input;
}

int cmd_derivatives(const Options& o) {
  const int n_points = o.n_points ? o.n_points : 11;
  std::vector<DerivativeRow> rows;
  std::string fn_name;
  std::string h_text = o.h, center_text = o.center;
  if (!o.input.empty()) {
    const Signal s = signal_from_table(read_table_file(o.input));
    const auto orders = parse_orders(o.orders);
    rows = derivative_table(s, n_points, orders, o.passthrough_zeroth);
    h_text = format_double(s.spacing);
    // Tabulated input is always expanded about its middle sample.
    center_text = format_double(s.abscissa((s.size() - 1) / 2));
  } else {
    const BuiltinFunction f = parse_function(o.fn);
    fn_name = f.name;
    DerivativeConfig config;
    config.spacings = parse_spacings(o.h);
    config.n_points = n_points;
    config.orders = parse_orders(o.orders);
    config.x0 = parse_number_list(o.center).at(0);
    config.passthrough_zeroth = o.passthrough_zeroth;
    rows = derivative_table(f, config);
  }

  Sink sink(o.output);
  CsvWriter csv(sink.stream(),
                "ddop derivatives " + with_input(o) + " h=" + h_text + " n_points=" +
                    std::to_string(n_points) + " orders=" + o.orders + " center=" + center_text +
                    " passthrough_zeroth=" + (o.passthrough_zeroth ? "true" : "false"),
                "method,order,h,estimate,truth,abs_error");
  for (const auto& r : rows) csv.row(r.method, r.order, r.h, r.estimate, r.truth, r.abs_error);
  return o.assert_claims ? report_claims(check_derivative_claims(fn_name, rows)) : 0;
}

int cmd_sweep(const Options& o) {
  const BuiltinFunction f = parse_function(o.fn);
  SweepConfig config;
  config.h = parse_spacings(o.h).at(0);
  config.orders = parse_orders(o.orders);
  config.min_points = o.min_points;
  config.max_points = o.max_points;
  config.x0 = parse_number_list(o.center).at(0);
  config.passthrough_zeroth = o.passthrough_zeroth;
  const auto rows = sample_count_sweep(f, config);

  Sink sink(o.output);
  CsvWriter csv(sink.stream(),
                "ddop sweep fn=" + f.name + " h=" + format_double(config.h) + " orders=" +
                    o.orders + " min_points=" + std::to_string(config.min_points) +
                    " max_points=" + std::to_string(config.max_points) +
                    " passthrough_zeroth=" + (o.passthrough_zeroth ? "true" : "false"),
                "n_points,order,abs_error,det");
  for (const auto& r : rows) csv.row(r.n_points, r.order, r.abs_error, r.det);
  return o.assert_claims ? report_claims(check_sweep_claims(rows)) : 0;
}

InterpSettings interp_settings(const Options& o) {
  InterpSettings s;
  s.n_points = o.n_points ? o.n_points : 5;
  s.factor = o.factor;
  s.levels = o.levels;
  s.kernel = parse_kernel(o.kernel);
  return s;
}

std::string interp_config(const Options& o, const InterpSettings& s) {
  return with_input(o) + (o.input.empty() ? " h=" + o.h : std::string()) + " n_points=" + std::to_string(s.n_points) +
         " factor=" + std::to_string(s.factor) + " levels=" + std::to_string(s.levels) +
         " kernel=" + std::string(kernel_name(s.kernel));
}

int cmd_interp(const Options& o) {
  const InterpSettings s = interp_settings(o);
  std::optional<BuiltinFunction> f;
  Signal knots;
  if (!o.input.empty()) {
    knots = signal_from_table(read_table_file(o.input));
  } else {
    f = parse_function(o.fn);
    const double h = parse_spacings(o.h).at(0);
    knots = Signal::sampled(f->value, o.start, h, o.count);
  }
  const Signal out = interpolate(o.method, knots, s);
  const ResampleGrid grid = make_resample_grid(knots, s.factor);

  Sink sink(o.output);
  CsvWriter csv(sink.stream(),
                "ddop interp method=" + o.method + " " + interp_config(o, s) + " start=" +
                    format_double(knots.start) + " count=" + std::to_string(knots.size()),
                f ? "x,value,truth,abs_error" : "x,value");
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    const double x = grid.abscissa(k);
    if (f) {
      const double truth = f->value(x);
      csv.row(x, out.values[k], truth, std::abs(out.values[k] - truth));
    } else {
      csv.row(x, out.values[k]);
    }
  }
  return 0;
}

int cmd_bench(const Options& o) {
  const InterpSettings s = interp_settings(o);
  std::vector<InterpRow> rows;
  if (!o.input.empty()) {
    rows = interp_bench(signal_from_table(read_table_file(o.input)), s);
  } else {
    const BuiltinFunction f = parse_function(o.fn);
    BenchConfig config;
    config.spacings = parse_spacings(o.h);
    config.interp = s;
    config.start = o.start;
    config.count = o.count;
    rows = interp_bench(f, config);
  }

  Sink sink(o.output);
  CsvWriter csv(sink.stream(),
                "ddop bench " + interp_config(o, s) +
                    (o.input.empty() ? " start=" + format_double(o.start) +
                                           " count=" + std::to_string(o.count)
                                     : std::string()) +
                    " spline=natural",
                "method,h,n_points,total_abs_error,interior_abs_error,boundary_abs_error");
  for (const auto& r : rows) {
    csv.row(r.method, r.h, r.n_points, r.total_abs_error, r.interior_abs_error,
            r.boundary_abs_error);
  }
  return o.assert_claims ? report_claims(check_bench_claims(rows)) : 0;
}

int cmd_bounds(const Options& o) {
  const double h = parse_spacings(o.h).at(0);
  const auto orders = parse_orders(o.orders);
  const int max_points = o.max_points;
  const auto rows = bounds_table(h, orders, max_points, true);

  Sink sink(o.output);
  CsvWriter csv(sink.stream(),
                "ddop bounds h=" + format_double(h) + " orders=" + o.orders +
                    " max_points=" + std::to_string(max_points) + " M=1 K=(n_points-1)/2",
                "n_points,order,bound");
  for (const auto& r : rows) csv.row(r.n_points, r.order, r.bound);
  return o.assert_claims ? report_claims(check_bound_claims(h)) : 0;
}

int cmd_vandermonde(const Options& o) {
  Offsets<double> offsets;
  if (!o.offsets.empty()) {
    const auto v = parse_number_list(o.offsets);
    offsets = Offsets<double>(Eigen::Map<const Eigen::VectorXd>(v.data(), v.size()));
  } else {
    const double h = o.h.empty() ? 1.0 : parse_spacings(o.h).at(0);
    offsets = make_plan(0.0, h, o.n_points ? o.n_points : 3).offsets();
  }
  const VandermondeMatrix<double> w(offsets);
  const Eigen::MatrixXd inv = inverse_explicit(w);

  Sink sink(o.output);
  std::string listed;
  for (Eigen::Index i = 0; i < offsets.size(); ++i) {
    listed += (i ? "," : "") + format_double(offsets[i]);
  }
  CsvWriter csv(sink.stream(), "ddop vandermonde offsets=" + listed, "kind,row,col,value");
  const auto n = static_cast<int>(offsets.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) csv.row("matrix", r, c, w.matrix()(r, c));
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) csv.row("inverse", r, c, inv(r, c));
  }
  csv.row("det", 0, 0, determinant(w));
  return 0;
}

int cmd_derivatives2d(const Options& o) {
  int side = o.side;
  double h = o.h.empty() ? 1.0 : parse_spacings(o.h).at(0);
  double x0 = 0.0, y0 = 0.0;
  if (!o.center.empty()) {
    const auto c = parse_number_list(o.center);
    if (c.size() != 2) throw DomainError("--center expects x,y");
    x0 = c[0];
    y0 = c[1];
  }

  std::optional<BuiltinFunction2D> f;
  Eigen::VectorXd samples;
  SampleGrid2D grid;
  if (!o.input.empty()) {
    // Custom grid: side*side samples on a square lattice, any row order.
    auto pts = grid_from_table(read_table_file(o.input));
    side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(pts.size()))));
    if (side < 1 || static_cast<std::size_t>(side) * side != pts.size()) {
      throw DomainError("grid CSV must hold side*side samples");
    }
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
    }
    h = side > 1 ? (xmax - xmin) / (side - 1) : 1.0;
    x0 = 0.5 * (xmin + xmax);
    y0 = 0.5 * (ymin + ymax);
    grid = make_grid(x0, y0, h, side);
    samples.resize(grid.m());
    std::vector<bool> seen(grid.m(), false);
    for (const auto& p : pts) {
      const auto ip = std::lround((p.x - xmin) / h);
      const auto iq = std::lround((p.y - ymin) / h);
      const double tol = 1e-6 * h;
      if (ip < 0 || iq < 0 || ip >= side || iq >= side ||
          std::abs(xmin + ip * h - p.x) > tol || std::abs(ymin + iq * h - p.y) > tol) {
        throw DomainError("grid CSV points do not form a uniform square lattice");
      }
      const auto r = ip * side + iq;
      if (seen[r]) throw DomainError("grid CSV contains a duplicate point");
      seen[r] = true;
      samples[r] = p.value;
    }
  } else {
    f = parse_function_2d(o.fn, side);
    grid = make_grid(x0, y0, h, side);
    samples = sample_grid(grid, f->value);
  }

  const ZigZagBasis2D basis = build_basis(side);
  const Coefficients2D coeffs = estimate_coefficients_2d(grid, basis, samples);

  Sink sink(o.output);
  CsvWriter csv(sink.stream(),
                "ddop derivatives2d " + with_input(o) + " side=" + std::to_string(side) +
                    " h=" + format_double(h) + " center=" + format_double(x0) + "," +
                    format_double(y0),
                "order,x_order,estimate,truth,abs_error");
  for (const auto& t : basis.terms) {
    const int i = t.p + t.q;
    const double est = extract_partial(coeffs, basis, i, t.p);
    std::optional<double> truth, err;
    if (f) {
      truth = f->partial(x0, y0, t.p, t.q);
      err = std::abs(est - *truth);
    }
    csv.row(i, t.p, est, truth, err);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete differential operator: derivatives, local representation, bounds"};
  app.require_subcommand(1);
  // --h is the sample spacing, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "Write CSV here instead of stdout");
  };

  auto* derivatives = app.add_subcommand("derivatives", "Estimate derivatives at a point");
  derivatives->add_option("--fn", o.fn, std::string("Built-in function: ") +
                                            std::string(kBuiltinNames));
  derivatives->add_option("--input", o.input, "Samples as x,value CSV instead of --fn");
  derivatives->add_option("--h", o.h, "Comma-separated sample spacings");
  derivatives->add_option("--n-points", o.n_points, "Samples per estimate (default 11)");
  derivatives->add_option("--orders", o.orders, "Orders, e.g. 0..10 or 1,2,3");
  derivatives->add_option("--center", o.center, "Expansion point (default 0)");
  derivatives->add_flag("--passthrough-zeroth", o.passthrough_zeroth,
                        "Report f(x0) as the 0th derivative");
  derivatives->add_flag("--assert", o.assert_claims, "Check ddp beats forward differences");
  add_common(derivatives);

  auto* sweep = app.add_subcommand("sweep", "Derivative error and det(W) against sample count");
  sweep->add_option("--fn", o.fn, "Built-in function");
  sweep->add_option("--h", o.h, "Sample spacing (default 0.125)");
  sweep->add_option("--orders", o.orders, "Orders (default 0..4)");
  sweep->add_option("--min-points", o.min_points, "Smallest odd count (default 3)");
  sweep->add_option("--max-points", o.max_points, "Largest odd count (default 21)");
  sweep->add_option("--center", o.center, "Expansion point (default 0)");
  sweep->add_flag("--passthrough-zeroth", o.passthrough_zeroth,
                  "Report f(x0) as the 0th derivative");
  sweep->add_flag("--assert", o.assert_claims, "Check the fall-then-rise and det claims");
  add_common(sweep);

  auto add_interp = [&](CLI::App* cmd) {
    cmd->add_option("--fn", o.fn, "Built-in function sampled on the benchmark grid");
    cmd->add_option("--input", o.input, "Signal as x,value CSV instead of --fn");
    cmd->add_option("--n-points", o.n_points, "Samples per local window (odd, default 5)");
    cmd->add_option("--factor", o.factor, "Upsampling factor (default 4)");
    cmd->add_option("--levels", o.levels, "Pyramid depth (default 2)");
    cmd->add_option("--kernel", o.kernel, "Pyramid smoothing kernel: binomial|mean")
        ->check(CLI::IsMember({"binomial", "mean"}));
    cmd->add_option("--start", o.start, "First abscissa of the --fn grid (default -10)");
    cmd->add_option("--count", o.count, "Samples in the --fn grid (default 300)");
    add_common(cmd);
  };

  auto* interp = app.add_subcommand("interp", "Resample a signal");
  interp->add_option("--h", o.h, "Spacing of the --fn grid (default 0.0625)");
  interp->add_option("--method", o.method, "ddp|pyramid|spline|linear")
      ->check(CLI::IsMember({"ddp", "pyramid", "spline", "linear", "ddp-vanilla",
                             "ddp-pyramid"}));
  add_interp(interp);

  auto* bench = app.add_subcommand("bench", "Interpolation error of all methods");
  bench->add_option("--h", o.h, "Comma-separated grid spacings");
  bench->add_flag("--assert", o.assert_claims, "Check vanilla < spline < linear");
  add_interp(bench);

  auto* bounds = app.add_subcommand("bounds", "Error bounds against sample count");
  bounds->add_option("--h", o.h, "Sample spacing (default 0.0625)");
  bounds->add_option("--orders", o.orders, "Derivative orders (default 1..7)");
  bounds->add_option("--max-points", o.max_points, "Largest odd count (default 35)");
  bounds->add_flag("--assert", o.assert_claims, "Check the minimizer claims for this h");
  add_common(bounds);

  auto* vander = app.add_subcommand("vandermonde", "Vandermonde matrix, inverse, determinant");
  vander->add_option("--offsets", o.offsets, "Comma-separated offsets");
  vander->add_option("--h", o.h, "Spacing of a symmetric plan (default 1)");
  vander->add_option("--n-points", o.n_points, "Points of a symmetric plan (default 3)");
  add_common(vander);

  auto* d2 = app.add_subcommand("derivatives2d", "Partial derivatives from a square grid");
  d2->add_option("--side", o.side, "Grid side N (m = N*N samples, default 3)");
  d2->add_option("--h", o.h, "Grid spacing (default 1)");
  d2->add_option("--fn", o.fn, std::string("2D function: ") + std::string(kBuiltinNames2D));
  d2->add_option("--input", o.input, "Custom grid as x,y,value CSV");
  d2->add_option("--center", o.center, "Grid center x,y (default 0,0)");
  add_common(d2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Defaults depend on the subcommand; filling them in here lets the CSV
  // header record the configuration that actually ran.
  auto fallback = [](std::string& field, std::string value) {
    if (field.empty()) field = std::move(value);
  };
  try {
    if (*derivatives) {
      if (o.n_points == 0) o.n_points = 11;
      fallback(o.h, "0.5,0.25,0.125,0.0675,0.03375");
      fallback(o.orders, "0.." + std::to_string(o.n_points - 1));
      fallback(o.center, "0");
      return cmd_derivatives(o);
    }
    if (*sweep) {
      fallback(o.h, "0.125");
      fallback(o.orders, "0..4");
      fallback(o.center, "0");
      if (o.max_points == 0) o.max_points = 21;
      return cmd_sweep(o);
    }
    if (*interp) {
      fallback(o.h, "0.0625");
      return cmd_interp(o);
    }
    if (*bench) {
      fallback(o.h, "0.0625,0.03125,0.015625");
      return cmd_bench(o);
    }
    if (*bounds) {
      fallback(o.h, "0.0625");
      fallback(o.orders, "1..7");
      if (o.max_points == 0) o.max_points = 35;
      return cmd_bounds(o);
    }
    if (*vander) return cmd_vandermonde(o);
    if (*d2) {
      if (o.fn == "exp2x") o.fn = "expxy";
      return cmd_derivatives2d(o);
    }
  } catch (const SingularMatrixError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
