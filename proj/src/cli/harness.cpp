#include "ddop/cli/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ddop/baselines.hpp"
#include "ddop/bounds.hpp"
#include "ddop/diffop1d.hpp"
#include "ddop/errors.hpp"

namespace ddop::cli {
namespace {

std::string describe(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

}  // namespace

std::vector<DerivativeRow> derivative_table(const BuiltinFunction& f,
                                            const DerivativeConfig& config) {
  if (config.spacings.empty()) throw DomainError("derivatives: no spacings given");
  for (double h : config.spacings) {
    if (!(h > 0.0)) throw DomainError("derivatives: spacings must be > 0");
  }
  const int max_order = config.n_points - 1;

  std::vector<DerivativeRow> ddp, forward;
  for (int order : config.orders) {
    if (order < 0) throw DomainError("derivatives: orders must be >= 0");
    if (order > max_order) continue;
    const double truth = f.derivative(config.x0, order);
    for (double h : config.spacings) {
      const auto plan = make_plan(config.x0, h, config.n_points);
      const auto coeffs = estimate_coefficients(plan, sample(plan, f.value));
      const double est =
          (order == 0 && config.passthrough_zeroth) ? f.value(config.x0) : coeffs.derivative(order);
      ddp.push_back({std::string(kMethodDdp), order, h, est, truth, std::abs(est - truth)});

      std::vector<double> right(order + 1);
      for (int k = 0; k <= order; ++k) right[k] = f.value(config.x0 + k * h);
      const double fd = forward_difference(right, h, order);
      forward.push_back({std::string(kMethodForward), order, h, fd, truth, std::abs(fd - truth)});
    }
  }
  ddp.insert(ddp.end(), forward.begin(), forward.end());
  return ddp;
}

std::vector<DerivativeRow> derivative_table(const Signal& samples, int n_points,
                                            const std::vector<int>& orders,
                                            bool passthrough_zeroth) {
  const Eigen::Index center = (samples.size() - 1) / 2;
  const LocalModel model = fit_local(samples, center, n_points);
  const double h = samples.spacing;

  std::vector<DerivativeRow> ddp, forward;
  for (int order : orders) {
    if (order < 0) throw DomainError("derivatives: orders must be >= 0");
    if (order > n_points - 1) continue;
    const double est = (order == 0 && passthrough_zeroth) ? samples.values[center]
                                                          : model.coeffs.derivative(order);
    ddp.push_back({std::string(kMethodDdp), order, h, est, std::nullopt, std::nullopt});
    if (center + order < samples.size()) {
      const Eigen::VectorXd right = samples.values.segment(center, order + 1);
      forward.push_back({std::string(kMethodForward), order, h,
                         forward_difference({right.data(), static_cast<std::size_t>(right.size())},
                                            h, order),
                         std::nullopt, std::nullopt});
    }
  }
  ddp.insert(ddp.end(), forward.begin(), forward.end());
  return ddp;
}

std::vector<SweepRow> sample_count_sweep(const BuiltinFunction& f, const SweepConfig& config) {
  if (!(config.h > 0.0)) throw DomainError("sweep: h must be > 0");
  std::vector<SweepRow> rows;
  for (int n = std::max(config.min_points, 2); n <= config.max_points; ++n) {
    if (n % 2 == 0) continue;
    const auto plan = make_plan(config.x0, config.h, n);
    const double det = determinant(plan.offsets());
    const auto coeffs = estimate_coefficients(plan, sample(plan, f.value));
    for (int order : config.orders) {
      if (order < 0 || order > n - 1) continue;
      const double est = (order == 0 && config.passthrough_zeroth) ? f.value(config.x0)
                                                                   : coeffs.derivative(order);
      rows.push_back({n, order, std::abs(est - f.derivative(config.x0, order)), det});
    }
  }
  return rows;
}

Signal interpolate(std::string_view method, const Signal& knots, const InterpSettings& s) {
  if (method == kMethodVanilla || method == "ddp") return resample(knots, s.factor, s.n_points);
  if (method == kMethodPyramid || method == "pyramid") {
    return resample_pyramid(knots, s.levels, s.n_points, s.factor, s.kernel);
  }
  const ResampleGrid grid = make_resample_grid(knots, s.factor);
  Eigen::VectorXd out(grid.size());
  if (method == kMethodSpline) {
    const SplineModel model = spline_fit(knots);
    for (Eigen::Index k = 0; k < grid.size(); ++k) out[k] = spline_eval(model, grid.abscissa(k));
  } else if (method == kMethodLinear) {
    for (Eigen::Index k = 0; k < grid.size(); ++k) out[k] = linear_eval(knots, grid.abscissa(k));
  } else {
    throw DomainError("unknown interpolation method '" + std::string(method) +
                      "' (expected ddp|pyramid|spline|linear)");
  }
  return Signal(knots.start, knots.spacing / s.factor, std::move(out));
}

namespace {

std::vector<InterpRow> score_methods(const Signal& knots, const Eigen::VectorXd& reference,
                                     const InterpSettings& settings) {
  const ResampleGrid grid = make_resample_grid(knots, settings.factor);
  const Eigen::Index half = (settings.n_points - 1) / 2;
  std::vector<InterpRow> rows;
  for (std::string_view method : {kMethodVanilla, kMethodPyramid, kMethodSpline, kMethodLinear}) {
    const Signal out = interpolate(method, knots, settings);
    InterpRow row{std::string(method), knots.spacing, settings.n_points, 0.0, 0.0, 0.0};
    for (Eigen::Index k = 0; k < grid.size(); ++k) {
      const double err = std::abs(out.values[k] - reference[k]);
      const Eigen::Index c = grid.nearest_center(k);
      const bool boundary = c < half || c > knots.size() - 1 - half;
      row.total_abs_error += err;
      (boundary ? row.boundary_abs_error : row.interior_abs_error) += err;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<InterpRow> interp_bench(const BuiltinFunction& f, const BenchConfig& config) {
  if (config.spacings.empty()) throw DomainError("bench: no spacings given");
  std::vector<InterpRow> rows;
  for (double h : config.spacings) {
    const Signal knots = Signal::sampled(f.value, config.start, h, config.count);
    const ResampleGrid grid = make_resample_grid(knots, config.interp.factor);
    Eigen::VectorXd truth(grid.size());
    for (Eigen::Index k = 0; k < grid.size(); ++k) truth[k] = f.value(grid.abscissa(k));
    auto cell = score_methods(knots, truth, config.interp);
    rows.insert(rows.end(), cell.begin(), cell.end());
  }
  return rows;
}

std::vector<InterpRow> interp_bench(const Signal& dense, const InterpSettings& settings) {
  const int factor = settings.factor;
  if (factor < 2) throw DomainError("bench: factor must be >= 2");
  const Eigen::Index count = (dense.size() - 1) / factor + 1;
  if (count < 3) throw DomainError("bench: input too short for the requested factor");
  Eigen::VectorXd knot_values(count);
  for (Eigen::Index i = 0; i < count; ++i) knot_values[i] = dense.values[i * factor];
  const Signal knots(dense.start, dense.spacing * factor, std::move(knot_values));
  return score_methods(knots, dense.values.head((count - 1) * factor + 1), settings);
}

std::vector<BoundRow> bounds_table(double h, const std::vector<int>& orders, int max_points,
                                   bool include_representation) {
  std::vector<BoundRow> rows;
  for (int order : orders) {
    if (order < 0) throw DomainError("bounds: orders must be >= 0");
    for (const auto& pt : bound_curve(h, order, 3, max_points)) {
      rows.push_back({pt.n_points, std::to_string(order), pt.bound});
    }
  }
  if (include_representation) {
    for (const auto& pt : bound_curve(h, std::nullopt, 3, max_points)) {
      rows.push_back({pt.n_points, "rep", pt.bound});
    }
  }
  return rows;
}

bool has_interior_minimum(const std::vector<double>& values) {
  if (values.size() < 3) return false;
  const auto m = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  if (m == 0 || m + 1 == values.size()) return false;
  return strictly_decreasing({values.begin(), values.begin() + m + 1}) &&
         strictly_increasing({values.begin() + m, values.end()});
}

std::vector<ClaimResult> check_derivative_claims(const std::string& function,
                                                 const std::vector<DerivativeRow>& rows) {
  std::map<std::pair<int, double>, double> ddp, fd;
  for (const auto& r : rows) {
    if (!r.abs_error || r.order < 1 || r.order > 6) continue;
    (r.method == kMethodDdp ? ddp : fd)[{r.order, r.h}] = *r.abs_error;
  }
  std::vector<ClaimResult> out;
  for (const auto& [key, err] : ddp) {
    const auto it = fd.find(key);
    if (it == fd.end()) continue;
    const auto [order, h] = key;
    const bool exception = function == "sinsin10" && order == 4 && h == 0.25;
    std::string claim = "ddp < forward-difference, order " + std::to_string(order) + ", h=" +
                        describe(h);
    std::string detail = describe(err) + " vs " + describe(it->second);
    if (exception) detail += " (documented exception, either ordering allowed)";
    out.push_back({std::move(claim), exception || err < it->second, std::move(detail)});
  }
  return out;
}

std::vector<ClaimResult> check_sweep_claims(const std::vector<SweepRow>& rows) {
  std::vector<ClaimResult> out;
  for (int order = 1; order <= 4; ++order) {
    std::vector<double> errs;
    std::string trace;
    for (const auto& r : rows) {
      if (r.order != order) continue;
      errs.push_back(r.abs_error);
      trace += std::to_string(r.n_points) + ":" + describe(r.abs_error) + " ";
    }
    out.push_back({"order " + std::to_string(order) + " error falls then rises",
                   has_interior_minimum(errs), trace});
  }
  std::vector<double> dets;
  std::string trace;
  int last = -1;
  for (const auto& r : rows) {
    if (r.n_points < 5 || r.n_points == last) continue;
    last = r.n_points;
    dets.push_back(std::abs(r.det));
    trace += std::to_string(r.n_points) + ":" + describe(r.det) + " ";
  }
  out.push_back({"|det| decreasing for counts >= 5", strictly_decreasing(dets), trace});
  return out;
}

std::vector<ClaimResult> check_bench_claims(const std::vector<InterpRow>& rows) {
  std::map<double, std::map<std::string, double>> by_h;
  for (const auto& r : rows) by_h[r.h][r.method] = r.total_abs_error;
  std::vector<ClaimResult> out;
  for (const auto& [h, m] : by_h) {
    const double v = m.at(std::string(kMethodVanilla));
    const double s = m.at(std::string(kMethodSpline));
    const double l = m.at(std::string(kMethodLinear));
    out.push_back({"vanilla < spline < linear, h=" + describe(h), v < s && s < l,
                   describe(v) + " < " + describe(s) + " < " + describe(l)});
  }
  return out;
}

std::vector<ClaimResult> check_bound_claims(double h) {
  std::vector<ClaimResult> out;
  auto values = [](const std::vector<BoundPoint>& curve) {
    std::vector<double> v;
    for (const auto& pt : curve) v.push_back(pt.bound);
    return v;
  };
  auto minimizer_in = [&](std::optional<int> order, int lo, int hi, bool odd_only_set) {
    const auto curve = bound_curve(h, order, 3, 35);
    const int n = curve_minimizer(curve);
    const std::string what = order ? "order " + std::to_string(*order) : "representation";
    out.push_back({what + " bound minimizer in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] at h=" + describe(h),
                   n >= lo && n <= hi && (!odd_only_set || n % 2 == 1),
                   "minimizer " + std::to_string(n)});
  };
  if (h == 0.0625) {
    for (int i = 1; i <= 4; ++i) minimizer_in(i, 7, 9, true);
    minimizer_in(std::nullopt, 7, 13, true);
    for (int i = 5; i <= 7; ++i) {
      const auto curve = bound_curve(h, i, 7, 35);
      out.push_back({"order " + std::to_string(i) + " bound increasing over counts 7..35",
                     strictly_increasing(values(curve)), ""});
    }
  } else if (h == 0.03125) {
    minimizer_in(std::nullopt, 15, 19, true);
  } else if (h <= 0.015625) {
    for (int i = 1; i <= 7; ++i) {
      out.push_back({"order " + std::to_string(i) + " bound decreasing over counts 3..35",
                     strictly_decreasing(values(bound_curve(h, i, 3, 35))), ""});
    }
    out.push_back({"representation bound decreasing over counts 3..35",
                   strictly_decreasing(values(bound_curve(h, std::nullopt, 3, 35))), ""});
  }
  return out;
}

}  // namespace ddop::cli
