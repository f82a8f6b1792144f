#pragma once

// Experiment drivers behind the CLI subcommands. Each returns plain rows in
// their final emission order; the CLI only formats them.

#include <optional>
#include <string>
#include <vector>

#include "ddop/cli/builtins.hpp"
#include "ddop/localrep.hpp"
#include "ddop/pyramid.hpp"

namespace ddop::cli {

inline constexpr std::string_view kMethodDdp = "ddp";
inline constexpr std::string_view kMethodForward = "forward-difference";

struct DerivativeRow {
  std::string method;
  int order = 0;
  double h = 0.0;
  double estimate = 0.0;
  std::optional<double> truth;
  std::optional<double> abs_error;
};

struct DerivativeConfig {
  std::vector<double> spacings;
  int n_points = 11;
  std::vector<int> orders;
  double x0 = 0.0;
  bool passthrough_zeroth = false;
};

/// ddp and forward-difference estimates at x0, sorted by (method, order,
/// position of h in the config). Orders above n_points - 1 are skipped.
std::vector<DerivativeRow> derivative_table(const BuiltinFunction& f,
                                            const DerivativeConfig& config);

/// Same experiment on tabulated samples: the operator is centered on the
/// middle sample and the forward difference reads the samples to its right.
/// No truth column.
std::vector<DerivativeRow> derivative_table(const Signal& samples, int n_points,
                                            const std::vector<int>& orders,
                                            bool passthrough_zeroth);

struct SweepRow {
  int n_points = 0;
  int order = 0;
  double abs_error = 0.0;
  double det = 0.0;  // Vandermonde determinant of the plan
};

struct SweepConfig {
  double h = 0.125;
  std::vector<int> orders{0, 1, 2, 3, 4};
  int min_points = 3;
  int max_points = 21;
  double x0 = 0.0;
  bool passthrough_zeroth = false;
};

/// Odd sample counts in [min_points, max_points]; rows sorted by (n_points, order).
std::vector<SweepRow> sample_count_sweep(const BuiltinFunction& f, const SweepConfig& config);

inline constexpr std::string_view kMethodVanilla = "ddp-vanilla";
inline constexpr std::string_view kMethodPyramid = "ddp-pyramid";
inline constexpr std::string_view kMethodSpline = "spline";
inline constexpr std::string_view kMethodLinear = "linear";

struct InterpSettings {
  int n_points = 5;
  int factor = 4;
  int levels = 2;
  Kernel kernel = Kernel::kBinomial;
};

/// Resamples `knots` by settings.factor with one of ddp-vanilla, ddp-pyramid,
/// spline or linear (plain "ddp" and "pyramid" are accepted too).
Signal interpolate(std::string_view method, const Signal& knots, const InterpSettings& s);

struct InterpRow {
  std::string method;
  double h = 0.0;
  int n_points = 0;
  double total_abs_error = 0.0;
  double interior_abs_error = 0.0;
  double boundary_abs_error = 0.0;
};

struct BenchConfig {
  std::vector<double> spacings;
  InterpSettings interp;
  double start = -10.0;
  int count = 300;
};

/// Sum of |error| against the analytic function on the resampled grid, for
/// all four methods. Output points whose nearest knot has a clamped window
/// (within (n_points-1)/2 of an end) count as boundary. Sorted by h position,
/// then method in the order vanilla, pyramid, spline, linear.
std::vector<InterpRow> interp_bench(const BuiltinFunction& f, const BenchConfig& config);

/// Bench on tabulated data: every factor-th sample is used as a knot and the
/// full input is the reference.
std::vector<InterpRow> interp_bench(const Signal& dense, const InterpSettings& settings);

struct BoundRow {
  int n_points = 0;
  std::string order;  // derivative order, or "rep" for the representation bound
  double bound = 0.0;
};

std::vector<BoundRow> bounds_table(double h, const std::vector<int>& orders, int max_points,
                                   bool include_representation);

// Pass/fail of one reproduced claim, for --assert.
struct ClaimResult {
  std::string claim;
  bool passed = false;
  std::string detail;
};

/// ddp beats forward differences for orders 1..6 wherever both exist. The
/// sinsin10 order-4, h = 0.25 cell is reported but allowed either way.
std::vector<ClaimResult> check_derivative_claims(const std::string& function,
                                                 const std::vector<DerivativeRow>& rows);
/// Orders 1..4 fall then rise (interior minimum); |det| decreases for counts >= 5.
std::vector<ClaimResult> check_sweep_claims(const std::vector<SweepRow>& rows);
/// vanilla < spline < linear at every spacing.
std::vector<ClaimResult> check_bench_claims(const std::vector<InterpRow>& rows);
/// Minimizer / monotonicity claims for the bound curves at h.
std::vector<ClaimResult> check_bound_claims(double h);

/// Strictly decreasing up to an interior minimum, strictly increasing after.
bool has_interior_minimum(const std::vector<double>& values);

}  // namespace ddop::cli
