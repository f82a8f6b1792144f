#pragma once

// Built-in analytic test functions with exact derivative oracles.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ddop::cli {

struct BuiltinFunction {
  std::string name;
  std::function<double(double)> value;
  // Exact n-th derivative at x.
  std::function<double(double, int)> derivative;
  // Upper bound on |f^{(n)}| over [lo, hi].
  std::function<double(int, double, double)> derivative_sup;
};

BuiltinFunction exp2x();
// sin(x) sin(10x)
BuiltinFunction sinsin10();
// c0 + c1 x + c2 x^2 + ...
BuiltinFunction polynomial(std::vector<double> coeffs);

/// "exp2x", "sinsin10" or "poly:c0,c1,...". Throws DomainError otherwise.
BuiltinFunction parse_function(std::string_view text);

struct BuiltinFunction2D {
  std::string name;
  std::function<double(double, double)> value;
  // Exact d^{jx+jy} f / dx^jx dy^jy.
  std::function<double(double, double, int, int)> partial;
};

BuiltinFunction2D xy_2d();
// exp(x + y)
BuiltinFunction2D expxy_2d();
// sum_l c_l x^p y^q with (p, q) the l-th ZigZag term of the side x side basis.
BuiltinFunction2D polynomial_2d(std::vector<double> coeffs, int side);

/// "xy", "expxy" or "poly:c0,c1,..." (ZigZag order for the given side).
BuiltinFunction2D parse_function_2d(std::string_view text, int side);

inline constexpr std::string_view kBuiltinNames = "exp2x, sinsin10, poly:c0,c1,...";
inline constexpr std::string_view kBuiltinNames2D = "xy, expxy, poly:c0,c1,... (ZigZag order)";

std::vector<double> parse_number_list(std::string_view text);

}  // namespace ddop::cli
