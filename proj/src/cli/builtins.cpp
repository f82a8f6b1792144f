#include "ddop/cli/builtins.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ddop/diffop2d.hpp"
#include "ddop/errors.hpp"

namespace ddop::cli {
namespace {

// d^n/dx^n sin(a x) = a^n sin(a x + n pi / 2), with the phase resolved exactly.
double sin_derivative(double a, double x, int n) {
  const double s = std::sin(a * x);
  const double c = std::cos(a * x);
  const double scale = std::pow(a, n);
  switch (n % 4) {
    case 0: return scale * s;
    case 1: return scale * c;
    case 2: return -scale * s;
    default: return -scale * c;
  }
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

// k! / (k - n)!
double falling(int k, int n) {
  double f = 1.0;
  for (int j = 0; j < n; ++j) f *= k - j;
  return f;
}

}  // namespace

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DomainError("not a number: '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

BuiltinFunction exp2x() {
  return {"exp2x",
          [](double x) { return std::exp(2.0 * x); },
          [](double x, int n) { return std::ldexp(std::exp(2.0 * x), n); },
          [](int n, double, double hi) { return std::ldexp(std::exp(2.0 * hi), n); }};
}

BuiltinFunction sinsin10() {
  return {"sinsin10",
          [](double x) { return std::sin(x) * std::sin(10.0 * x); },
          [](double x, int n) {
            // Leibniz rule over the two sine factors.
            double acc = 0.0;
            for (int k = 0; k <= n; ++k) {
              acc += binomial(n, k) * sin_derivative(1.0, x, k) * sin_derivative(10.0, x, n - k);
            }
            return acc;
          },
          [](int n, double, double) {
            // sin x sin 10x = (cos 9x - cos 11x) / 2
            return 0.5 * (std::pow(9.0, n) + std::pow(11.0, n));
          }};
}

BuiltinFunction polynomial(std::vector<double> coeffs) {
  std::string name = "poly:";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) name += ',';
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, coeffs[k]);
    name.append(buf, r.ptr);
  }
  auto value = [coeffs](double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  auto derivative = [coeffs](double x, int n) {
    double acc = 0.0;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= n; --k) {
      acc = acc * x + coeffs[k] * falling(k, n);
    }
    return acc;
  };
  auto sup = [coeffs](int n, double lo, double hi) {
    const double r = std::max(std::abs(lo), std::abs(hi));
    double acc = 0.0;
    for (int k = n; k < static_cast<int>(coeffs.size()); ++k) {
      acc += std::abs(coeffs[k]) * falling(k, n) * std::pow(r, k - n);
    }
    return acc;
  };
  return {std::move(name), std::move(value), std::move(derivative), std::move(sup)};
}

BuiltinFunction parse_function(std::string_view text) {
  if (text == "exp2x") return exp2x();
  if (text == "sinsin10") return sinsin10();
  if (text.starts_with("poly:")) {
    auto coeffs = parse_number_list(text.substr(5));
    if (coeffs.empty()) throw DomainError("poly: needs at least one coefficient");
    return polynomial(std::move(coeffs));
  }
  throw DomainError("unknown function '" + std::string(text) +
                    "'; built-ins: " + std::string(kBuiltinNames));
}

BuiltinFunction2D xy_2d() {
  return {"xy", [](double x, double y) { return x * y; },
          [](double x, double y, int jx, int jy) {
            if (jx > 1 || jy > 1) return 0.0;
            return (jx == 1 ? 1.0 : x) * (jy == 1 ? 1.0 : y);
          }};
}

BuiltinFunction2D expxy_2d() {
  return {"expxy", [](double x, double y) { return std::exp(x + y); },
          [](double x, double y, int, int) { return std::exp(x + y); }};
}

BuiltinFunction2D polynomial_2d(std::vector<double> coeffs, int side) {
  const ZigZagBasis2D basis = build_basis(side);
  if (static_cast<int>(coeffs.size()) > basis.m()) {
    throw DomainError("poly: more coefficients than basis terms (side*side)");
  }
  coeffs.resize(basis.m(), 0.0);
  auto terms = basis.terms;
  auto value = [coeffs, terms](double x, double y) {
    double acc = 0.0;
    for (std::size_t l = 0; l < terms.size(); ++l) {
      acc += coeffs[l] * std::pow(x, terms[l].p) * std::pow(y, terms[l].q);
    }
    return acc;
  };
  auto partial = [coeffs, terms](double x, double y, int jx, int jy) {
    double acc = 0.0;
    for (std::size_t l = 0; l < terms.size(); ++l) {
      const auto [p, q] = terms[l];
      if (p < jx || q < jy) continue;
      acc += coeffs[l] * falling(p, jx) * falling(q, jy) * std::pow(x, p - jx) *
             std::pow(y, q - jy);
    }
    return acc;
  };
  return {"poly", std::move(value), std::move(partial)};
}

BuiltinFunction2D parse_function_2d(std::string_view text, int side) {
  if (text == "xy") return xy_2d();
  if (text == "expxy") return expxy_2d();
  if (text.starts_with("poly:")) return polynomial_2d(parse_number_list(text.substr(5)), side);
  throw DomainError("unknown 2D function '" + std::string(text) +
                    "'; built-ins: " + std::string(kBuiltinNames2D));
}

}  // namespace ddop::cli
