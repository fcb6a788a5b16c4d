#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singiter {

inline constexpr double kPairTol = 1e-12;

// A pair (f0, f1) of strictly increasing maps on the real line with
// f0(0)=0, f0(a)=1, f1(b)=0, f1(1)=1 for some 0 < a <= b < 1, and slope
// bound s > 1 outside the unit square. `symmetric` marks pairs satisfying
// f0(1-x) + f1(x) = 1 (which forces a = 1-b).
class FunctionPair {
 public:
  using Map = std::function<double(double)>;

  FunctionPair(std::string name, Map f0, Map f1, Map f0_inv, Map f1_inv, double a, double b,
               double s, bool symmetric)
      : name_(std::move(name)),
        f0_(std::move(f0)),
        f1_(std::move(f1)),
        f0_inv_(std::move(f0_inv)),
        f1_inv_(std::move(f1_inv)),
        a_(a),
        b_(b),
        s_(s),
        symmetric_(symmetric) {
    if (!(0 < a_ && a_ <= b_ && b_ < 1))
      throw std::invalid_argument("pairs: requires 0 < a <= b < 1");
    if (!(s_ > 1)) throw std::invalid_argument("pairs: requires slope bound s > 1");
  }

  const std::string& name() const noexcept { return name_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double slope_bound() const noexcept { return s_; }
  bool symmetric() const noexcept { return symmetric_; }

  double f0(double x) const { return f0_(x); }
  double f1(double x) const { return f1_(x); }

  double apply(int symbol, double x) const { return symbol == 0 ? f0_(x) : f1_(x); }

  // Inverse restricted to the unit interval: symbol 0 lands in [0,a],
  // symbol 1 in [b,1].
  double apply_inverse(int symbol, double y) const {
    if (!(y >= 0.0 && y <= 1.0))
      throw std::invalid_argument("pairs: apply_inverse requires y in [0,1]");
    return symbol == 0 ? f0_inv_(y) : f1_inv_(y);
  }

 private:
  std::string name_;
  Map f0_, f1_, f0_inv_, f1_inv_;
  double a_, b_, s_;
  bool symmetric_;
};

struct Violation {
  std::string assumption;  // "A1".."A4"
  double point;
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;
};

// f0(x) = x/a, f1(x) = (x-b)/(1-b).
inline FunctionPair make_affine_pair(double a, double b) {
  if (!(0 < a && a <= b && b < 1)) throw std::invalid_argument("pairs: requires 0 < a <= b < 1");
  const double s = std::min(1.0 / a, 1.0 / (1.0 - b));
  const bool symmetric = std::abs(b - (1.0 - a)) <= kPairTol;
  std::ostringstream name;
  name << "affine(a=" << a << ",b=" << b << ")";
  return FunctionPair(
      name.str(), [a](double x) { return x / a; }, [b](double x) { return (x - b) / (1.0 - b); },
      [a](double y) { return a * y; }, [b](double y) { return (1.0 - b) * y + b; }, a, b, s,
      symmetric);
}

// f0(x) = x/(1-x) on [0,1/2] and 2x elsewhere; f1(x) = 1 - f0(1-x), which
// works out to (2x-1)/x on [1/2,1] and 2x-1 elsewhere. a = b = 1/2, s = 2.
inline FunctionPair make_minkowski_pair() {
  auto f0 = [](double x) { return (x >= 0.0 && x <= 0.5) ? x / (1.0 - x) : 2.0 * x; };
  auto f1 = [](double x) { return (x >= 0.5 && x <= 1.0) ? (2.0 * x - 1.0) / x : 2.0 * x - 1.0; };
  auto f0_inv = [](double y) { return y / (1.0 + y); };
  auto f1_inv = [](double y) { return 1.0 / (2.0 - y); };
  return FunctionPair("minkowski", f0, f1, f0_inv, f1_inv, 0.5, 0.5, 2.0, true);
}

namespace detail {

// Strictly increasing piecewise-linear interpolant, extended past the first
// and last breakpoints with the end segment slopes.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<std::array<double, 2>> pts) : pts_(std::move(pts)) {
    if (pts_.size() < 2) throw std::invalid_argument("pairs: breakpoint list needs >= 2 points");
    for (std::size_t i = 1; i < pts_.size(); ++i) {
      if (!(pts_[i][0] > pts_[i - 1][0] && pts_[i][1] > pts_[i - 1][1]))
        throw std::invalid_argument("pairs: breakpoints must be strictly increasing in x and y");
    }
  }

  double operator()(double x) const {
    std::size_t hi = 1;
    if (x > pts_.front()[0]) {
      while (hi + 1 < pts_.size() && pts_[hi][0] < x) ++hi;
    }
    const auto& p0 = pts_[hi - 1];
    const auto& p1 = pts_[hi];
    const double t = (x - p0[0]) / (p1[0] - p0[0]);
    return p0[1] + t * (p1[1] - p0[1]);
  }

  double first_slope() const {
    return (pts_[1][1] - pts_[0][1]) / (pts_[1][0] - pts_[0][0]);
  }
  double last_slope() const {
    const auto n = pts_.size();
    return (pts_[n - 1][1] - pts_[n - 2][1]) / (pts_[n - 1][0] - pts_[n - 2][0]);
  }

 private:
  std::vector<std::array<double, 2>> pts_;
};

// Solves f(x) = target for increasing f on [lo,hi].
inline double bisect_increasing(const std::function<double(double)>& f, double target, double lo,
                                double hi) {
  constexpr double tol = 1e-14;
  constexpr int max_iterations = 200;
  for (int i = 0; i < max_iterations && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Custom pair from breakpoint lists, one per branch. Endpoint values a and b
// are recovered from the breakpoints, the slope bound from the end segments;
// validate_assumptions gates actual use.
inline FunctionPair make_piecewise_pair(std::vector<std::array<double, 2>> breakpoints0,
                                        std::vector<std::array<double, 2>> breakpoints1) {
  detail::PiecewiseLinear g0(std::move(breakpoints0));
  detail::PiecewiseLinear g1(std::move(breakpoints1));
  if (std::abs(g0(0.0)) > kPairTol || std::abs(g1(1.0) - 1.0) > kPairTol)
    throw std::invalid_argument("pairs: breakpoints must satisfy f0(0)=0 and f1(1)=1");
  const double a = detail::bisect_increasing([&](double x) { return g0(x); }, 1.0, 0.0, 2.0);
  const double b = detail::bisect_increasing([&](double x) { return g1(x); }, 0.0, -1.0, 1.0);
  if (!(0 < a && a <= b + kPairTol && b < 1))
    throw std::invalid_argument("pairs: requires 0 < a <= b < 1");
  const double s = std::min(std::min(g0.first_slope(), g0.last_slope()),
                            std::min(g1.first_slope(), g1.last_slope()));
  if (!(s > 1)) throw std::invalid_argument("pairs: requires slope bound s > 1");
  const bool symmetric = std::abs(a - (1.0 - b)) <= kPairTol;
  auto f0 = [g0](double x) { return g0(x); };
  auto f1 = [g1](double x) { return g1(x); };
  auto f0_inv = [g0, a](double y) {
    return detail::bisect_increasing([&](double x) { return g0(x); }, y, 0.0, a);
  };
  auto f1_inv = [g1, b](double y) {
    return detail::bisect_increasing([&](double x) { return g1(x); }, y, b, 1.0);
  };
  return FunctionPair("piecewise", f0, f1, f0_inv, f1_inv, std::min(a, b), std::max(a, b), s,
                      symmetric);
}

// Grid check of (A1)-(A4) over [-2,3]. Violations are reported, not thrown.
inline ValidationReport validate_assumptions(const FunctionPair& pair, int grid_points = 1001) {
  if (grid_points < 2) throw std::invalid_argument("pairs: validation needs >= 2 grid points");
  ValidationReport report;
  auto flag = [&](const char* tag, double x, std::string detail) {
    report.violations.push_back({tag, x, std::move(detail)});
  };

  const double lo = -2.0, hi = 3.0;
  std::vector<double> grid(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i)
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (grid_points - 1);

  // (A1) strict monotonicity between consecutive grid points
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(pair.f0(grid[i]) > pair.f0(grid[i - 1]))) flag("A1", grid[i], "f0 not strictly increasing");
    if (!(pair.f1(grid[i]) > pair.f1(grid[i - 1]))) flag("A1", grid[i], "f1 not strictly increasing");
  }

  // (A2) endpoint normalization
  if (std::abs(pair.f0(0.0)) > kPairTol) flag("A2", 0.0, "f0(0) != 0");
  if (std::abs(pair.f0(pair.a()) - 1.0) > kPairTol) flag("A2", pair.a(), "f0(a) != 1");
  if (std::abs(pair.f1(pair.b())) > kPairTol) flag("A2", pair.b(), "f1(b) != 0");
  if (std::abs(pair.f1(1.0) - 1.0) > kPairTol) flag("A2", 1.0, "f1(1) != 1");

  // (A3) slope bounds outside the unit square (non-strict, tolerance eased)
  const double s = pair.slope_bound();
  for (double x : grid) {
    if (x <= 0.0 && !(pair.f0(x) <= s * x + kPairTol)) flag("A3", x, "f0(x) > s*x for x <= 0");
    if (x >= pair.a() && !(pair.f0(x) >= 1.0 + s * (x - pair.a()) - kPairTol))
      flag("A3", x, "f0(x) < 1 + s*(x-a) for x >= a");
    if (x <= pair.b() && !(pair.f1(x) <= s * (x - pair.b()) + kPairTol))
      flag("A3", x, "f1(x) > s*(x-b) for x <= b");
    if (x >= 1.0 && !(pair.f1(x) >= 1.0 + s * (x - 1.0) - kPairTol))
      flag("A3", x, "f1(x) < 1 + s*(x-1) for x >= 1");
  }

  // (A4) symmetry, when claimed
  if (pair.symmetric()) {
    if (std::abs(pair.a() - (1.0 - pair.b())) > kPairTol) flag("A4", pair.a(), "a != 1-b");
    for (double x : grid) {
      if (std::abs(pair.f0(1.0 - x) + pair.f1(x) - 1.0) > kPairTol)
        flag("A4", x, "f0(1-x) + f1(x) != 1");
    }
  }

  report.passed = report.violations.empty();
  return report;
}

}  // namespace singiter
