#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "measure.hpp"
#include "pairs.hpp"

namespace singiter {

inline std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("grid needs >= 2 points");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return g;
}

// Value of the k-th operator iterate at one point, with the a-priori bound
// |value - F_p(x)| <= max{p,q}^k.
struct ApproxValue {
  double value = 0.0;
  double error_bound = 0.0;
  int depth = 0;
};

namespace detail {

inline double eval_iterate(const FunctionPair& pair, double p, double q, double x, int k) {
  // The boundary clamps are valid at every depth since the operator maps
  // boundary-pinned functions to boundary-pinned functions.
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (k == 0) return x;
  return p * eval_iterate(pair, p, q, pair.f0(x), k - 1) +
         q * eval_iterate(pair, p, q, pair.f1(x), k - 1);
}

}  // namespace detail

// (T^k F_0)(x) for the operator (TF)(x) = p F(f0(x)) + q F(f1(x)) and the
// clamped-identity base function. Pointwise recursion: images of grid points
// fall off-grid, so tabulate-and-interpolate would spoil the mu^k bound.
inline ApproxValue eval_approx(const FunctionPair& pair, const BernoulliParam& m, double x,
                               int k) {
  if (k < 0) throw std::invalid_argument("fixedpoint: k must be >= 0");
  const double value = detail::eval_iterate(pair, m.p_double(), m.q_double(), x, k);
  return {value, std::pow(m.mu_double(), k), k};
}

inline std::vector<std::pair<double, ApproxValue>> grid_table(const FunctionPair& pair,
                                                              const BernoulliParam& m,
                                                              const std::vector<double>& grid,
                                                              int k) {
  std::vector<std::pair<double, ApproxValue>> table;
  table.reserve(grid.size());
  for (double x : grid) table.emplace_back(x, eval_approx(pair, m, x, k));
  return table;
}

// Piecewise-linear tabulation of a function that is 0 left of 0 and 1 right
// of 1, interpolated between grid points inside [0,1].
class TabulatedFunction {
 public:
  TabulatedFunction(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2)
      throw std::invalid_argument("fixedpoint: tabulation needs matching grids of >= 2 points");
    if (!std::is_sorted(xs_.begin(), xs_.end()))
      throw std::invalid_argument("fixedpoint: tabulation grid must be sorted");
  }

  double operator()(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.begin()) return ys_.front();
    if (it == xs_.end()) return ys_.back();
    const auto hi = static_cast<std::size_t>(it - xs_.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
    return ys_[lo] + t * (ys_[hi] - ys_[lo]);
  }

  const std::vector<double>& grid() const noexcept { return xs_; }
  const std::vector<double>& values() const noexcept { return ys_; }

 private:
  std::vector<double> xs_, ys_;
};

// One application of T to a tabulation, sampled on the same grid.
inline TabulatedFunction apply_operator(const FunctionPair& pair, const BernoulliParam& m,
                                        const TabulatedFunction& f) {
  const double p = m.p_double();
  const double q = m.q_double();
  std::vector<double> ys;
  ys.reserve(f.grid().size());
  for (double x : f.grid()) ys.push_back(p * f(pair.f0(x)) + q * f(pair.f1(x)));
  return TabulatedFunction(f.grid(), std::move(ys));
}

// Checks sup|TF - TG| <= mu * sup|F - G| on the shared grid (the sup of a
// piecewise-linear difference is attained at the nodes, so the grid sup is
// the true sup of the interpolants). Test hook; must hold.
inline bool contraction_factor_check(const FunctionPair& pair, const BernoulliParam& m,
                                     const TabulatedFunction& f, const TabulatedFunction& g) {
  if (f.grid() != g.grid())
    throw std::invalid_argument("fixedpoint: contraction check needs a shared grid");
  const auto tf = apply_operator(pair, m, f);
  const auto tg = apply_operator(pair, m, g);
  double before = 0.0, after = 0.0;
  for (std::size_t i = 0; i < f.grid().size(); ++i) {
    before = std::max(before, std::abs(f.values()[i] - g.values()[i]));
    after = std::max(after, std::abs(tf.values()[i] - tg.values()[i]));
  }
  return after <= m.mu_double() * before + 1e-9;
}

}  // namespace singiter
