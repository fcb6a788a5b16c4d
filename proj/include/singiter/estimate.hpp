#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "measure.hpp"
#include "pairs.hpp"
#include "threads.hpp"

namespace singiter {

inline constexpr int kMaxBracketDepth = 40;
inline constexpr std::int64_t kEnumerationNodeBudget = 10'000'000;

// Rigorous enclosure of F_p(x) from the prefix tree truncated at `depth`:
// lower <= F_p(x) <= lower + undecided_mass, and the three masses sum to 1
// exactly.
struct Bracket {
  Rational lower;           // prefixes already diverged above 1
  Rational negative_mass;   // prefixes diverged below 0
  Rational undecided_mass;  // still inside [0,1] at full depth
  int depth = 0;

  Rational upper() const { return lower + undecided_mass; }
};

struct McEstimate {
  double estimate = 0.0;  // fraction of samples classified diverged-plus
  std::int64_t n_samples = 0;
  double undecided_fraction = 0.0;
  double std_error = 0.0;   // sqrt(estimate*(1-estimate)/n)
  double bias_bound = 0.0;  // max{p,q}^(max_steps-1)
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  std::int64_t n_undecided = 0;
};

namespace detail {

struct EnumerationContext {
  const FunctionPair& pair;
  Bracket& out;
  std::int64_t nodes = 0;

  void visit(double x, const Rational& mass, int depth_left) {
    if (++nodes > kEnumerationNodeBudget)
      throw std::runtime_error("estimate: enumeration node budget exhausted");
    if (x > 1.0) {
      out.lower += mass;
      return;
    }
    if (x < 0.0) {
      out.negative_mass += mass;
      return;
    }
    if (depth_left == 0) {
      out.undecided_mass += mass;
      return;
    }
    visit(pair.f0(x), mass * p_, depth_left - 1);
    visit(pair.f1(x), mass * q_, depth_left - 1);
  }

  EnumerationContext(const FunctionPair& pr, const BernoulliParam& m, Bracket& o)
      : pair(pr), out(o), p_(m.p()), q_(m.q()) {}

 private:
  Rational p_, q_;
};

}  // namespace detail

// Explores the binary prefix tree from x, terminating each branch at its
// first exit from [0,1]. Pruning keeps the live tree linear in depth for any
// pair satisfying (A1)-(A2); the node budget guards the rest.
inline Bracket enumerate_bracket(const FunctionPair& pair, const BernoulliParam& m, double x,
                                 int depth) {
  if (depth < 1 || depth > kMaxBracketDepth)
    throw std::invalid_argument("estimate: depth must be in [1,40]");
  Bracket bracket;
  bracket.depth = depth;
  detail::EnumerationContext ctx(pair, m, bracket);
  ctx.visit(x, Rational(1), depth);
  return bracket;
}

// Monte Carlo estimate of F_p(x). Undecided samples count as not-plus, so
// the estimator is biased downward by at most max{p,q}^(max_steps-1).
// Sample i draws its symbols from stream (seed, i), which makes the result
// independent of the serial/parallel split.
inline McEstimate monte_carlo(const FunctionPair& pair, const BernoulliParam& m, double x,
                              std::int64_t n_samples, int max_steps, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("estimate: n_samples must be >= 1");
  if (max_steps < 1) throw std::invalid_argument("estimate: max_steps must be >= 1");

  const double threshold = m.p_double();
  const int workers = resolve_thread_count();
  std::vector<std::int64_t> plus(static_cast<std::size_t>(workers), 0);
  std::vector<std::int64_t> minus(static_cast<std::size_t>(workers), 0);

  parallel_chunks(n_samples, [&](int chunk, std::int64_t begin, std::int64_t end) {
    std::int64_t local_plus = 0, local_minus = 0;
    for (std::int64_t i = begin; i < end; ++i) {
      auto rng = make_stream_rng(seed, static_cast<std::uint64_t>(i));
      double xi = x;
      for (int step = 0; step < max_steps; ++step) {
        if (xi > 1.0 || xi < 0.0) break;
        const int symbol = canonical_unit(rng) < threshold ? 0 : 1;
        xi = pair.apply(symbol, xi);
      }
      if (xi > 1.0)
        ++local_plus;
      else if (xi < 0.0)
        ++local_minus;
    }
    plus[static_cast<std::size_t>(chunk)] = local_plus;
    minus[static_cast<std::size_t>(chunk)] = local_minus;
  });

  McEstimate mc;
  mc.n_samples = n_samples;
  for (auto v : plus) mc.n_plus += v;
  for (auto v : minus) mc.n_minus += v;
  mc.n_undecided = n_samples - mc.n_plus - mc.n_minus;
  mc.estimate = static_cast<double>(mc.n_plus) / static_cast<double>(n_samples);
  mc.undecided_fraction = static_cast<double>(mc.n_undecided) / static_cast<double>(n_samples);
  mc.std_error = std::sqrt(mc.estimate * (1.0 - mc.estimate) / static_cast<double>(n_samples));
  mc.bias_bound = std::pow(m.mu_double(), max_steps - 1);
  return mc;
}

}  // namespace singiter
