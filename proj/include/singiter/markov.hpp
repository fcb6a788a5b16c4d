#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "estimate.hpp"
#include "measure.hpp"
#include "pairs.hpp"
#include "threads.hpp"
#include "word.hpp"

namespace singiter {

using TransitionMatrix = std::array<std::array<Rational, 2>, 2>;

// Unique stationary vector of an irreducible 2-state chain: pi is
// proportional to (P10, P01).
inline std::array<Rational, 2> stationary_vector(const TransitionMatrix& transition) {
  for (const auto& row : transition) {
    if (row[0] < 0 || row[1] < 0)
      throw std::invalid_argument("markov: transition entries must be >= 0");
    if (row[0] + row[1] != 1) throw std::invalid_argument("markov: rows must sum to 1 exactly");
  }
  const Rational& p01 = transition[0][1];
  const Rational& p10 = transition[1][0];
  if (p01 == 0 || p10 == 0)
    throw std::invalid_argument(
        "markov: reducible chain (zero off-diagonal), stationary vector is not unique");
  const Rational total = p01 + p10;
  return {p10 / total, p01 / total};
}

// Markov measure on adjacency-restricted binary sequences: pi P = pi, and a
// transition entry is positive exactly where the adjacency allows it.
struct MarkovMeasure {
  std::array<std::array<int, 2>, 2> adjacency{};
  TransitionMatrix transition{};
  std::array<Rational, 2> stationary{};

  // Largest transition entry; conservative per-step survival factor.
  Rational mu() const {
    Rational best(0);
    for (const auto& row : transition)
      for (const auto& entry : row)
        if (entry > best) best = entry;
    return best;
  }
};

inline MarkovMeasure make_markov_measure(const TransitionMatrix& transition) {
  MarkovMeasure mm;
  mm.stationary = stationary_vector(transition);
  mm.transition = transition;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) mm.adjacency[i][j] = transition[i][j] > 0 ? 1 : 0;
  return mm;
}

// Markov measure with both rows equal to (p, q); reduces to Bernoulli(p).
inline MarkovMeasure make_bernoulli_markov(const BernoulliParam& m) {
  return make_markov_measure({{{m.p(), m.q()}, {m.p(), m.q()}}});
}

// pi_{a1} * P_{a1,a2} * ... * P_{a_{n-1},a_n}; words with a forbidden
// transition get probability 0, not an error.
inline Rational markov_cylinder_probability(const MarkovMeasure& mm, const Word& w) {
  if (w.empty()) throw std::invalid_argument("markov: cylinder word must be nonempty");
  Rational prob = mm.stationary[static_cast<std::size_t>(w[0])];
  for (std::size_t i = 1; i < w.size(); ++i) {
    prob *= mm.transition[static_cast<std::size_t>(w[i - 1])][static_cast<std::size_t>(w[i])];
    if (prob == 0) return prob;
  }
  return prob;
}

namespace detail {

struct MarkovEnumerationContext {
  const FunctionPair& pair;
  const MarkovMeasure& mm;
  Bracket& out;
  std::int64_t nodes = 0;

  // prev < 0 marks the root, where children are weighted by pi.
  void visit(double x, const Rational& mass, int prev, int depth_left) {
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
    for (int symbol = 0; symbol < 2; ++symbol) {
      const Rational& w = prev < 0 ? mm.stationary[static_cast<std::size_t>(symbol)]
                                   : mm.transition[static_cast<std::size_t>(prev)]
                                                  [static_cast<std::size_t>(symbol)];
      if (w == 0) continue;  // adjacency-forbidden branch carries no mass
      visit(pair.apply(symbol, x), mass * w, symbol, depth_left - 1);
    }
  }
};

}  // namespace detail

// Same prefix-tree exploration as enumerate_bracket, with branch weights
// from the Markov measure. Masses still sum to 1 exactly.
inline Bracket markov_enumerate_bracket(const FunctionPair& pair, const MarkovMeasure& mm,
                                        double x, int depth) {
  if (depth < 1 || depth > kMaxBracketDepth)
    throw std::invalid_argument("estimate: depth must be in [1,40]");
  Bracket bracket;
  bracket.depth = depth;
  detail::MarkovEnumerationContext ctx{pair, mm, bracket};
  ctx.visit(x, Rational(1), -1, depth);
  return bracket;
}

// Symbol chain: first symbol from pi, each next from the transition row of
// the previous symbol. With equal rows the draws coincide with the Bernoulli
// sampler bit for bit.
class MarkovSymbolSampler {
 public:
  MarkovSymbolSampler(const MarkovMeasure& mm, std::uint64_t seed, std::uint64_t stream = 0)
      : rng_(make_stream_rng(seed, stream)),
        pi0_(to_double(mm.stationary[0])),
        row0_{to_double(mm.transition[0][0]), to_double(mm.transition[1][0])} {}

  int next() {
    const double threshold = prev_ < 0 ? pi0_ : row0_[static_cast<std::size_t>(prev_)];
    prev_ = canonical_unit(rng_) < threshold ? 0 : 1;
    return prev_;
  }

 private:
  std::mt19937_64 rng_;
  double pi0_;
  std::array<double, 2> row0_;
  int prev_ = -1;
};

inline McEstimate markov_monte_carlo(const FunctionPair& pair, const MarkovMeasure& mm, double x,
                                     std::int64_t n_samples, int max_steps, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("estimate: n_samples must be >= 1");
  if (max_steps < 1) throw std::invalid_argument("estimate: max_steps must be >= 1");

  const int workers = resolve_thread_count();
  std::vector<std::int64_t> plus(static_cast<std::size_t>(workers), 0);
  std::vector<std::int64_t> minus(static_cast<std::size_t>(workers), 0);

  parallel_chunks(n_samples, [&](int chunk, std::int64_t begin, std::int64_t end) {
    std::int64_t local_plus = 0, local_minus = 0;
    for (std::int64_t i = begin; i < end; ++i) {
      MarkovSymbolSampler sampler(mm, seed, static_cast<std::uint64_t>(i));
      double xi = x;
      for (int step = 0; step < max_steps; ++step) {
        if (xi > 1.0 || xi < 0.0) break;
        xi = pair.apply(sampler.next(), xi);
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
  mc.bias_bound = std::pow(to_double(mm.mu()), max_steps - 1);
  return mc;
}

}  // namespace singiter
