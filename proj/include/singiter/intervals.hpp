#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fixedpoint.hpp"
#include "measure.hpp"
#include "pairs.hpp"
#include "word.hpp"

namespace singiter {

inline constexpr int kMaxPlateauLevel = 25;

// One interval of constancy of F_p. `word` is the preimage path back to the
// root interval [a,b]: the node is f_{w1}^{-1}(f_{w2}^{-1}(...([a,b]))), and
// its exact value follows from the path by v -> p*v (symbol 0) and
// v -> p + q*v (symbol 1), applied right to left starting from p.
struct PlateauNode {
  double left = 0.0;
  double right = 0.0;
  Rational value;
  Word word;
  int level = 0;
};

// All plateau intervals up to max_level, generated by pulling [a,b] back
// through the two inverse branches. Level n holds 2^n pairwise disjoint
// intervals, sorted by left endpoint.
inline std::vector<PlateauNode> plateau_tree(const FunctionPair& pair, const BernoulliParam& m,
                                             int max_level) {
  if (!(pair.a() < pair.b()))
    throw std::invalid_argument("intervals: degenerate plateau: a=b");
  if (max_level < 0 || max_level > kMaxPlateauLevel)
    throw std::invalid_argument("intervals: max_level must be in [0,25]");

  std::vector<PlateauNode> nodes;
  std::vector<PlateauNode> level;
  level.push_back({pair.a(), pair.b(), m.p(), Word{}, 0});
  nodes.push_back(level.front());

  const Rational p = m.p();
  const Rational q = m.q();
  for (int n = 1; n <= max_level; ++n) {
    std::vector<PlateauNode> next;
    next.reserve(level.size() * 2);
    for (const auto& node : level) {
      PlateauNode lo{pair.apply_inverse(0, node.left), pair.apply_inverse(0, node.right),
                     p * node.value, Word{0} + node.word, n};
      PlateauNode hi{pair.apply_inverse(1, node.left), pair.apply_inverse(1, node.right),
                     p + q * node.value, Word{1} + node.word, n};
      next.push_back(std::move(lo));
      next.push_back(std::move(hi));
    }
    std::sort(next.begin(), next.end(),
              [](const PlateauNode& x, const PlateauNode& y) { return x.left < y.left; });
    nodes.insert(nodes.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return nodes;
}

// Total Lebesgue measure of the plateau set truncated at max_level. For the
// affine family this is 1 - (1-(b-a))^(max_level+1).
inline double total_plateau_length(const FunctionPair& pair, int max_level) {
  const BernoulliParam half{Rational(1, 2)};  // lengths do not depend on p
  double total = 0.0;
  for (const auto& node : plateau_tree(pair, half, max_level)) total += node.right - node.left;
  return total;
}

// Cross-check against the operator iterate at interval midpoints.
inline bool plateau_consistency_check(const FunctionPair& pair, const BernoulliParam& m,
                                      const std::vector<PlateauNode>& nodes, int k) {
  const double tol = std::pow(m.mu_double(), k);
  for (const auto& node : nodes) {
    const double mid = 0.5 * (node.left + node.right);
    const double approx = eval_approx(pair, m, mid, k).value;
    if (std::abs(approx - to_double(node.value)) > tol) return false;
  }
  return true;
}

}  // namespace singiter
