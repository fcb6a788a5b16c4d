#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pairs.hpp"
#include "word.hpp"

namespace singiter {

enum class OutcomeKind { DivergedPlus, DivergedMinus, Undecided };

// Classification of a finite trajectory. `steps` is the index of the first
// iterate outside [0,1] (0 if x0 already escaped), or the word length when
// every iterate stayed inside.
struct Outcome {
  OutcomeKind kind = OutcomeKind::Undecided;
  int steps = 0;
  double last_x = 0.0;
};

// Iterates x_{n+1} = f_{w_{n+1}}(x_n), stopping at the first iterate outside
// [0,1]: once an iterate escapes, its limit is determined. The comparisons
// are exact; iterates sitting exactly on 0 or 1 continue.
inline Outcome run(const FunctionPair& pair, double x0, const Word& word) {
  double x = x0;
  if (x > 1.0) return {OutcomeKind::DivergedPlus, 0, x};
  if (x < 0.0) return {OutcomeKind::DivergedMinus, 0, x};
  int n = 0;
  for (int symbol : word) {
    x = pair.apply(symbol, x);
    ++n;
    if (x > 1.0) return {OutcomeKind::DivergedPlus, n, x};
    if (x < 0.0) return {OutcomeKind::DivergedMinus, n, x};
  }
  return {OutcomeKind::Undecided, n, x};
}

// Full path x_0,...,x_n with no early stopping.
inline std::vector<double> run_trace(const FunctionPair& pair, double x0, const Word& word) {
  std::vector<double> path;
  path.reserve(word.size() + 1);
  path.push_back(x0);
  double x = x0;
  for (int symbol : word) {
    x = pair.apply(symbol, x);
    path.push_back(x);
  }
  return path;
}

// For symmetric pairs, the path from 1-x0 under the flipped word mirrors the
// path from x0: y_n = 1 - x_n. Test hook; must always return true.
inline bool run_coupled_symmetry_check(const FunctionPair& pair, double x0, const Word& word,
                                       double tol = 1e-10) {
  if (!pair.symmetric())
    throw std::invalid_argument("trajectory: coupled symmetry check requires a symmetric pair");
  const auto xs = run_trace(pair, x0, word);
  const auto ys = run_trace(pair, 1.0 - x0, word.flipped());
  for (std::size_t n = 0; n < xs.size(); ++n) {
    if (std::abs(ys[n] - (1.0 - xs[n])) > tol) return false;
  }
  return true;
}

}  // namespace singiter
