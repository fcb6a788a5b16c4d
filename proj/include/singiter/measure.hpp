#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "rational.hpp"
#include "word.hpp"

namespace singiter {

// Bernoulli parameter on two symbols: symbol 0 has probability p, symbol 1
// has probability q = 1-p. q is derived, never stored independently.
class BernoulliParam {
 public:
  explicit BernoulliParam(Rational p) : p_(std::move(p)) {
    if (!(p_ > 0 && p_ < 1)) throw std::invalid_argument("measure: requires 0 < p < 1");
  }

  const Rational& p() const noexcept { return p_; }
  Rational q() const { return 1 - p_; }
  Rational mu() const { return p_ >= q() ? p_ : q(); }  // max{p,q}

  double p_double() const { return to_double(p_); }
  double q_double() const { return to_double(q()); }
  double mu_double() const { return to_double(mu()); }

  BernoulliParam swapped() const { return BernoulliParam(q()); }

 private:
  Rational p_;
};

// P_p([a_1,...,a_n]) = p^(n - sum a_i) * q^(sum a_i); the empty word is the
// whole space and has mass 1.
inline Rational cylinder_probability(const Word& w, const BernoulliParam& m) {
  const auto n = w.size();
  const auto k = w.ones();
  return rational_pow(m.p(), static_cast<unsigned>(n - k)) *
         rational_pow(m.q(), static_cast<unsigned>(k));
}

// Splitting identity for concatenated prefixes, in exact rationals. Exposed
// as a test hook; must always return true.
inline bool concat_probability_check(const Word& w1, const Word& w2, const BernoulliParam& m) {
  return cylinder_probability(w1 + w2, m) ==
         cylinder_probability(w1, m) * cylinder_probability(w2, m);
}

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Engine for stream `index` of a run keyed by `seed`. Streams are derived
// independently of execution order, so parallel and serial runs see the
// same symbol sequences.
inline std::mt19937_64 make_stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (stream * 0xD1342543DE82EF95ull + 0x632BE59BD9B4E019ull);
  const std::uint64_t a = detail::splitmix64(state);
  const std::uint64_t b = detail::splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

// Uniform draw in [0,1) with 53 random bits; avoids the unspecified
// rounding of uniform_real_distribution.
inline double canonical_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int sample_symbol(std::mt19937_64& rng, const BernoulliParam& m) {
  return canonical_unit(rng) < m.p_double() ? 0 : 1;
}

// Owns its generator state; send between threads, never share.
class SymbolSampler {
 public:
  SymbolSampler(const BernoulliParam& m, std::uint64_t seed, std::uint64_t stream = 0)
      : rng_(make_stream_rng(seed, stream)), threshold_(m.p_double()) {}

  int next() { return canonical_unit(rng_) < threshold_ ? 0 : 1; }

 private:
  std::mt19937_64 rng_;
  double threshold_;
};

}  // namespace singiter
