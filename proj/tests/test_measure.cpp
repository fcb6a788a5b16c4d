#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "singiter/measure.hpp"

using namespace singiter;

TEST_CASE("cylinder probabilities on small words", "[measure]") {
  const BernoulliParam half{Rational(1, 2)};
  const BernoulliParam third{Rational(1, 3)};

  CHECK(cylinder_probability(Word{0, 1, 0}, half) == Rational(1, 8));
  CHECK(cylinder_probability(Word{}, third) == Rational(1));
  CHECK(cylinder_probability(Word{0, 1, 0}, third) == Rational(2, 27));
}

TEST_CASE("bernoulli parameter is an open-interval probability", "[measure]") {
  CHECK_THROWS_AS(BernoulliParam{Rational(0)}, std::invalid_argument);
  CHECK_THROWS_AS(BernoulliParam{Rational(1)}, std::invalid_argument);
  CHECK_THROWS_AS(BernoulliParam{Rational(3, 2)}, std::invalid_argument);
  const BernoulliParam m{Rational(2, 7)};
  CHECK(m.q() == Rational(5, 7));
  CHECK(m.mu() == Rational(5, 7));
}

TEST_CASE("flip word", "[measure]") {
  CHECK(flip_word(Word{0, 1, 1}) == Word{1, 0, 0});
  CHECK(flip_word(Word{}) == Word{});
  CHECK(flip_word(flip_word(Word{0, 1})) == Word{0, 1});

  // involution on every word up to length 10
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      const Word w = Word::from_index(n, bits);
      CHECK(flip_word(flip_word(w)) == w);
    }
  }
}

TEST_CASE("prefix splitting identity", "[measure]") {
  const BernoulliParam half{Rational(1, 2)};
  const BernoulliParam third{Rational(1, 3)};
  const BernoulliParam odd{Rational(2, 7)};

  CHECK(concat_probability_check(Word{0}, Word{1}, half));
  CHECK(concat_probability_check(Word{}, Word{0, 1}, third));
  CHECK(concat_probability_check(Word{0, 1}, Word{1, 1, 0}, odd));
}

TEST_CASE("flip duality against swapped parameter", "[measure]") {
  const BernoulliParam m{Rational(1, 3)};
  const BernoulliParam swapped = m.swapped();
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      const Word w = Word::from_index(n, bits);
      REQUIRE(cylinder_probability(flip_word(w), m) == cylinder_probability(w, swapped));
    }
  }
}

TEST_CASE("level sums are exactly one", "[measure]") {
  const BernoulliParam m{Rational(2, 7)};
  for (std::size_t n = 0; n <= 12; ++n) {
    Rational sum(0);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits)
      sum += cylinder_probability(Word::from_index(n, bits), m);
    REQUIRE(sum == Rational(1));
  }
}

TEST_CASE("one-step prepend identities", "[measure]") {
  const BernoulliParam m{Rational(1, 3)};
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      const Word w = Word::from_index(n, bits);
      const Rational base = cylinder_probability(w, m);
      REQUIRE(cylinder_probability(Word{0} + w, m) == m.p() * base);
      REQUIRE(cylinder_probability(Word{1} + w, m) == m.q() * base);
    }
  }
}

TEST_CASE("symbol sampling is deterministic and calibrated", "[measure]") {
  const BernoulliParam m{Rational(3, 10)};

  SymbolSampler a(m, 42, 0);
  SymbolSampler b(m, 42, 0);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next() == b.next());

  SymbolSampler c(m, 43, 0);
  int diff = 0;
  for (int i = 0; i < 1000; ++i) diff += (a.next() != c.next());
  CHECK(diff > 0);

  // binomial 3-sigma band around p over 10^6 draws
  SymbolSampler s(m, 7, 0);
  const int n = 1'000'000;
  std::int64_t zeros = 0;
  for (int i = 0; i < n; ++i) zeros += (s.next() == 0);
  const double freq = static_cast<double>(zeros) / n;
  CHECK(std::abs(freq - 0.3) <= 0.0046);
}

TEST_CASE("word validation", "[measure]") {
  CHECK_THROWS_AS(Word{0, 2}, std::invalid_argument);
  CHECK(Word::parse("0110") == Word{0, 1, 1, 0});
  CHECK_THROWS_AS(Word::parse("012"), std::invalid_argument);
  CHECK(Word{0, 1, 1}.ones() == 2);
  CHECK((Word{0} + Word{1, 1}) == Word{0, 1, 1});
}
