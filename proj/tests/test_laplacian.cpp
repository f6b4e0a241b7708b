#include <functional>
#include <stdexcept>

#include "braidprob/group_algebra.hpp"
#include "braidprob/laplacian.hpp"
#include "doctest.h"

using namespace braidprob;

TEST_CASE("free group counts: parity, small values, kesten numbers") {
  auto counts = count_trivial_words_upto(WalkGroup::F2, 12);
  CHECK(counts[0] == BigInt(1));
  CHECK(counts[2] == BigInt(4));
  CHECK(counts[4] == BigInt(28));
  CHECK(counts[6] == BigInt(232));
  for (int n = 1; n <= 12; n += 2) CHECK(counts[n] == BigInt(0));
}

TEST_CASE("raw enumeration agrees with the DP for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(count_trivial_words_raw(WalkGroup::F2, n) == count_trivial_words(WalkGroup::F2, n));
    CHECK(count_trivial_words_raw(WalkGroup::B3_gamma, n) ==
          count_trivial_words(WalkGroup::B3_gamma, n));
  }
}

TEST_CASE("B3 counts match F2 up to length 4 and exceed from length 6") {
  auto b3 = count_trivial_words_upto(WalkGroup::B3_gamma, 10);
  auto f2 = count_trivial_words_upto(WalkGroup::F2, 10);
  for (int n = 0; n <= 4; ++n) CHECK(b3[n] == f2[n]);
  for (int n = 6; n <= 10; n += 2) {
    CAPTURE(n);
    CHECK(f2[n] < b3[n]);
  }
  // the braid relator gamma_1 gamma_2 gamma_1 gamma_2^-1 gamma_1^-1 gamma_2^-1
  // and friends: the length-6 excess is exactly the 12 rotations/inverses
  CHECK(b3[6] - f2[6] == BigInt(12));
}

TEST_CASE("squared generators behave freely up to length 10") {
  auto sq = count_trivial_words_upto(WalkGroup::B3_gamma_squared, 10);
  auto f2 = count_trivial_words_upto(WalkGroup::F2, 10);
  for (int n = 0; n <= 10; ++n) CHECK(sq[n] == f2[n]);
}

TEST_CASE("single Haar unitary gives central binomial moments") {
  auto counts = count_trivial_words_upto(WalkGroup::Z_single, 12);
  auto binom = [](int n, int k) {
    BigInt r(1);
    for (int j = 0; j < k; ++j) r = r * BigInt(n - j) / BigInt(j + 1);
    return r;
  };
  for (int n = 0; n <= 12; n += 2) CHECK(counts[n] == binom(n, n / 2));
  for (int n = 1; n <= 12; n += 2) CHECK(counts[n] == BigInt(0));
}

TEST_CASE("kesten series expansion") {
  PowerSeries s = kesten_series(8);
  CHECK(s.coefficients[0] == Rational(1));
  CHECK(s.coefficients[1] == Rational(0));
  CHECK(s.coefficients[2] == Rational(4));
  CHECK(s.coefficients[4] == Rational(28));
  CHECK(s.coefficients[6] == Rational(232));
  CHECK(s.coefficients[8] == Rational(2092));
  CHECK_THROWS_AS(kesten_series(70), std::invalid_argument);
}

TEST_CASE("kesten cross-check against walk counts") {
  KestenComparison cmp = compare_with_kesten(12);
  CHECK(cmp.match);
  REQUIRE(cmp.series_coefficients.size() == 7);
  CHECK(cmp.series_coefficients[3] == BigInt(232));
  CHECK(cmp.walk_counts[3] == BigInt(232));
  CHECK(compare_with_kesten(0).match);
  CHECK_THROWS_AS(compare_with_kesten(7), std::invalid_argument);
}

TEST_CASE("half normalization divides by 2^n") {
  auto half = laplacian_moments(WalkGroup::F2, 4, MomentNormalization::half);
  CHECK(half[0] == Rational(1));
  CHECK(half[1] == Rational(0));
  CHECK(half[2] == Rational(1));
  CHECK(half[3] == Rational(0));
  CHECK(half[4] == Rational(BigInt(7), BigInt(4)));
  auto raw = laplacian_moments(WalkGroup::B3_gamma, 0, MomentNormalization::count);
  CHECK(raw == std::vector<Rational>{Rational(1)});
}

TEST_CASE("frontier counts are conserved and agree with the collapsed DP") {
  for (WalkGroup g : {WalkGroup::B3_gamma, WalkGroup::F2, WalkGroup::Z_single}) {
    WalkCounter counter(g);
    auto expect = count_trivial_words_upto(g, 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(counter.total_count() ==
            BigInt::pow(BigInt(counter.alphabet_size()), static_cast<uint32_t>(n)));
      CHECK(counter.identity_count() == expect[n]);
      if (n < 8) counter.step();
    }
  }
}

TEST_CASE("limits are enforced") {
  WalkLimits tight;
  tight.max_n_b3 = 4;
  CHECK_THROWS_AS(count_trivial_words(WalkGroup::B3_gamma, 5, tight), std::invalid_argument);
  WalkLimits tiny;
  tiny.frontier_cap = 3;
  CHECK_THROWS_AS(count_trivial_words(WalkGroup::B3_gamma, 4, tiny), std::runtime_error);
}

TEST_CASE("walk counts agree with group-algebra laplacian powers") {
  // trace((L_g1 + L_g1* + L_g2 + L_g2*)^n) counts the trivial words directly
  using braidprob::ExactElement;
  ExactElement lap;
  for (int s : {1, -1}) {
    lap = add(lap, ExactElement::from_word(braidprob::BraidWord::gamma({s})));
    lap = add(lap, ExactElement::from_word(braidprob::BraidWord::gamma({2 * s})));
  }
  ExactElement power = ExactElement::unit();
  auto counts = count_trivial_words_upto(WalkGroup::B3_gamma, 6);
  for (int n = 1; n <= 6; ++n) {
    power = mul(power, lap);
    braidprob::RatComplex t = trace(power);
    CHECK(t.im.is_zero());
    CHECK(t.re.num() == counts[n]);
    CHECK(t.re.is_integer());
  }
}
