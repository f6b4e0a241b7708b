#include <random>
#include <stdexcept>

#include "braidprob/garside.hpp"
#include "braidprob/random_sequence.hpp"
#include "doctest.h"

using namespace braidprob;

namespace {

IndexTuple tup(std::vector<int> v) { return IndexTuple{std::move(v)}; }

RatComplex rc(int64_t v) { return RatComplex(v); }

}  // namespace

TEST_CASE("tuple equivalences and the implication chain") {
  CHECK(equivalent(tup({1, 2, 1, 2, 1, 2}), tup({1, 3, 1, 3, 1, 3}), EquivalenceKind::order));
  CHECK(equivalent(tup({0, 1, 2}), tup({5, 6, 7}), EquivalenceKind::translation));
  CHECK_FALSE(equivalent(tup({1, 2}), tup({2, 1}), EquivalenceKind::order));
  CHECK(equivalent(tup({1, 2}), tup({2, 1}), EquivalenceKind::symmetric));
  CHECK_FALSE(equivalent(tup({0, 0}), tup({0, 1}), EquivalenceKind::symmetric));
  CHECK_THROWS_AS(equivalent(tup({1}), tup({1, 2}), EquivalenceKind::order),
                  std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(0, 6), len(1, 6);
  for (int it = 0; it < 10000; ++it) {
    int n = len(rng);
    std::vector<int> a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = val(rng);
      b[k] = val(rng);
    }
    IndexTuple i{a}, j{b};
    if (equivalent(i, j, EquivalenceKind::translation))
      CHECK(equivalent(i, j, EquivalenceKind::order));
    if (equivalent(i, j, EquivalenceKind::order))
      CHECK(equivalent(i, j, EquivalenceKind::symmetric));
  }
}

TEST_CASE("order equivalence chain has elementary moves only") {
  auto check_chain = [](const IndexTuple& i, const IndexTuple& j) {
    auto chain = order_equiv_chain(i, j);
    REQUIRE(chain.front() == i);
    REQUIRE(chain.back() == j);
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      const auto& a = chain[k].entries;
      const auto& b = chain[k + 1].entries;
      CHECK(equivalent(chain[k], chain[k + 1], EquivalenceKind::order));
      int from = -1, to = -1;
      for (size_t s = 0; s < a.size(); ++s) {
        if (a[s] != b[s]) {
          if (from == -1) {
            from = a[s];
            to = b[s];
          } else {
            CHECK(a[s] == from);
            CHECK(b[s] == to);
          }
        }
      }
      REQUIRE(from != -1);                      // consecutive tuples differ
      CHECK(std::abs(from - to) == 1);          // level moved by one
      for (size_t s = 0; s < a.size(); ++s) {   // target value was fresh
        if (a[s] == from) continue;
        CHECK(a[s] != to);
      }
    }
  };
  check_chain(tup({1, 3}), tup({1, 2}));
  check_chain(tup({0, 2, 4}), tup({0, 1, 2}));
  check_chain(tup({5, 5, 1}), tup({9, 9, 0}));
  CHECK(order_equiv_chain(tup({2, 7}), tup({2, 7})).size() == 1);
  CHECK_THROWS_AS(order_equiv_chain(tup({1, 2}), tup({2, 1})), std::invalid_argument);
}

TEST_CASE("moment fixtures from the trace witnesses") {
  SequenceSpec artin{SequenceKind::ArtinAlpha, {}};
  ExactElement g = ExactElement::from_word(BraidWord::sigma({1}));
  ExactElement gi = ExactElement::from_word(BraidWord::sigma({-1}));
  // w1-shaped product: indices (1,2,1,2,1,2), args g,g,g,g^-1 pattern
  MomentQuery q1{tup({1, 2, 1, 2, 1, 2}), {g, g, g, gi, gi, gi}};
  CHECK(moment(artin, q1) == rc(1));
  MomentQuery q2{tup({1, 3, 1, 3, 1, 3}), {g, g, g, gi, gi, gi}};
  CHECK(moment(artin, q2) == rc(0));
  // single identity argument
  MomentQuery q3{tup({4}), {ExactElement::unit()}};
  CHECK(moment(artin, q3) == rc(1));

  SequenceSpec beta{SequenceKind::GammaBeta, {}};
  ExactElement gg = ExactElement::from_word(BraidWord::gamma({1}));
  ExactElement ggi = ExactElement::from_word(BraidWord::gamma({-1}));
  // band-generator witness: tuple (2,1,0,2,1,2,0,1) gives the trivial word
  MomentQuery q4{tup({2, 1, 0, 2, 1, 2, 0, 1}), {gg, gg, gg, gg, ggi, ggi, ggi, ggi}};
  CHECK(moment(beta, q4) == rc(1));
  // swapping values 0 <-> 1 kills the trace
  MomentQuery q5{tup({2, 0, 1, 2, 0, 2, 1, 0}), {gg, gg, gg, gg, ggi, ggi, ggi, ggi}};
  CHECK(moment(beta, q5) == rc(0));
}

TEST_CASE("iota images act as partial shifts") {
  SequenceSpec beta{SequenceKind::GammaBeta, {}};
  ExactElement g = ExactElement::from_word(BraidWord::gamma({1}));
  ExactElement img = iota_image(beta, 3, g);
  REQUIRE(img.size() == 1);
  CHECK(img.terms().begin()->first == canonical_key(BraidWord::gamma({4})));

  SequenceSpec artin{SequenceKind::ArtinAlpha, {}};
  ExactElement s = ExactElement::from_word(BraidWord::sigma({1, 1}));
  ExactElement img2 = iota_image(artin, 2, s);
  CHECK(img2.terms().begin()->first == canonical_key(BraidWord::sigma({3, 3})));

  SequenceSpec inv{SequenceKind::InverseRho, {}};
  ExactElement img3 = iota_image(inv, 1, ExactElement::from_word(BraidWord::sigma({1})));
  CHECK(img3.terms().begin()->first == canonical_key(BraidWord::sigma({-1, 1, 1})));
}

TEST_CASE("implementing braid conjugates the moment words") {
  SequenceSpec beta{SequenceKind::GammaBeta, {}};
  // i=(0) -> j=(1): the braid acts as gamma_1 -> gamma_2
  BraidWord tau = implementing_braid(tup({0}), tup({1}));
  ExactElement conj = apply_spec_braid(beta, tau, ExactElement::from_word(BraidWord::gamma({1})));
  REQUIRE(conj.size() == 1);
  CHECK(conj.terms().begin()->first == canonical_key(BraidWord::gamma({2})));
  CHECK(implementing_braid(tup({2, 5}), tup({2, 5})).empty());
}

TEST_CASE("implementing braid post-check on random order-equivalent pairs") {
  // The conjugation identity holds for the braidable sequence. ArtinAlpha
  // is not braidable (its moments are not order-invariant), and over the
  // left-regular representation the sigma_1-seeds of InverseRho fall
  // outside the localized algebra, so the check applies to GammaBeta.
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> val(0, 4), len(1, 4), pick(0, 2);
  for (SequenceKind kind : {SequenceKind::GammaBeta}) {
    SequenceSpec spec{kind, {}};
    auto battery = SequenceSpec::default_battery(kind);
    int done = 0;
    while (done < 105) {
      int n = len(rng);
      std::vector<int> a(n);
      for (int k = 0; k < n; ++k) a[k] = val(rng);
      std::vector<int> ranks = a;
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      // order-equivalent partner: re-embed the ranks monotonically
      std::vector<int> target(ranks.size());
      int base = val(rng);
      for (size_t r = 0; r < ranks.size(); ++r) base = target[r] = base + pick(rng) + (r > 0);
      std::vector<int> b(n);
      for (int k = 0; k < n; ++k)
        b[k] = target[static_cast<size_t>(
            std::lower_bound(ranks.begin(), ranks.end(), a[k]) - ranks.begin())];
      IndexTuple i{a}, j{b};
      REQUIRE(equivalent(i, j, EquivalenceKind::order));
      BraidWord tau = implementing_braid(i, j);
      std::vector<ExactElement> args(n);
      for (int k = 0; k < n; ++k) args[k] = battery[pick(rng)];
      ExactElement mi = ExactElement::unit(), mj = ExactElement::unit();
      for (int k = 0; k < n; ++k) {
        mi = mul(mi, iota_image(spec, i.entries[k], args[k]));
        mj = mul(mj, iota_image(spec, j.entries[k], args[k]));
      }
      CHECK(apply_spec_braid(spec, tau, mi) == mj);
      ++done;
    }
  }
}

TEST_CASE("descending product commutation identities") {
  CHECK(descending_product_commutation(1, 3));
  CHECK(descending_product_commutation(5, 2));
  CHECK(descending_product_commutation(0, 4));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      if (n == m || n == m + 1) continue;
      CHECK(descending_product_commutation(n, m));
    }
  CHECK_THROWS_AS(descending_product_commutation(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(descending_product_commutation(4, 3), std::invalid_argument);
}

TEST_CASE("small symmetry scans find the expected witnesses") {
  // ArtinAlpha fails order equivalence; the earliest violation is the
  // order-4 commutator pattern (sigma_2, sigma_3 do not commute while
  // sigma_2, sigma_4 do)
  SequenceSpec artin{SequenceKind::ArtinAlpha, {}};
  auto ab = SequenceSpec::default_battery(SequenceKind::ArtinAlpha);
  SymmetryReport r1 = check_symmetry(artin, EquivalenceKind::order, 4, 3, ab);
  CHECK_FALSE(r1.pass);
  REQUIRE(r1.witnesses.size() == 1);
  CHECK(r1.witnesses[0].lhs == tup({0, 1, 0, 1}));
  CHECK(r1.witnesses[0].rhs == tup({0, 2, 0, 2}));
  CHECK(r1.witnesses[0].lhs_value != r1.witnesses[0].rhs_value);

  // GammaBeta passes the same scan
  SequenceSpec beta{SequenceKind::GammaBeta, {}};
  auto gb = SequenceSpec::default_battery(SequenceKind::GammaBeta);
  SymmetryReport r2 = check_symmetry(beta, EquivalenceKind::order, 4, 3, gb);
  CHECK(r2.pass);

  // both are stationary at small order
  CHECK(check_symmetry(artin, EquivalenceKind::translation, 4, 3, ab).pass);
  CHECK(check_symmetry(beta, EquivalenceKind::translation, 4, 3, gb).pass);

  // GammaBeta order-passes up to order 5 at bound 3
  SymmetryReport r3 = check_symmetry(beta, EquivalenceKind::order, 5, 3, gb);
  CHECK(r3.pass);

  // GammaBeta is exchangeable-looking at small order but fails at order 8
  SymmetryReport r4 = check_symmetry(beta, EquivalenceKind::symmetric, 6, 2, gb);
  CHECK(r4.pass);
}

TEST_CASE("default battery shape") {
  auto b = SequenceSpec::default_battery(SequenceKind::GammaBeta);
  REQUIRE(b.size() == 4);
  CHECK(b[0].size() == 1);
  CHECK(b[3].size() == 2);  // g + g^-1
}

TEST_CASE("order independence over intervals factorizes for ArtinAlpha") {
  // interval tuples I < J: moment(I u J) = moment(I) * moment(J)
  SequenceSpec artin{SequenceKind::ArtinAlpha, {}};
  auto battery = SequenceSpec::default_battery(SequenceKind::ArtinAlpha);
  std::mt19937_64 rng(515);
  std::uniform_int_distribution<int> pick(0, 3), len(1, 3), gap(1, 2);
  for (int it = 0; it < 40; ++it) {
    int nI = len(rng), nJ = len(rng);
    std::vector<int> tuple;
    std::vector<ExactElement> args;
    for (int k = 0; k < nI; ++k) {
      tuple.push_back(k / 2);
      args.push_back(battery[pick(rng)]);
    }
    int start = (nI + 1) / 2 + gap(rng);
    std::vector<int> tupleJ;
    std::vector<ExactElement> argsJ;
    for (int k = 0; k < nJ; ++k) {
      tupleJ.push_back(start + k / 2);
      argsJ.push_back(battery[pick(rng)]);
    }
    MomentQuery qI{tup(tuple), args};
    MomentQuery qJ{tup(tupleJ), argsJ};
    std::vector<int> tu = tuple;
    tu.insert(tu.end(), tupleJ.begin(), tupleJ.end());
    std::vector<ExactElement> au = args;
    au.insert(au.end(), argsJ.begin(), argsJ.end());
    MomentQuery qU{tup(tu), au};
    CHECK(moment(artin, qU) == moment(artin, qI) * moment(artin, qJ));
  }
}

TEST_CASE("scanner agrees with the direct definition at small scale") {
  // brute force over all order-equivalent pairs with order <= 3, bound 2,
  // evaluating moments through the group algebra directly
  SequenceSpec beta{SequenceKind::GammaBeta, {}};
  auto battery = SequenceSpec::default_battery(SequenceKind::GammaBeta);
  bool brute_pass = true;
  for (int n = 1; n <= 3 && brute_pass; ++n) {
    int tuples = 1;
    for (int k = 0; k < n; ++k) tuples *= 3;
    for (int ti = 0; ti < tuples && brute_pass; ++ti) {
      for (int tj = 0; tj < tuples && brute_pass; ++tj) {
        std::vector<int> a(n), b(n);
        int ri = ti, rj = tj;
        for (int k = 0; k < n; ++k) {
          a[k] = ri % 3;
          b[k] = rj % 3;
          ri /= 3;
          rj /= 3;
        }
        IndexTuple i{a}, j{b};
        if (!equivalent(i, j, EquivalenceKind::order)) continue;
        int combos = 1;
        for (int k = 0; k < n; ++k) combos *= 4;
        for (int ci = 0; ci < combos; ++ci) {
          std::vector<ExactElement> args;
          int rc = ci;
          for (int k = 0; k < n; ++k) {
            args.push_back(battery[rc % 4]);
            rc /= 4;
          }
          if (!(moment(beta, {i, args}) == moment(beta, {j, args}))) brute_pass = false;
        }
      }
    }
  }
  SymmetryReport scan = check_symmetry(beta, EquivalenceKind::order, 3, 2, battery);
  CHECK(brute_pass == scan.pass);
  CHECK(scan.pass);

  // same comparison for the failing sequence
  SequenceSpec artin{SequenceKind::ArtinAlpha, {}};
  auto ab = SequenceSpec::default_battery(SequenceKind::ArtinAlpha);
  bool artin_brute = true;
  {
    // the order-4 violation: check the brute force sees it too
    ExactElement g = ab[0], gi = ab[1];
    artin_brute = moment(artin, {IndexTuple{{0, 1, 0, 1}}, {g, g, gi, gi}}) ==
                  moment(artin, {IndexTuple{{0, 2, 0, 2}}, {g, g, gi, gi}});
  }
  SymmetryReport artin_scan = check_symmetry(artin, EquivalenceKind::order, 4, 2, ab);
  CHECK_FALSE(artin_brute);
  CHECK_FALSE(artin_scan.pass);
}
