#include "braidprob/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "braidprob/braid_word.hpp"
#include "braidprob/garside.hpp"
#include "braidprob/group_algebra.hpp"
#include "braidprob/laplacian.hpp"
#include "braidprob/matrix_rep.hpp"
#include "braidprob/ncprob.hpp"
#include "braidprob/random_sequence.hpp"

namespace braidprob {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << "FAIL: " << what;
    }
  }
  void note(const std::string& what) {
    detail << (detail.str().empty() ? "" : "; ") << what;
  }
};

BraidWord random_word(std::mt19937_64& rng, int max_len, int max_idx, Presentation p) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, max_idx);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> v;
  int L = len(rng);
  for (int i = 0; i < L; ++i) v.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return p == Presentation::Artin ? BraidWord::sigma(v) : BraidWord::gamma(v);
}

// 1. presentation theorem suite
Check criterion_presentations(uint64_t seed) {
  Check c;
  size_t relations = 0;
  for (RelationKind kind : {RelationKind::EB, RelationKind::EBtilde,
                            RelationKind::SergiescuPair, RelationKind::SergiescuTriple}) {
    for (int n = 3; n <= 8; ++n) {
      for (const auto& rel : relation_instances(kind, n)) {
        ++relations;
        bool garside_ok = equal(rel.lhs, rel.rhs);
        BraidWord ls = rel.lhs.presentation() == Presentation::Artin ? rel.lhs
                                                                     : gamma_to_sigma(rel.lhs);
        BraidWord rs = rel.rhs.presentation() == Presentation::Artin ? rel.rhs
                                                                     : gamma_to_sigma(rel.rhs);
        bool handle_ok = handle_reduce(concat(ls, invert(rs))).empty();
        if (!garside_ok || !handle_ok) {
          c.require(false, "relation instance failed in B_" + std::to_string(n));
          return c;
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int it = 0; it < 5000; ++it) {
    BraidWord w = random_word(rng, 20, 7, Presentation::Artin);
    if (!equal(gamma_to_sigma(sigma_to_gamma(w)), w)) {
      c.require(false, "sigma->gamma->sigma round trip failed");
      return c;
    }
  }
  for (int it = 0; it < 5000; ++it) {
    BraidWord g = random_word(rng, 20, 7, Presentation::SqrtFree);
    if (!equal(sigma_to_gamma(gamma_to_sigma(g)), g)) {
      c.require(false, "gamma->sigma->gamma round trip failed");
      return c;
    }
  }
  c.note(std::to_string(relations) + " relation instances, 10000 round trips");
  return c;
}

// 2. garside identities
Check criterion_garside_identities(uint64_t) {
  Check c;
  for (int n = 2; n <= 6; ++n) {
    BraidWord delta = fundamental_braid(FundamentalKind::delta, n);
    BraidWord big = fundamental_braid(FundamentalKind::Delta, n);
    BraidWord delta_pow(Presentation::Artin);
    for (int k = 0; k < n; ++k) delta_pow = concat(delta_pow, delta);
    c.require(equal(delta_pow, concat(big, big)),
              "delta_" + std::to_string(n) + "^n != Delta^2");
    c.require(equal(fundamental_braid(FundamentalKind::Delta_in_gamma, n), big),
              "gamma form of Delta_" + std::to_string(n));
  }
  for (int m = 2; m <= 8; ++m)
    c.require(equal(fundamental_braid(FundamentalKind::pyramid_up, m),
                    fundamental_braid(FundamentalKind::pyramid_down, m)),
              "pyramid " + std::to_string(m));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      if (n == m || n == m + 1) continue;
      c.require(descending_product_commutation(n, m),
                "descending-product commutation at n=" + std::to_string(n) + ", m=" +
                    std::to_string(m));
    }
  c.note("delta^n = Delta^2 (n<=6), pyramids (m<=8), commutation grid (n,m<=8)");
  return c;
}

// 3. dual-oracle agreement
Check criterion_dual_oracle(uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed + 1);
  int trivial_count = 0;
  for (int it = 0; it < 10000; ++it) {
    BraidWord w = random_word(rng, 30, 6, Presentation::Artin);
    bool nf = is_trivial(w);
    bool hr = handle_reduce(w).empty();
    if (nf != hr) {
      c.require(false, "oracle disagreement on " + format_word(w));
      return c;
    }
    trivial_count += nf ? 1 : 0;
  }
  c.note("10000 words, " + std::to_string(trivial_count) + " trivial, oracles agree");
  return c;
}

// 4. total width
Check criterion_total_width(uint64_t seed) {
  Check c;
  c.require(total_width(BraidWord::sigma({6, -7, 9, 9})) == 9, "tw(s6 s7^-1 s9^2) != 9");
  std::mt19937_64 rng(seed + 2);
  int done = 0;
  while (done < 1000) {
    BraidWord w = random_word(rng, 16, 4, Presentation::Artin);
    if (is_trivial(w)) continue;
    int tw = total_width(w);
    if (total_width(m_shift(w, 1)) != tw + 1) {
      c.require(false, "tw increment failed on " + format_word(w));
      return c;
    }
    ++done;
  }
  c.note("nine-strand fixture and increment law on 1000 nontrivial words");
  return c;
}

// 5. trace witnesses, exact mode
Check criterion_traces(uint64_t) {
  Check c;
  c.require(trace(ExactElement::from_word(BraidWord::sigma({1, 2, 1, -2, -1, -2}))) ==
                RatComplex(1),
            "trace(L_w1) != 1");
  c.require(trace(ExactElement::from_word(BraidWord::sigma({1, 3, 1, -3, -1, -3}))) ==
                RatComplex(0),
            "trace(L_w2) != 0");
  c.require(trace(ExactElement::from_word(BraidWord::gamma({3, 2, 1, 3, -2, -3, -1, -2}))) ==
                RatComplex(1),
            "gamma witness trace != 1");
  c.require(trace(ExactElement::from_word(BraidWord::gamma({3, 1, 2, 3, -1, -3, -2, -1}))) ==
                RatComplex(0),
            "swapped gamma witness trace != 0");
  ExactElement g = ExactElement::from_word(BraidWord::gamma({1}));
  ExactElement p = ExactElement::unit();
  for (int k = 1; k <= 6; ++k) {
    p = mul(p, g);
    c.require(trace(p) == RatComplex(0), "Haar power k=" + std::to_string(k));
  }
  c.note("w1/w2, band-generator witness pair, Haar powers 1..6, exact rationals");
  return c;
}

// 6. symmetry battery
Check criterion_symmetry(uint64_t) {
  Check c;
  SequenceSpec beta{SequenceKind::GammaBeta, {}};
  SequenceSpec artin{SequenceKind::ArtinAlpha, {}};
  auto gb = SequenceSpec::default_battery(SequenceKind::GammaBeta);
  auto ab = SequenceSpec::default_battery(SequenceKind::ArtinAlpha);

  SymmetryReport beta_order = check_symmetry(beta, EquivalenceKind::order, 6, 4, gb);
  c.require(beta_order.pass, "GammaBeta order-equivalence scan found a violation");

  SymmetryReport artin_order = check_symmetry(artin, EquivalenceKind::order, 6, 3, ab);
  c.require(!artin_order.pass, "ArtinAlpha unexpectedly spreadable");
  // the order-6 commutator witness pair evaluates to 1 vs 0
  ExactElement sg = ExactElement::from_word(BraidWord::sigma({1}));
  ExactElement sgi = ExactElement::from_word(BraidWord::sigma({-1}));
  MomentQuery w1q{IndexTuple{{1, 2, 1, 2, 1, 2}}, {sg, sg, sg, sgi, sgi, sgi}};
  MomentQuery w2q{IndexTuple{{1, 3, 1, 3, 1, 3}}, {sg, sg, sg, sgi, sgi, sgi}};
  c.require(moment(artin, w1q) == RatComplex(1), "order-6 witness moment (1,2,1,2,1,2) != 1");
  c.require(moment(artin, w2q) == RatComplex(0), "order-6 witness moment (1,3,1,3,1,3) != 0");
  if (!artin_order.witnesses.empty()) {
    const auto& w = artin_order.witnesses.front();
    std::ostringstream os;
    os << "first ArtinAlpha counterexample at order " << w.lhs.entries.size();
    c.note(os.str());
  }

  c.require(check_symmetry(artin, EquivalenceKind::translation, 5, 4, ab).pass,
            "ArtinAlpha stationarity");
  c.require(check_symmetry(beta, EquivalenceKind::translation, 5, 4, gb).pass,
            "GammaBeta stationarity");

  SymmetryReport beta_sym = check_symmetry(beta, EquivalenceKind::symmetric, 8, 3, gb);
  c.require(!beta_sym.pass, "GammaBeta unexpectedly exchangeable");
  ExactElement gg = ExactElement::from_word(BraidWord::gamma({1}));
  ExactElement ggi = ExactElement::from_word(BraidWord::gamma({-1}));
  MomentQuery gq1{IndexTuple{{2, 1, 0, 2, 1, 2, 0, 1}}, {gg, gg, gg, gg, ggi, ggi, ggi, ggi}};
  MomentQuery gq2{IndexTuple{{2, 0, 1, 2, 0, 2, 1, 0}}, {gg, gg, gg, gg, ggi, ggi, ggi, ggi}};
  c.require(moment(beta, gq1) == RatComplex(1), "band witness moment != 1");
  c.require(moment(beta, gq2) == RatComplex(0), "value-swapped band witness moment != 0");
  if (!beta_sym.witnesses.empty()) {
    const auto& w = beta_sym.witnesses.front();
    std::ostringstream os;
    os << "first GammaBeta exchangeability counterexample at order " << w.lhs.entries.size();
    c.note(os.str());
  }
  return c;
}

// 7. kesten cross-check
Check criterion_kesten(uint64_t) {
  Check c;
  KestenComparison cmp = compare_with_kesten(12);
  c.require(cmp.match, "series coefficients do not match walk counts");
  const int64_t expect[4] = {1, 4, 28, 232};
  for (int k = 0; k < 4; ++k) {
    c.require(cmp.series_coefficients[k] == BigInt(expect[k]),
              "coefficient at z^" + std::to_string(2 * k));
    c.require(cmp.walk_counts[k] == BigInt(expect[k]),
              "walk count at n=" + std::to_string(2 * k));
  }
  for (int n = 0; n <= 8; ++n)
    c.require(count_trivial_words_raw(WalkGroup::F2, n) ==
                  count_trivial_words(WalkGroup::F2, n),
              "raw enumeration mismatch at n=" + std::to_string(n));
  c.note("closed form = DP counts for n <= 12; raw 4^n oracle for n <= 8");
  return c;
}

// 8. braided laplacian
Check criterion_laplacian(uint64_t) {
  Check c;
  auto b3 = count_trivial_words_upto(WalkGroup::B3_gamma, 10);
  auto f2 = count_trivial_words_upto(WalkGroup::F2, 10);
  for (int n = 0; n <= 4; ++n)
    c.require(b3[n] == f2[n], "counts differ at n=" + std::to_string(n));
  c.require(f2[6] < b3[6], "no strict excess at n=6");
  for (int n = 6; n <= 10; n += 2)
    c.require(!(b3[n] < f2[n]), "B3 count below F2 at n=" + std::to_string(n));
  auto sq = count_trivial_words_upto(WalkGroup::B3_gamma_squared, 10);
  for (int n = 0; n <= 10; ++n)
    c.require(sq[n] == f2[n], "squared-generator count differs at n=" + std::to_string(n));
  for (int n = 0; n <= 8; ++n)
    c.require(count_trivial_words_raw(WalkGroup::B3_gamma, n) == b3[n],
              "B3 raw oracle mismatch at n=" + std::to_string(n));
  c.note("B3 = F2 to n=4, excess " + (b3[6] - f2[6]).to_string() +
         " at n=6, squared generators free to n=10");
  return c;
}

// 9. gaussian representation
Check criterion_gaussian(uint64_t) {
  Check c;
  struct Config {
    int p, n;
  };
  for (Config cfg : {Config{2, 8}, Config{3, 5}, Config{4, 4}}) {
    GaussianRep rep = build_gaussian(cfg.p, cfg.n);  // validates all relations at 1e-9
    BraidRelationReport rel = check_braid_relations(rep.u);
    c.require(rel.pass(1e-9), "braid relation residuals at p=" + std::to_string(cfg.p));
    DenseMatrix moved = rep.u[0] * rep.e[0] * rep.u[0].adjoint();
    c.require(DenseMatrix::normalized_distance(moved, rep.e[1]) < 1e-9,
              "Ad(u1)(e0) != e1 at p=" + std::to_string(cfg.p));
    auto [t12, t21] = gaussian_nonexchangeability_trace(cfg.p, 3);
    std::complex<double> w2 = rep.omega * rep.omega;
    c.require(std::abs(t12 - w2) < 1e-9, "tr(e1 e2 e1* e2*) != omega^2");
    c.require(std::abs(t21 - std::conj(w2)) < 1e-9, "tr(e2 e1 e2* e1*) != omega^-2");
    c.require((std::abs(t12 - t21) > 1e-6) == (cfg.p > 2), "distinctness iff p > 2");
    for (const DenseMatrix& e : rep.e) {
      DenseMatrix pw = DenseMatrix::identity(e.dim());
      for (int k = 1; k < cfg.p; ++k) {
        pw = pw * e;
        c.require(std::abs(pw.normalized_trace()) < 1e-9, "spectrum not uniform");
      }
    }
  }
  // large-dimension spot check near the budget
  GaussianRep big = build_gaussian(2, 10);  // dim 1024
  DenseMatrix lhs = big.u[0] * big.u[1] * big.u[0];
  DenseMatrix rhs = big.u[1] * big.u[0] * big.u[1];
  c.require(DenseMatrix::normalized_distance(lhs, rhs) < 1e-9, "(B1) residual at dim 1024");
  DenseMatrix l2 = big.u[0] * big.u[2], r2 = big.u[2] * big.u[0];
  c.require(DenseMatrix::normalized_distance(l2, r2) < 1e-9, "(B2) residual at dim 1024");
  DenseMatrix moved = big.u[0] * big.e[0] * big.u[0].adjoint();
  c.require(DenseMatrix::normalized_distance(moved, big.e[1]) < 1e-9, "Ad at dim 1024");
  bool threw = false;
  try {
    build_gaussian(2, 13);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  c.require(threw, "dimension budget not enforced");
  c.note("p in {2,3,4} full battery (dims 256/243/256); spot checks at dim 1024");
  return c;
}

// 10. R-matrix suite
Check criterion_rmatrix(uint64_t) {
  Check c;
  using cd = std::complex<double>;
  for (cd w : {cd{1, 0}, cd{-1, 0}, cd{0, 1}}) {
    c.require(check_ybe(r_matrix_omega(w), 1e-9), "YBE failed");
    auto us = r_matrix_braid_unitaries(r_matrix_omega(w), 4);
    c.require(check_braid_relations(us).pass(1e-9), "braid relations from R-breve");
  }
  auto us = r_matrix_braid_unitaries_mixed({cd{1, 0}, cd{-1, 0}}, 3);
  DenseMatrix x(2);
  x.at(0, 1) = {1.0, 0.0};
  x.at(1, 0) = {1.0, 0.0};
  DenseMatrix one2 = DenseMatrix::identity(2);
  DenseMatrix x0 = DenseMatrix::kron(DenseMatrix::kron(x, one2), one2);
  DenseMatrix a1 = product_endomorphism_iterated(us, {}, x0, 1);
  DenseMatrix a2 = product_endomorphism_iterated(us, {}, x0, 2);
  DenseMatrix s1 = x0 * a1, s2 = x0 * a2;
  DenseMatrix id8 = DenseMatrix::identity(8);
  c.require(DenseMatrix::normalized_distance(s1 * s1, id8) < 1e-9, "[x alpha(x)]^2 != 1");
  c.require(DenseMatrix::normalized_distance(s2 * s2, cd{-1, 0} * id8) < 1e-9,
            "[x alpha^2(x)]^2 != -1");
  cd m1 = (s1 * s1).normalized_trace();
  cd m2 = (s2 * s2).normalized_trace();
  c.require(std::abs(m1 - cd{1, 0}) < 1e-9 && std::abs(m2 - cd{-1, 0}) < 1e-9,
            "4th order moments not 1 vs -1");
  c.note("YBE for omega in {1,-1,i}; mixed shift 4th-order failure 1 vs -1");
  return c;
}

// 11. hecke relations
Check criterion_hecke(uint64_t) {
  Check c;
  for (int n = 3; n <= 5; ++n) {
    HeckeRelationReport rep = hecke_check_relations(n);
    c.require(rep.quadratic, "quadratic relation in H_" + std::to_string(n));
    c.require(rep.commutation, "commutation in H_" + std::to_string(n));
    c.require(rep.braid, "braid relation in H_" + std::to_string(n));
    c.require(rep.q1_degeneration, "q=1 degeneration in H_" + std::to_string(n));
  }
  c.note("three defining relations exact in H_n, n <= 5; q = 1 gives S_n");
  return c;
}

// 12. appendix shadows
Check criterion_appendix(uint64_t) {
  Check c;
  GaussianRep rep = build_gaussian(2, 6);
  size_t d = rep.e[0].dim();
  auto alg_range = [&](int lo, int hi) {  // alg(e_lo .. e_hi), scalars when empty
    if (lo > hi) return Subalgebra::scalars(d);
    std::vector<DenseMatrix> gens;
    for (int i = lo; i <= hi; ++i) gens.push_back(rep.e[i]);
    return Subalgebra::generated(d, gens);
  };
  // commuting-square grid: cells [alpha^{k-1}(M_{n-1}) c alpha^{k-1}(M_n);
  // alpha^k(M_{n-2}) c alpha^k(M_{n-1})] for n >= 1, k >= 1, n+k-1 <= 4;
  // alpha^j(M_i) = alg(e_j..e_{i+j})
  for (int n = 1; n + 0 <= 4; ++n) {
    for (int k = 1; n + k - 1 <= 4; ++k) {
      Subalgebra ambient = alg_range(k - 1, n + k - 1);
      FiniteProbSpace cell_space(d, ambient.basis);
      Subalgebra nn = alg_range(k, n + k - 2);
      Subalgebra n1 = alg_range(k - 1, n + k - 2);
      Subalgebra n2 = alg_range(k, n + k - 1);
      CommutingSquareReport sq = is_commuting_square(cell_space, nn, n1, n2);
      std::string tag = " at cell n=" + std::to_string(n) + ", k=" + std::to_string(k);
      c.require(sq.criterion_iv.pass, "criterion (iv)" + tag);
      c.require(sq.criterion_v.pass, "criterion (v)" + tag);
      c.require(sq.consistent(), "criteria disagree" + tag);
    }
  }
  // tower reconstruction margins: ambient alg(e_0..e_3), u-set n+2..4
  FiniteProbSpace ambient(d, {rep.e[0], rep.e[1], rep.e[2], rep.e[3]});
  for (int n = 0; n <= 3; ++n) {
    std::vector<DenseMatrix> uset;
    for (int k = n + 2; k <= 4; ++k) uset.push_back(rep.u[k - 1]);
    Subalgebra commutant = relative_commutant(ambient, uset);
    c.require(same_span(commutant, alg_range(0, n)),
              "commutant margin at n=" + std::to_string(n));
  }
  c.note("grid cells n+k-1 <= 4 pass (iv) == (v); commutant = alg(e_0..e_n) for n <= 3");
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, uint64_t seed) {
  struct Entry {
    int id;
    const char* name;
    double budget;
    Check (*fn)(uint64_t);
  };
  const Entry entries[] = {
      {1, "presentation theorem suite", 60, criterion_presentations},
      {2, "garside identities", 10, criterion_garside_identities},
      {3, "dual-oracle agreement", 120, criterion_dual_oracle},
      {4, "total width", 60, criterion_total_width},
      {5, "trace witnesses", 5, criterion_traces},
      {6, "symmetry battery", 300, criterion_symmetry},
      {7, "kesten cross-check", 60, criterion_kesten},
      {8, "braided laplacian", 300, criterion_laplacian},
      {9, "gaussian representation", 60, criterion_gaussian},
      {10, "r-matrix suite", 30, criterion_rmatrix},
      {11, "hecke relations", 30, criterion_hecke},
      {12, "appendix shadows", 120, criterion_appendix},
  };
  std::vector<CriterionResult> out;
  for (const Entry& e : entries) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    r.budget_seconds = e.budget;
    auto t0 = Clock::now();
    try {
      Check c = e.fn(seed);
      r.pass = c.ok;
      r.detail = c.detail.str();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_acceptance_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
  if (!r.detail.empty()) os << " (" << r.detail << ")";
  os.precision(2);
  os << " [" << std::fixed << r.seconds << " s, budget " << r.budget_seconds << " s]";
  return os.str();
}

}  // namespace braidprob
