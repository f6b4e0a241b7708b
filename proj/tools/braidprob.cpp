// braidprob: braid-group probability workbench. Batch-oriented, JSON on
// stdout; exit 0 on success, 1 on verification failure, 2 on usage errors.

#include <atomic>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidprob/acceptance.hpp"
#include "braidprob/bigint.hpp"
#include "braidprob/braid_word.hpp"
#include "braidprob/garside.hpp"
#include "braidprob/group_algebra.hpp"
#include "braidprob/laplacian.hpp"
#include "braidprob/matrix_rep.hpp"
#include "braidprob/ncprob.hpp"
#include "braidprob/random_sequence.hpp"

using json = nlohmann::json;
using namespace braidprob;

namespace {

std::string hex_key(const CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char ch : key) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 0xf]);
  }
  return out;
}

json word_json(const BraidWord& w) { return format_word(w); }

json nf_json(const BraidWord& w, std::optional<int> strands) {
  LeftNormalForm nf = normal_form(w, strands);
  json factors = json::array();
  for (const PermutationBraid& f : nf.factors) factors.push_back(f.image);
  return json{{"key", hex_key(canonical_key(w))},
              {"delta_power", nf.delta_power},
              {"factors", factors},
              {"strands", nf.strands},
              {"tw", total_width(w)}};
}

// integers inside the double-exact window print as JSON numbers, everything
// else as exact strings
json rational_json(const Rational& v) {
  if (v.is_integer()) {
    try {
      int64_t i = v.num().to_int64();
      if (i > -(1LL << 53) && i < (1LL << 53)) return json(i);
    } catch (const std::overflow_error&) {
    }
  }
  return json(v.to_string());
}

json bigint_json(const BigInt& v) { return rational_json(Rational(v)); }

json ratcomplex_json(const RatComplex& v) {
  return json{{"re", v.re.to_string()}, {"im", v.im.to_string()}};
}

json verdict_json(const Verdict& v) {
  return json{{"pass", v.pass}, {"flagged", v.flagged}, {"residual", v.residual}};
}

EquivalenceKind parse_rel(const std::string& s) {
  if (s == "order") return EquivalenceKind::order;
  if (s == "symmetric") return EquivalenceKind::symmetric;
  if (s == "translation" || s == "stationary") return EquivalenceKind::translation;
  throw CLI::ValidationError("--rel must be order|symmetric|translation");
}

SequenceKind parse_spec(const std::string& s) {
  if (s == "gamma-beta") return SequenceKind::GammaBeta;
  if (s == "artin-alpha") return SequenceKind::ArtinAlpha;
  if (s == "inverse-rho") return SequenceKind::InverseRho;
  throw CLI::ValidationError("--spec must be gamma-beta|artin-alpha|inverse-rho");
}

WalkGroup parse_group(const std::string& s) {
  if (s == "b3") return WalkGroup::B3_gamma;
  if (s == "f2") return WalkGroup::F2;
  if (s == "b3sq") return WalkGroup::B3_gamma_squared;
  if (s == "z1") return WalkGroup::Z_single;
  throw CLI::ValidationError("--group must be b3|f2|b3sq|z1");
}

ExactElement battery_token(SequenceKind kind, const std::string& tok) {
  auto battery = SequenceSpec::default_battery(kind);
  if (tok == "g") return battery[0];
  if (tok == "ginv") return battery[1];
  if (tok == "gsq") return battery[2];
  if (tok == "mix") return battery[3];
  if (tok.rfind("sigma:", 0) == 0 || tok.rfind("gamma:", 0) == 0)
    return ExactElement::from_word(parse_word(tok));
  throw CLI::ValidationError("argument tokens: g|ginv|gsq|mix or a word literal");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

DenseMatrix matrix_from_json(const json& j) {
  size_t dim = j.at("dim").get<size_t>();
  const json& entries = j.at("entries");
  if (entries.size() != dim * dim)
    throw std::invalid_argument("matrix file: entries size != dim^2");
  DenseMatrix m(dim);
  for (size_t i = 0; i < entries.size(); ++i)
    m.data()[i] = {entries[i].at("re").get<double>(), entries[i].at("im").get<double>()};
  return m;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_verify(const std::vector<int>& ids, uint64_t seed, int jobs) {
  std::vector<int> all = ids;
  if (all.empty())
    for (int i = 1; i <= 12; ++i) all.push_back(i);
  std::vector<CriterionResult> results(all.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= all.size()) return;
      auto r = run_acceptance({all[k]}, seed);
      if (!r.empty()) results[k] = r.front();
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  json out;
  out["criteria"] = json::array();
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    std::cerr << format_acceptance_line(r) << "\n";
    out["criteria"].push_back(json{{"id", r.id},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"seconds", r.seconds},
                                   {"detail", r.detail}});
    all_pass = all_pass && r.pass;
  }
  out["all_pass"] = all_pass;
  emit(out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-group probability workbench"};
  app.require_subcommand(1);
  uint64_t seed = 20080905;
  app.add_option("--seed", seed, "seed for randomized property corpora");

  std::string word_text, word_text2, to_pres = "sigma";
  int strands_opt = 0, shift_k = 1, shift_m = 0, orbit_m = 1, orbit_k = 5;

  auto* reduce = app.add_subcommand("reduce", "free reduction");
  reduce->add_option("word", word_text)->required();

  auto* nf = app.add_subcommand("nf", "left-greedy normal form");
  nf->add_option("word", word_text)->required();
  nf->add_option("--strands", strands_opt);

  auto* trivial = app.add_subcommand("trivial", "word problem: is the braid trivial");
  trivial->add_option("word", word_text)->required();

  auto* equal_cmd = app.add_subcommand("equal", "equality of two braids");
  equal_cmd->add_option("word1", word_text)->required();
  equal_cmd->add_option("word2", word_text2)->required();

  auto* tw_cmd = app.add_subcommand("tw", "total width");
  tw_cmd->add_option("word", word_text)->required();

  auto* orbit = app.add_subcommand("orbit", "distinct canonical keys of sh_m iterates");
  orbit->add_option("word", word_text)->required();
  orbit->add_option("--m", orbit_m);
  orbit->add_option("--k", orbit_k);

  auto* convert = app.add_subcommand("convert", "presentation conversion");
  convert->add_option("word", word_text)->required();
  convert->add_option("--to", to_pres, "sigma|gamma");

  auto* shift_cmd = app.add_subcommand("shift", "index shift or m-shift");
  shift_cmd->add_option("word", word_text)->required();
  shift_cmd->add_option("--k", shift_k, "plain shift amount");
  shift_cmd->add_option("--m", shift_m, "use sh_m instead when m >= 1");

  std::string rel_kind = "eb";
  int rel_n = 4;
  auto* relcheck = app.add_subcommand("relcheck", "validate presentation relations");
  relcheck->add_option("--kind", rel_kind, "b1|b2|eb|ebtilde|sergiescu-pair|sergiescu-triple");
  relcheck->add_option("--n", rel_n);

  std::string sym_spec = "gamma-beta", sym_rel = "order";
  int sym_order = 4, sym_bound = 3;
  auto* symmetry = app.add_subcommand("symmetry", "distributional symmetry scan");
  symmetry->add_option("--spec", sym_spec);
  symmetry->add_option("--rel", sym_rel);
  symmetry->add_option("--max-order", sym_order);
  symmetry->add_option("--bound", sym_bound);

  std::string mom_tuple, mom_args;
  bool mom_expand = false;
  auto* moment_cmd = app.add_subcommand("moment", "mixed moment of a sequence");
  moment_cmd->add_option("--spec", sym_spec);
  moment_cmd->add_option("--tuple", mom_tuple, "e.g. \"0 1 0 1\"")->required();
  moment_cmd->add_option("--args", mom_args, "comma list: g|ginv|gsq|mix or word literals")
      ->required();
  moment_cmd->add_flag("--expand", mom_expand, "include the product element");

  std::string walk_group = "f2";
  int walk_max = 8;
  bool walk_raw = false;
  auto* walk = app.add_subcommand("walk", "trivial-word counts of the 4-letter walk");
  walk->add_option("--group", walk_group, "b3|f2|b3sq|z1");
  walk->add_option("--max-n", walk_max);
  walk->add_flag("--raw-oracle", walk_raw, "cross-check against 4^n enumeration (n <= 8)");

  int kesten_max = 12;
  auto* kesten = app.add_subcommand("kesten", "moment generating function expansion");
  kesten->add_option("--max-n", kesten_max);

  auto* rep = app.add_subcommand("rep", "finite-dimensional representations");
  rep->require_subcommand(1);
  int rep_p = 3, rep_strands = 3, rep_legs = 4, hecke_n = 4;
  bool rep_verify = false;
  std::string ybe_file, ybe_omega = "1,0", perturb_mode = "xerox";
  auto* rep_gauss = rep->add_subcommand("gaussian", "clock/shift representation");
  rep_gauss->add_option("--p", rep_p);
  rep_gauss->add_option("--strands", rep_strands);
  rep_gauss->add_flag("--verify", rep_verify);
  auto* rep_ybe = rep->add_subcommand("ybe", "yang-baxter check");
  rep_ybe->add_option("--matrix", ybe_file, "JSON file {dim, entries: [{re, im}...]}");
  rep_ybe->add_option("--omega", ybe_omega, "re,im for the built-in 4x4 family");
  auto* rep_hecke = rep->add_subcommand("hecke", "T-basis relation report");
  rep_hecke->add_option("--n", hecke_n);
  auto* rep_perturb = rep->add_subcommand("perturb", "cocycle perturbation diagnostics");
  rep_perturb->add_option("--legs", rep_legs);
  rep_perturb->add_option("--mode", perturb_mode, "xerox|scalar-i|identity");

  auto* ncp = app.add_subcommand("ncp", "finite noncommutative probability checks");
  ncp->require_subcommand(1);
  int ncp_p = 2, ncp_strands = 6, ncp_n = 1, ncp_shift = 3;
  bool ncp_ordered = false;
  auto* ncp_square = ncp->add_subcommand("square", "commuting-square grid");
  ncp_square->add_option("--p", ncp_p);
  ncp_square->add_option("--strands", ncp_strands);
  auto* ncp_indep = ncp->add_subcommand("independence", "C-independence of shifted blocks");
  ncp_indep->add_option("--p", ncp_p);
  ncp_indep->add_option("--strands", ncp_strands);
  auto* ncp_comm = ncp->add_subcommand("commutant", "relative commutant margins");
  ncp_comm->add_option("--p", ncp_p);
  ncp_comm->add_option("--strands", ncp_strands);
  ncp_comm->add_option("--n", ncp_n);
  auto* ncp_bern = ncp->add_subcommand("bernoulli", "bernoulli factorization check");
  ncp_bern->add_option("--p", ncp_p);
  ncp_bern->add_option("--strands", ncp_strands);
  ncp_bern->add_option("--max-shift", ncp_shift);
  ncp_bern->add_flag("--ordered", ncp_ordered);

  std::string verify_ids;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance criteria");
  verify->add_option("--criteria", verify_ids, "subset, e.g. \"1 2 7\"");
  verify->add_option("--jobs", jobs, "parallel criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*reduce) {
      emit(json{{"word", word_json(free_reduce(parse_word(word_text)))}});
    } else if (*nf) {
      std::optional<int> n;
      if (strands_opt > 0) n = strands_opt;
      emit(nf_json(parse_word(word_text), n));
    } else if (*trivial) {
      emit(json{{"trivial", is_trivial(parse_word(word_text))}});
    } else if (*equal_cmd) {
      emit(json{{"equal", equal(parse_word(word_text), parse_word(word_text2))}});
    } else if (*tw_cmd) {
      emit(json{{"tw", total_width(parse_word(word_text))}});
    } else if (*orbit) {
      emit(json{{"distinct", shifted_orbit_distinct(parse_word(word_text), orbit_m, orbit_k)},
                {"k", orbit_k},
                {"m", orbit_m}});
    } else if (*convert) {
      BraidWord w = parse_word(word_text);
      BraidWord out = to_pres == "gamma"
                          ? (w.presentation() == Presentation::SqrtFree ? w : sigma_to_gamma(w))
                          : (w.presentation() == Presentation::Artin ? w : gamma_to_sigma(w));
      emit(json{{"word", word_json(out)}});
    } else if (*shift_cmd) {
      BraidWord w = parse_word(word_text);
      BraidWord out = shift_m >= 1 ? m_shift(w, shift_m) : shift(w, shift_k);
      emit(json{{"word", word_json(out)}});
    } else if (*relcheck) {
      RelationKind kind;
      if (rel_kind == "b1")
        kind = RelationKind::B1;
      else if (rel_kind == "b2")
        kind = RelationKind::B2;
      else if (rel_kind == "eb")
        kind = RelationKind::EB;
      else if (rel_kind == "ebtilde")
        kind = RelationKind::EBtilde;
      else if (rel_kind == "sergiescu-pair")
        kind = RelationKind::SergiescuPair;
      else if (rel_kind == "sergiescu-triple")
        kind = RelationKind::SergiescuTriple;
      else
        throw CLI::ValidationError("unknown relation kind");
      auto rels = relation_instances(kind, rel_n);
      bool all = true;
      for (const auto& r : rels) all = all && equal(r.lhs, r.rhs);
      emit(json{{"kind", rel_kind}, {"n", rel_n}, {"instances", rels.size()}, {"all_valid", all}});
      return all ? 0 : 1;
    } else if (*symmetry) {
      SequenceSpec spec{parse_spec(sym_spec), {}};
      auto battery = SequenceSpec::default_battery(spec.kind);
      SymmetryReport report =
          check_symmetry(spec, parse_rel(sym_rel), sym_order, sym_bound, battery);
      json witnesses = json::array();
      for (const auto& w : report.witnesses)
        witnesses.push_back(json{{"lhs", w.lhs.entries},
                                 {"rhs", w.rhs.entries},
                                 {"battery_combo", w.battery_combo},
                                 {"lhs_value", ratcomplex_json(w.lhs_value)},
                                 {"rhs_value", ratcomplex_json(w.rhs_value)}});
      emit(json{{"pass", report.pass},
                {"classes_checked", report.classes_checked},
                {"comparisons", report.comparisons},
                {"witnesses", witnesses}});
      return 0;
    } else if (*moment_cmd) {
      SequenceSpec spec{parse_spec(sym_spec), {}};
      MomentQuery q;
      q.tuple.entries = parse_int_list(mom_tuple);
      std::istringstream in(mom_args);
      std::string tok;
      while (std::getline(in, tok, ','))
        q.arguments.push_back(battery_token(spec.kind, tok));
      if (q.tuple.entries.size() != q.arguments.size())
        throw std::invalid_argument("moment: tuple/argument length mismatch");
      json out{{"value", ratcomplex_json(moment(spec, q))}};
      if (mom_expand) {
        ExactElement acc = ExactElement::unit();
        for (size_t k = 0; k < q.arguments.size(); ++k)
          acc = mul(acc, iota_image(spec, q.tuple.entries[k], q.arguments[k]));
        json terms = json::array();
        for (const auto& [key, term] : acc.terms())
          terms.push_back(json{{"word", format_word(term.rep)},
                               {"re", term.coeff.re.to_double()},
                               {"im", term.coeff.im.to_double()}});
        out["element"] = terms;
      }
      emit(out);
    } else if (*walk) {
      WalkGroup group = parse_group(walk_group);
      auto counts = count_trivial_words_upto(group, walk_max);
      json jc = json::object();
      for (size_t n = 0; n < counts.size(); ++n)
        jc[std::to_string(n)] = bigint_json(counts[n]);
      json out{{"group", walk_group}, {"counts", jc}};
      if (walk_raw) {
        bool match = true;
        for (int n = 0; n <= std::min(walk_max, 8); ++n)
          match = match && count_trivial_words_raw(group, n) == counts[n];
        out["raw_oracle_match"] = match;
        if (!match) {
          emit(out);
          return 1;
        }
      }
      emit(out);
    } else if (*kesten) {
      PowerSeries s = kesten_series(kesten_max);
      json coeffs = json::array();
      for (const Rational& c : s.coefficients) coeffs.push_back(rational_json(c));
      emit(json{{"coefficients", coeffs}});
    } else if (*rep_gauss) {
      GaussianRep g = build_gaussian(rep_p, rep_strands);
      BraidRelationReport rel = check_braid_relations(g.u);
      json out{{"p", g.p},
               {"strands", g.strands},
               {"dim", g.e[0].dim()},
               {"omega", json{{"re", g.omega.real()}, {"im", g.omega.imag()}}},
               {"residuals", json{{"b1", rel.max_b1_residual},
                                  {"b2", rel.max_b2_residual},
                                  {"unitarity", rel.max_unitarity_residual}}}};
      if (rep_verify) {
        DenseMatrix moved = g.u[0] * g.e[0] * g.u[0].adjoint();
        out["ad_u1_e0_is_e1"] = DenseMatrix::normalized_distance(moved, g.e[1]) < 1e-9;
        auto [t12, t21] = gaussian_nonexchangeability_trace(rep_p, 3);
        out["trace_e1e2"] = json{{"re", t12.real()}, {"im", t12.imag()}};
        out["trace_e2e1"] = json{{"re", t21.real()}, {"im", t21.imag()}};
        out["traces_distinct"] = std::abs(t12 - t21) > 1e-6;
      }
      emit(out);
      return rel.pass(1e-9) ? 0 : 1;
    } else if (*rep_ybe) {
      DenseMatrix r;
      if (!ybe_file.empty()) {
        std::ifstream in(ybe_file);
        if (!in) throw std::invalid_argument("cannot open " + ybe_file);
        json j;
        in >> j;
        r = matrix_from_json(j);
      } else {
        double re = 1, im = 0;
        std::sscanf(ybe_omega.c_str(), "%lf,%lf", &re, &im);
        r = r_matrix_omega({re, im});
      }
      bool ok = check_ybe(r);
      emit(json{{"ybe", ok}});
      return ok ? 0 : 1;
    } else if (*rep_hecke) {
      HeckeRelationReport hr = hecke_check_relations(hecke_n);
      emit(json{{"n", hecke_n},
                {"quadratic", hr.quadratic},
                {"commutation", hr.commutation},
                {"braid", hr.braid},
                {"q1_degeneration", hr.q1_degeneration}});
      return hr.pass() ? 0 : 1;
    } else if (*rep_perturb) {
      auto us = r_matrix_braid_unitaries(r_matrix_omega({1, 0}), rep_legs);
      size_t d = us[0].dim();
      DenseMatrix g = DenseMatrix::identity(d);
      if (perturb_mode == "xerox") {
        DenseMatrix g0(2);
        g0.at(0, 0) = {1.0, 0.0};
        g0.at(1, 1) = {0.0, 1.0};
        g = g0;
        for (int leg = 1; leg < rep_legs; ++leg) g = DenseMatrix::kron(g, g0);
      } else if (perturb_mode == "scalar-i") {
        g = std::complex<double>{0.0, 1.0} * g;
      } else if (perturb_mode != "identity") {
        throw CLI::ValidationError("--mode must be xerox|scalar-i|identity");
      }
      PerturbedRep pr = perturbed_rep(us, g);
      emit(json{{"mode", perturb_mode},
                {"relations_pass", pr.relations.pass(1e-9)},
                {"ad_period", pr.ad_period},
                {"non_generating_flag", pr.non_generating_flag}});
    } else if (*ncp_square) {
      GaussianRep g = build_gaussian(ncp_p, ncp_strands);
      size_t d = g.e[0].dim();
      auto alg_range = [&](int lo, int hi) {
        if (lo > hi) return Subalgebra::scalars(d);
        std::vector<DenseMatrix> gens;
        for (int i = lo; i <= hi; ++i) gens.push_back(g.e[i]);
        return Subalgebra::generated(d, gens);
      };
      json cells = json::array();
      bool all = true;
      int top = ncp_strands - 2;
      for (int n = 1; n <= top; ++n)
        for (int k = 1; n + k - 1 <= top; ++k) {
          FiniteProbSpace cell(d, alg_range(k - 1, n + k - 1).basis);
          CommutingSquareReport sq = is_commuting_square(
              cell, alg_range(k, n + k - 2), alg_range(k - 1, n + k - 2),
              alg_range(k, n + k - 1));
          all = all && sq.pass() && sq.consistent();
          cells.push_back(json{{"n", n},
                               {"k", k},
                               {"criterion_iv", verdict_json(sq.criterion_iv)},
                               {"criterion_v", verdict_json(sq.criterion_v)}});
        }
      emit(json{{"cells", cells}, {"all_pass", all}});
      return all ? 0 : 1;
    } else if (*ncp_indep) {
      GaussianRep g = build_gaussian(ncp_p, ncp_strands);
      size_t d = g.e[0].dim();
      FiniteProbSpace space(d, g.e);
      Subalgebra a0 = Subalgebra::generated(d, {g.e[0]});
      Subalgebra a1 = Subalgebra::generated(d, {g.u[0] * g.e[0] * g.u[0].adjoint()});
      IndependenceReport ir = check_independence(space, Subalgebra::scalars(d), a0, a1);
      emit(json{{"verdict", verdict_json(ir.verdict)}, {"pairs", ir.pairs_checked}});
      return ir.verdict.pass ? 0 : 1;
    } else if (*ncp_comm) {
      GaussianRep g = build_gaussian(ncp_p, ncp_strands);
      size_t d = g.e[0].dim();
      int top_leg = ncp_strands - 3;
      std::vector<DenseMatrix> ambient_gens;
      for (int i = 0; i <= top_leg; ++i) ambient_gens.push_back(g.e[i]);
      FiniteProbSpace ambient(d, ambient_gens);
      std::vector<DenseMatrix> uset;
      for (int k = ncp_n + 2; k <= top_leg + 1; ++k) uset.push_back(g.u[k - 1]);
      Subalgebra commutant = relative_commutant(ambient, uset);
      std::vector<DenseMatrix> expect_gens;
      for (int i = 0; i <= ncp_n; ++i) expect_gens.push_back(g.e[i]);
      bool match = same_span(commutant, Subalgebra::generated(d, expect_gens));
      emit(json{{"n", ncp_n},
                {"commutant_dim", commutant.span_dim()},
                {"equals_alg_e0_to_n", match}});
      return match ? 0 : 1;
    } else if (*ncp_bern) {
      GaussianRep g = build_gaussian(ncp_p, ncp_strands);
      size_t d = g.e[0].dim();
      FiniteProbSpace space(d, g.e);
      Subalgebra gen = Subalgebra::generated(d, {g.e[0]});
      BernoulliReport br =
          bernoulli_factorization_check(space, g.u, {}, gen, ncp_shift, !ncp_ordered);
      emit(json{{"verdict", verdict_json(br.verdict)},
                {"ordered_only", br.order_only},
                {"pairs", br.pairs_checked}});
      return br.verdict.pass ? 0 : 1;
    } else if (*verify) {
      return run_verify(parse_int_list(verify_ids), seed, jobs);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
