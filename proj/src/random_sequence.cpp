#include "braidprob/random_sequence.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "braidprob/garside.hpp"

namespace braidprob {

namespace {

std::vector<int> sorted_distinct(const IndexTuple& t) {
  std::vector<int> v = t.entries;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_same_order(const IndexTuple& i, const IndexTuple& j) {
  if (i.entries.size() != j.entries.size())
    throw std::invalid_argument("index tuples: length mismatch");
  if (i.entries.empty()) throw std::invalid_argument("index tuples: length must be >= 1");
}

}  // namespace

bool equivalent(const IndexTuple& i, const IndexTuple& j, EquivalenceKind rel) {
  require_same_order(i, j);
  size_t n = i.entries.size();
  switch (rel) {
    case EquivalenceKind::translation: {
      long d = static_cast<long>(i.entries[0]) - j.entries[0];
      for (size_t k = 0; k < n; ++k)
        if (static_cast<long>(i.entries[k]) - j.entries[k] != d) return false;
      return true;
    }
    case EquivalenceKind::order:
    case EquivalenceKind::symmetric: {
      // the value map j(k) -> i(k) must be well defined and injective
      std::vector<std::pair<int, int>> map;
      for (size_t k = 0; k < n; ++k) {
        bool seen = false;
        for (auto& [from, to] : map) {
          if (from == j.entries[k]) {
            if (to != i.entries[k]) return false;
            seen = true;
          } else if (to == i.entries[k]) {
            return false;  // not injective
          }
        }
        if (!seen) map.emplace_back(j.entries[k], i.entries[k]);
      }
      if (rel == EquivalenceKind::symmetric) return true;
      for (const auto& [f1, t1] : map)
        for (const auto& [f2, t2] : map)
          if (f1 < f2 && t1 >= t2) return false;
      return true;
    }
  }
  return false;
}

namespace {

// Elementary move: the level set holding value `from` slides to the fresh
// adjacent value `to` (|from - to| = 1).
struct LevelMove {
  int from, to;
};

// Park every level above both images, then lower each into place; every
// single step targets a value not otherwise in the image.
std::vector<LevelMove> chain_moves(const IndexTuple& i, const IndexTuple& j) {
  std::vector<int> u = sorted_distinct(i), v = sorted_distinct(j);
  int r = static_cast<int>(u.size());
  int top = std::max(u.back(), v.back());
  std::vector<LevelMove> moves;
  for (int t = r - 1; t >= 0; --t)
    for (int x = u[t]; x < top + 1 + t; ++x) moves.push_back({x, x + 1});
  for (int t = 0; t < r; ++t)
    for (int x = top + 1 + t; x > v[t]; --x) moves.push_back({x, x - 1});
  return moves;
}

}  // namespace

std::vector<IndexTuple> order_equiv_chain(const IndexTuple& i, const IndexTuple& j) {
  if (!equivalent(i, j, EquivalenceKind::order))
    throw std::invalid_argument("order_equiv_chain: tuples are not order-equivalent");
  std::vector<IndexTuple> chain{i};
  if (i == j) return chain;
  IndexTuple cur = i;
  for (const LevelMove& m : chain_moves(i, j)) {
    for (int& e : cur.entries)
      if (e == m.from) e = m.to;
    chain.push_back(cur);
  }
  if (!(chain.back() == j)) throw std::logic_error("order_equiv_chain: chain did not land on j");
  return chain;
}

BraidWord implementing_braid(const IndexTuple& i, const IndexTuple& j) {
  if (!equivalent(i, j, EquivalenceKind::order))
    throw std::invalid_argument("implementing_braid: tuples are not order-equivalent");
  if (i == j) return BraidWord::sigma({});
  // raising l -> l+1 is rho(sigma_{l+1}); lowering l -> l-1 is rho(sigma_l^{-1});
  // moves compose on the left
  std::vector<int> letters;
  for (const LevelMove& m : chain_moves(i, j))
    letters.push_back(m.to > m.from ? m.from + 1 : -m.from);
  std::reverse(letters.begin(), letters.end());
  return free_reduce(BraidWord::sigma(letters));
}

std::vector<ExactElement> SequenceSpec::default_battery(SequenceKind kind) {
  BraidWord g = kind == SequenceKind::GammaBeta ? BraidWord::gamma({1}) : BraidWord::sigma({1});
  BraidWord ginv = invert(g);
  std::vector<ExactElement> battery;
  battery.push_back(ExactElement::from_word(g));
  battery.push_back(ExactElement::from_word(ginv));
  battery.push_back(ExactElement::from_word(concat(g, g)));
  ExactElement mix = ExactElement::from_word(g);
  mix.add_term(ginv, RatComplex(1));
  battery.push_back(mix);
  return battery;
}

namespace {

// a seed term must be a (possibly empty) power of the index-1 generator
int seed_exponent(const BraidWord& w) {
  BraidWord r = free_reduce(w);
  for (const Letter& l : r.letters())
    if (l.index != 1)
      throw std::invalid_argument("sequence spec: seed elements must live over generator 1");
  return static_cast<int>(exponent_sum(r));
}

// sigma-letter list of iota_v(g^e) for the given sequence kind
std::vector<int> iota_letters(SequenceKind kind, int v, int e) {
  std::vector<int> out;
  if (e == 0) return out;
  int s = e > 0 ? 1 : -1;
  switch (kind) {
    case SequenceKind::ArtinAlpha:
      for (int k = 0; k < std::abs(e); ++k) out.push_back(s * (v + 1));
      break;
    case SequenceKind::GammaBeta:
      for (int k = 1; k <= v; ++k) out.push_back(k);
      for (int k = 0; k < std::abs(e); ++k) out.push_back(s * (v + 1));
      for (int k = v; k >= 1; --k) out.push_back(-k);
      break;
    case SequenceKind::InverseRho:
      for (int k = v; k >= 1; --k) out.push_back(-k);
      for (int k = 0; k < std::abs(e); ++k) out.push_back(s);
      for (int k = 1; k <= v; ++k) out.push_back(k);
      break;
  }
  return out;
}

}  // namespace

ExactElement iota_image(const SequenceSpec& spec, int n, const ExactElement& x) {
  if (n < 0) throw std::invalid_argument("iota_image: n must be >= 0");
  ExactElement out;
  for (const auto& [key, term] : x.terms()) {
    int e = seed_exponent(term.rep);
    BraidWord w = free_reduce(BraidWord::sigma(iota_letters(spec.kind, n, e)));
    out.add_term(w, term.coeff);
  }
  return out;
}

ExactElement apply_spec_braid(const SequenceSpec& spec, const BraidWord& tau,
                              const ExactElement& x) {
  BraidWord t = tau.presentation() == Presentation::Artin ? tau : gamma_to_sigma(tau);
  switch (spec.kind) {
    case SequenceKind::ArtinAlpha:
      return ad(t, x);
    case SequenceKind::GammaBeta:
      return ad(shift(inv_map(t), 1), x);
    case SequenceKind::InverseRho:
      return ad(inv_map(t), x);
  }
  throw std::logic_error("apply_spec_braid: unknown kind");
}

RatComplex moment(const SequenceSpec& spec, const MomentQuery& q) {
  if (q.tuple.entries.size() != q.arguments.size())
    throw std::invalid_argument("moment: tuple/argument length mismatch");
  if (q.tuple.entries.empty()) throw std::invalid_argument("moment: empty query");
  ExactElement acc = ExactElement::unit();
  for (size_t k = 0; k < q.arguments.size(); ++k)
    acc = mul(acc, iota_image(spec, q.tuple.entries[k], q.arguments[k]));
  return trace(acc);
}

namespace {

struct Monomial {
  RatComplex coeff;
  int exponent;
};

// The exhaustive scanner. Battery moments are assembled by multilinearity
// from single-monomial traces; a monomial product is trivial only if its
// underlying permutation is the identity and its exponent sum vanishes, so
// the expensive normal form runs only on those products.
class SymmetryScanner {
 public:
  SymmetryScanner(const SequenceSpec& spec, EquivalenceKind rel, int max_order, int index_bound,
                  const std::vector<ExactElement>& battery)
      : spec_(spec), rel_(rel), max_order_(max_order), bound_(index_bound) {
    if (battery.empty()) throw std::invalid_argument("check_symmetry: battery is empty");
    if (max_order < 1 || index_bound < 0)
      throw std::invalid_argument("check_symmetry: bad bounds");
    strands_ = index_bound + 3;
    for (const ExactElement& b : battery) {
      std::vector<Monomial> monos;
      for (const auto& [key, term] : b.terms())
        monos.push_back({term.coeff, seed_exponent(term.rep)});
      battery_.push_back(std::move(monos));
    }
    std::vector<int> exps;
    for (const auto& monos : battery_)
      for (const Monomial& m : monos) exps.push_back(m.exponent);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    basis_ = exps;
    // letters and permutation of iota_v(g^e) for v <= bound, e in basis
    letters_.assign(static_cast<size_t>(bound_ + 1), {});
    perms_.assign(static_cast<size_t>(bound_ + 1), {});
    for (int v = 0; v <= bound_; ++v) {
      for (int e : basis_) {
        std::vector<int> ls = iota_letters(spec_.kind, v, e);
        Perm p = perm_identity();
        for (int l : ls) {
          int idx = std::abs(l);
          std::swap(p[idx - 1], p[idx]);
        }
        letters_[v].push_back(std::move(ls));
        perms_[v].push_back(p);
      }
    }
  }

  SymmetryReport run() {
    report_ = SymmetryReport{};
    for (int n = 1; n <= max_order_ && report_.pass; ++n) scan_order(n);
    return report_;
  }

 private:
  using Perm = std::array<uint8_t, NfWord::kMaxStrands>;

  Perm perm_identity() const {
    Perm p{};
    for (int s = 0; s < strands_; ++s) p[s] = static_cast<uint8_t>(s);
    return p;
  }

  bool canonical_pattern(const std::vector<int>& t) const {
    switch (rel_) {
      case EquivalenceKind::order: {
        // rank patterns: values are exactly {0..max}, in any order
        uint32_t seen = 0;
        int mx = 0;
        for (int x : t) {
          seen |= 1u << x;
          mx = std::max(mx, x);
        }
        return seen == (1u << (mx + 1)) - 1;
      }
      case EquivalenceKind::symmetric: {
        // set partitions: first occurrences in increasing order
        int mx = -1;
        for (int x : t) {
          if (x > mx + 1) return false;
          mx = std::max(mx, x);
        }
        return true;
      }
      case EquivalenceKind::translation:
        return *std::min_element(t.begin(), t.end()) == 0;
    }
    return false;
  }

  // all instantiations of a canonical pattern within the bound, pattern first
  std::vector<std::vector<int>> members(const std::vector<int>& pattern) const {
    std::vector<std::vector<int>> out;
    int r = *std::max_element(pattern.begin(), pattern.end()) + 1;
    auto instantiate = [&](const std::vector<int>& valmap) {
      std::vector<int> t(pattern.size());
      for (size_t k = 0; k < pattern.size(); ++k) t[k] = valmap[pattern[k]];
      out.push_back(std::move(t));
    };
    switch (rel_) {
      case EquivalenceKind::order: {
        std::vector<int> comb(r);
        for (int k = 0; k < r; ++k) comb[k] = k;
        for (;;) {
          instantiate(comb);
          int k = r - 1;
          while (k >= 0 && comb[k] == bound_ - (r - 1 - k)) --k;
          if (k < 0) break;
          ++comb[k];
          for (int l = k + 1; l < r; ++l) comb[l] = comb[l - 1] + 1;
        }
        break;
      }
      case EquivalenceKind::symmetric: {
        // r-permutations of {0..bound} in lexicographic order
        std::vector<int> sel;
        std::vector<bool> used(static_cast<size_t>(bound_ + 1), false);
        std::function<void()> rec = [&]() {
          if (static_cast<int>(sel.size()) == r) {
            instantiate(sel);
            return;
          }
          for (int x = 0; x <= bound_; ++x) {
            if (used[x]) continue;
            used[x] = true;
            sel.push_back(x);
            rec();
            sel.pop_back();
            used[x] = false;
          }
        };
        rec();
        break;
      }
      case EquivalenceKind::translation: {
        int mx = 0;
        for (int x : pattern) mx = std::max(mx, x);
        for (int c = 0; c + mx <= bound_; ++c) {
          std::vector<int> t(pattern.size());
          for (size_t k = 0; k < pattern.size(); ++k) t[k] = pattern[k] + c;
          out.push_back(std::move(t));
        }
        break;
      }
    }
    return out;
  }

  // bit table over basis combos: is the monomial product trivial?
  std::vector<uint8_t> basis_table(const std::vector<int>& tuple) {
    size_t n = tuple.size();
    size_t total = 1;
    for (size_t k = 0; k < n; ++k) total *= basis_.size();
    std::vector<uint8_t> table(total, 0);
    scratch_letters_.clear();
    basis_rec(tuple, 0, perm_identity(), 0, 0, table);
    return table;
  }

  void basis_rec(const std::vector<int>& tuple, size_t depth, const Perm& perm, int expsum,
                 size_t index, std::vector<uint8_t>& table) {
    if (depth == tuple.size()) {
      // trivial requires identity permutation and zero exponent sum; only
      // survivors pay for a normal form
      if (expsum == 0 && perm == perm_identity()) {
        NfWord acc(strands_);
        for (int l : scratch_letters_) acc.mul_sigma(std::abs(l), l > 0 ? 1 : -1);
        table[index] = acc.trivial() ? 1 : 0;
      }
      return;
    }
    int v = tuple[depth];
    for (size_t e = 0; e < basis_.size(); ++e) {
      size_t mark = scratch_letters_.size();
      const std::vector<int>& ls = letters_[v][e];
      scratch_letters_.insert(scratch_letters_.end(), ls.begin(), ls.end());
      const Perm& q = perms_[v][e];
      Perm composed;
      for (int s = 0; s < strands_; ++s) composed[s] = q[perm[s]];
      basis_rec(tuple, depth + 1, composed, expsum + basis_[e], index * basis_.size() + e,
                table);
      scratch_letters_.resize(mark);
    }
  }

  // battery table assembled from the basis table by multilinearity
  std::vector<RatComplex> battery_table(const std::vector<int>& tuple,
                                        const std::vector<uint8_t>& basis) {
    size_t n = tuple.size();
    size_t nb = battery_.size();
    size_t total = 1;
    for (size_t k = 0; k < n; ++k) total *= nb;
    std::vector<RatComplex> out(total);
    std::vector<int> combo(n, 0);
    for (size_t ci = 0; ci < total; ++ci) {
      RatComplex acc;
      std::function<void(size_t, size_t, RatComplex)> rec = [&](size_t k, size_t bidx,
                                                                RatComplex coeff) {
        if (k == n) {
          if (basis[bidx]) acc += coeff;
          return;
        }
        for (const Monomial& m : battery_[combo[k]]) {
          size_t pos = static_cast<size_t>(
              std::lower_bound(basis_.begin(), basis_.end(), m.exponent) - basis_.begin());
          rec(k + 1, bidx * basis_.size() + pos, coeff * m.coeff);
        }
      };
      rec(0, 0, RatComplex(1));
      out[ci] = acc;
      // odometer
      for (size_t k = n; k-- > 0;) {
        if (++combo[k] < static_cast<int>(nb)) break;
        combo[k] = 0;
      }
    }
    return out;
  }

  void scan_order(int n) {
    int maxval = rel_ == EquivalenceKind::translation ? bound_
                                                      : std::min(n - 1, bound_);
    std::vector<int> pattern(static_cast<size_t>(n), 0);
    for (;;) {
      if (canonical_pattern(pattern)) check_class(pattern);
      if (!report_.pass) return;
      int k = n - 1;
      while (k >= 0 && pattern[k] == maxval) --k;
      if (k < 0) return;
      ++pattern[k];
      for (int l = k + 1; l < n; ++l) pattern[l] = 0;
    }
  }

  void check_class(const std::vector<int>& pattern) {
    std::vector<std::vector<int>> mem = members(pattern);
    if (mem.size() < 2) return;
    ++report_.classes_checked;
    std::vector<uint8_t> base0 = basis_table(mem[0]);
    std::vector<RatComplex> bat0;  // computed lazily
    for (size_t m = 1; m < mem.size(); ++m) {
      ++report_.comparisons;
      std::vector<uint8_t> basem = basis_table(mem[m]);
      if (basem == base0) continue;
      if (bat0.empty()) bat0 = battery_table(mem[0], base0);
      std::vector<RatComplex> batm = battery_table(mem[m], basem);
      for (size_t ci = 0; ci < bat0.size(); ++ci) {
        if (!(bat0[ci] == batm[ci])) {
          SymmetryWitness w;
          w.lhs.entries = mem[0];
          w.rhs.entries = mem[m];
          size_t rem = ci;
          w.battery_combo.assign(pattern.size(), 0);
          for (size_t k = pattern.size(); k-- > 0;) {
            w.battery_combo[k] = static_cast<int>(rem % battery_.size());
            rem /= battery_.size();
          }
          w.lhs_value = bat0[ci];
          w.rhs_value = batm[ci];
          report_.witnesses.push_back(std::move(w));
          report_.pass = false;
          return;
        }
      }
    }
  }

  SequenceSpec spec_;
  EquivalenceKind rel_;
  int max_order_, bound_, strands_ = 4;
  std::vector<std::vector<Monomial>> battery_;
  std::vector<int> basis_;
  std::vector<std::vector<std::vector<int>>> letters_;  // [value][basis idx]
  std::vector<std::vector<Perm>> perms_;
  SymmetryReport report_;
  std::vector<int> scratch_letters_;
};

}  // namespace

SymmetryReport check_symmetry(const SequenceSpec& spec, EquivalenceKind rel, int max_order,
                              int index_bound, const std::vector<ExactElement>& battery) {
  SymmetryScanner scanner(spec, rel, max_order, index_bound, battery);
  return scanner.run();
}

bool descending_product_commutation(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("descending_product_commutation: negative index");
  if (n == m || n == m + 1)
    throw std::invalid_argument("descending_product_commutation: n in {m, m+1} is excluded");
  if (n == 0) return true;  // sigma_0 is the identity
  std::vector<int> desc;
  for (int k = m; k >= 1; --k) desc.push_back(k);
  BraidWord prod = BraidWord::sigma(desc);
  BraidWord lhs = concat(BraidWord::sigma({n}), prod);
  BraidWord rhs = concat(prod, BraidWord::sigma({n < m ? n + 1 : n}));
  return equal(lhs, rhs);
}

}  // namespace braidprob
