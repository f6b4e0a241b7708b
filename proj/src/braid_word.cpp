#include "braidprob/braid_word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidprob {

Letter::Letter(Presentation p, int idx, int s) : presentation(p), index(idx), sign(s) {
  if (idx < 1) throw std::invalid_argument("Letter: index must be >= 1");
  if (s != 1 && s != -1) throw std::invalid_argument("Letter: sign must be +-1");
}

BraidWord::BraidWord(Presentation p, std::vector<Letter> letters,
                     std::optional<int> declared_strands)
    : presentation_(p), letters_(std::move(letters)), declared_strands_(declared_strands) {
  for (const Letter& l : letters_) {
    if (l.presentation != presentation_)
      throw std::invalid_argument("BraidWord: mixed presentations");
  }
  if (declared_strands_) {
    if (*declared_strands_ < 1)
      throw std::invalid_argument("BraidWord: declared_strands must be >= 1");
    for (const Letter& l : letters_) {
      if (l.index > *declared_strands_ - 1)
        throw std::invalid_argument("BraidWord: letter index exceeds declared strands");
    }
  }
}

int BraidWord::max_index() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

int BraidWord::ambient_strands() const {
  if (declared_strands_) return *declared_strands_;
  return std::max(2, max_index() + 1);
}

BraidWord BraidWord::sigma(std::vector<int> signed_indices) {
  std::vector<Letter> ls;
  ls.reserve(signed_indices.size());
  for (int s : signed_indices) {
    if (s == 0) throw std::invalid_argument("BraidWord: 0 is not a letter");
    ls.emplace_back(Presentation::Artin, std::abs(s), s > 0 ? 1 : -1);
  }
  return BraidWord(Presentation::Artin, std::move(ls));
}

BraidWord BraidWord::gamma(std::vector<int> signed_indices) {
  std::vector<Letter> ls;
  ls.reserve(signed_indices.size());
  for (int s : signed_indices) {
    if (s == 0) throw std::invalid_argument("BraidWord: 0 is not a letter");
    ls.emplace_back(Presentation::SqrtFree, std::abs(s), s > 0 ? 1 : -1);
  }
  return BraidWord(Presentation::SqrtFree, std::move(ls));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.presentation(), std::move(out), w.declared_strands());
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l.sign = -l.sign;
  return BraidWord(w.presentation(), std::move(out), w.declared_strands());
}

BraidWord inv_map(const BraidWord& w) {
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.sign = -l.sign;
  return BraidWord(w.presentation(), std::move(out), w.declared_strands());
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.presentation() != b.presentation() && !a.empty() && !b.empty())
    throw std::invalid_argument("concat: mixed presentations");
  Presentation p = a.empty() ? b.presentation() : a.presentation();
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  for (Letter l : b.letters()) {
    l.presentation = p;
    out.push_back(l);
  }
  return BraidWord(p, std::move(out));
}

int64_t exponent_sum(const BraidWord& w) {
  int64_t s = 0;
  for (const Letter& l : w.letters()) s += l.sign;
  return s;
}

std::vector<int> underlying_permutation(const BraidWord& w, int n) {
  if (n < 1) throw std::invalid_argument("underlying_permutation: n must be >= 1");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // track current position of each starting strand; swap positions per letter
  std::vector<int> pos_of_strand = perm;  // strand -> position
  std::vector<int> strand_at(n);
  for (int i = 0; i < n; ++i) strand_at[i] = i;
  for (const Letter& l : w.letters()) {
    int a, b;
    if (l.presentation == Presentation::Artin) {
      a = l.index - 1;
      b = l.index;
    } else {
      a = 0;
      b = l.index;  // gamma_k is the band generator crossing strands 0 and k
    }
    if (b >= n)
      throw std::invalid_argument("underlying_permutation: index needs more strands");
    std::swap(strand_at[a], strand_at[b]);
    pos_of_strand[strand_at[a]] = a;
    pos_of_strand[strand_at[b]] = b;
  }
  return pos_of_strand;
}

std::vector<int> compose_permutations(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose_permutations: size mismatch");
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

BraidWord shift(const BraidWord& w, int k) {
  if (w.presentation() != Presentation::Artin)
    throw std::invalid_argument("shift: Artin words only");
  if (k < 0) throw std::invalid_argument("shift: k must be >= 0");
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.index += k;
  return BraidWord(Presentation::Artin, std::move(out));
}

BraidWord m_shift(const BraidWord& w, int m) {
  if (w.presentation() != Presentation::Artin)
    throw std::invalid_argument("m_shift: Artin words only");
  if (m < 1) throw std::invalid_argument("m_shift: m must be >= 1");
  std::vector<int> conj;
  for (int i = m; i >= 1; --i) conj.push_back(i);
  BraidWord left = BraidWord::sigma(conj);
  return free_reduce(concat(concat(left, shift(w, 1)), invert(left)));
}

namespace {

void append_gamma_as_sigma(std::vector<Letter>& out, int k, int sign) {
  for (int i = 1; i < k; ++i) out.emplace_back(Presentation::Artin, i, 1);
  out.emplace_back(Presentation::Artin, k, sign);
  for (int i = k - 1; i >= 1; --i) out.emplace_back(Presentation::Artin, i, -1);
}

void append_sigma_as_gamma(std::vector<Letter>& out, int k, int sign) {
  for (int i = 1; i < k; ++i) out.emplace_back(Presentation::SqrtFree, i, -1);
  out.emplace_back(Presentation::SqrtFree, k, sign);
  for (int i = k - 1; i >= 1; --i) out.emplace_back(Presentation::SqrtFree, i, 1);
}

}  // namespace

BraidWord gamma_to_sigma(const BraidWord& w) {
  if (w.presentation() != Presentation::SqrtFree)
    throw std::invalid_argument("gamma_to_sigma: expected a gamma word");
  std::vector<Letter> out;
  out.reserve(w.size() * 4);
  for (const Letter& l : w.letters()) append_gamma_as_sigma(out, l.index, l.sign);
  return free_reduce(BraidWord(Presentation::Artin, std::move(out)));
}

BraidWord sigma_to_gamma(const BraidWord& w) {
  if (w.presentation() != Presentation::Artin)
    throw std::invalid_argument("sigma_to_gamma: expected a sigma word");
  std::vector<Letter> out;
  out.reserve(w.size() * 4);
  for (const Letter& l : w.letters()) append_sigma_as_gamma(out, l.index, l.sign);
  return free_reduce(BraidWord(Presentation::SqrtFree, std::move(out)));
}

BraidWord gamma_tilde_as_sigma(int index, int sign) {
  // inv(g^{-1}) reverses the letters of g; for g = gamma_k that gives
  // (sigma_1^{-1}..sigma_{k-1}^{-1}) sigma_k (sigma_{k-1}..sigma_1).
  std::vector<Letter> base;
  append_gamma_as_sigma(base, index, 1);
  std::reverse(base.begin(), base.end());
  BraidWord tilde(Presentation::Artin, std::move(base));
  return sign > 0 ? tilde : invert(tilde);
}

BraidWord fundamental_braid(FundamentalKind kind, int n) {
  if (n < 2) throw std::invalid_argument("fundamental_braid: n must be >= 2");
  std::vector<Letter> out;
  switch (kind) {
    case FundamentalKind::delta:
      for (int i = n - 1; i >= 1; --i) out.emplace_back(Presentation::Artin, i, 1);
      return BraidWord(Presentation::Artin, std::move(out));
    case FundamentalKind::Delta:
      for (int top = n - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) out.emplace_back(Presentation::Artin, i, 1);
      return BraidWord(Presentation::Artin, std::move(out));
    case FundamentalKind::Delta_in_gamma:
      for (int top = n - 1; top >= 1; --top)
        for (int i = top; i >= 1; --i) out.emplace_back(Presentation::SqrtFree, i, 1);
      return BraidWord(Presentation::SqrtFree, std::move(out));
    case FundamentalKind::pyramid_up:
      for (int i = 1; i <= n; ++i) out.emplace_back(Presentation::Artin, i, 1);
      for (int i = n - 1; i >= 1; --i) out.emplace_back(Presentation::Artin, i, 1);
      return BraidWord(Presentation::Artin, std::move(out));
    case FundamentalKind::pyramid_down:
      for (int i = n; i >= 1; --i) out.emplace_back(Presentation::Artin, i, 1);
      for (int i = 2; i <= n; ++i) out.emplace_back(Presentation::Artin, i, 1);
      return BraidWord(Presentation::Artin, std::move(out));
  }
  throw std::logic_error("fundamental_braid: unknown kind");
}

namespace {

BraidWord gamma_word(const std::vector<int>& signed_indices) {
  return BraidWord::gamma(signed_indices);
}

// gamma_l gamma_{l-1} (gamma_{l-2}..gamma_k) gamma_l
BraidWord eb_lhs(int k, int l) {
  std::vector<int> v = {l, l - 1};
  for (int i = l - 2; i >= k; --i) v.push_back(i);
  v.push_back(l);
  return gamma_word(v);
}

// gamma_{l-1} (gamma_{l-2}..gamma_k) gamma_l gamma_{l-1}
BraidWord eb_rhs(int k, int l) {
  std::vector<int> v = {l - 1};
  for (int i = l - 2; i >= k; --i) v.push_back(i);
  v.push_back(l);
  v.push_back(l - 1);
  return gamma_word(v);
}

BraidWord tilde_word(const std::vector<int>& indices) {
  BraidWord w(Presentation::Artin);
  for (int i : indices) w = concat(w, gamma_tilde_as_sigma(i));
  return free_reduce(w);
}

// gamma~_l (gamma~_k..gamma~_{l-2}) gamma~_{l-1} gamma~_l
BraidWord ebt_lhs(int k, int l) {
  std::vector<int> v = {l};
  for (int i = k; i <= l - 2; ++i) v.push_back(i);
  v.push_back(l - 1);
  v.push_back(l);
  return tilde_word(v);
}

// gamma~_{l-1} gamma~_l (gamma~_k..gamma~_{l-2}) gamma~_{l-1}
BraidWord ebt_rhs(int k, int l) {
  std::vector<int> v = {l - 1, l};
  for (int i = k; i <= l - 2; ++i) v.push_back(i);
  v.push_back(l - 1);
  return tilde_word(v);
}

}  // namespace

std::vector<PresentationRelation> relation_instances(RelationKind kind, int n) {
  std::vector<PresentationRelation> out;
  switch (kind) {
    case RelationKind::B1:
      for (int i = 1; i + 1 <= n - 1; ++i) {
        int j = i + 1;
        out.push_back({kind, {i, j}, BraidWord::sigma({i, j, i}), BraidWord::sigma({j, i, j})});
      }
      break;
    case RelationKind::B2:
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
          out.push_back({kind, {i, j}, BraidWord::sigma({i, j}), BraidWord::sigma({j, i})});
      break;
    case RelationKind::EB:
      if (n < 3) throw std::invalid_argument("relation_instances: EB needs n >= 3");
      for (int l = 2; l <= n - 1; ++l)
        for (int k = 1; k < l; ++k)
          out.push_back({kind, {k, l}, eb_lhs(k, l), eb_rhs(k, l)});
      break;
    case RelationKind::EBtilde:
      if (n < 3) throw std::invalid_argument("relation_instances: EBtilde needs n >= 3");
      for (int l = 2; l <= n - 1; ++l)
        for (int k = 1; k < l; ++k)
          out.push_back({kind, {k, l}, ebt_lhs(k, l), ebt_rhs(k, l)});
      break;
    case RelationKind::SergiescuPair:
      for (int j = 1; j <= n - 1; ++j)
        for (int k = j + 1; k <= n - 1; ++k)
          out.push_back({kind, {j, k}, gamma_word({j, k, j}), gamma_word({k, j, k})});
      break;
    case RelationKind::SergiescuTriple:
      for (int j = 1; j <= n - 1; ++j)
        for (int k = j + 1; k <= n - 1; ++k)
          for (int l = k + 1; l <= n - 1; ++l) {
            BraidWord a = gamma_word({l, k, j, l});
            BraidWord b = gamma_word({k, j, l, k});
            BraidWord c = gamma_word({j, l, k, j});
            out.push_back({kind, {j, k, l}, a, b});
            out.push_back({kind, {j, k, l}, b, c});
            out.push_back({kind, {j, k, l}, a, c});
          }
      break;
  }
  return out;
}

BraidWord parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string prefix;
  if (!(in >> prefix)) throw std::invalid_argument("parse_word: empty input");
  Presentation p;
  if (prefix == "sigma:")
    p = Presentation::Artin;
  else if (prefix == "gamma:")
    p = Presentation::SqrtFree;
  else
    throw std::invalid_argument("parse_word: expected 'sigma:' or 'gamma:' prefix");
  std::vector<int> idx;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
    }
    if (used != tok.size() || v == 0)
      throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
    idx.push_back(v);
  }
  return p == Presentation::Artin ? BraidWord::sigma(idx) : BraidWord::gamma(idx);
}

std::string format_word(const BraidWord& w) {
  std::string s = w.presentation() == Presentation::Artin ? "sigma:" : "gamma:";
  for (const Letter& l : w.letters()) s += " " + std::to_string(l.sign * l.index);
  return s;
}

}  // namespace braidprob
