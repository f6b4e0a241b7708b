#include "braidprob/garside.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidprob {

namespace {

BraidWord as_sigma(const BraidWord& w) {
  return w.presentation() == Presentation::Artin ? w : gamma_to_sigma(w);
}

}  // namespace

NfWord::NfWord(int strands) : strands_(strands) {
  if (strands < 2 || strands > kMaxStrands)
    throw std::invalid_argument("NfWord: strands out of range");
}

NfWord NfWord::from_key(int strands, const std::string& key) {
  NfWord w(strands);
  if (key.size() < 4 || (key.size() - 4) % (strands + 1) != 0)
    throw std::invalid_argument("NfWord: malformed key");
  int32_t p = 0;
  for (int b = 0; b < 4; ++b)
    p |= static_cast<int32_t>(static_cast<uint8_t>(key[b])) << (8 * b);
  w.delta_power_ = p;
  for (size_t pos = 4; pos < key.size(); pos += strands + 1) {
    Perm f{};
    for (int s = 0; s < strands; ++s) f[s] = static_cast<uint8_t>(key[pos + s]);
    w.factors_.push_back(f);
  }
  return w;
}

NfWord::Perm NfWord::transposition(int index) const {
  Perm p{};
  for (int s = 0; s < strands_; ++s) p[s] = static_cast<uint8_t>(s);
  std::swap(p[index - 1], p[index]);
  return p;
}

NfWord::Perm NfWord::w0() const {
  Perm p{};
  for (int s = 0; s < strands_; ++s) p[s] = static_cast<uint8_t>(strands_ - 1 - s);
  return p;
}

NfWord::Perm NfWord::flip(const Perm& p) const {
  Perm r{};
  for (int s = 0; s < strands_; ++s)
    r[s] = static_cast<uint8_t>(strands_ - 1 - p[strands_ - 1 - s]);
  return r;
}

// bit i set (1 <= i <= n-1) iff sigma_i left-divides the factor
uint32_t NfWord::starting_set(const Perm& p) const {
  uint32_t m = 0;
  for (int i = 1; i < strands_; ++i)
    if (p[i - 1] > p[i]) m |= 1u << i;
  return m;
}

// bit i set iff sigma_i right-divides the factor
uint32_t NfWord::finishing_set(const Perm& p) const {
  Perm inv{};
  for (int s = 0; s < strands_; ++s) inv[p[s]] = static_cast<uint8_t>(s);
  return starting_set(inv);
}

bool NfWord::is_identity(const Perm& p) const {
  for (int s = 0; s < strands_; ++s)
    if (p[s] != s) return false;
  return true;
}

bool NfWord::is_w0(const Perm& p) const {
  for (int s = 0; s < strands_; ++s)
    if (p[s] != strands_ - 1 - s) return false;
  return true;
}

// Make (a, b) left-weighted: while some sigma_i starts b but does not finish
// a, slide that crossing left (a <- a sigma_i, b <- sigma_i^{-1} b).
bool NfWord::left_weight_pair(Perm& a, Perm& b) {
  bool changed = false;
  for (;;) {
    uint32_t m = starting_set(b) & ~finishing_set(a);
    if (!m) return changed;
    int i = __builtin_ctz(m);
    for (int s = 0; s < strands_; ++s) {
      if (a[s] == i - 1)
        a[s] = static_cast<uint8_t>(i);
      else if (a[s] == i)
        a[s] = static_cast<uint8_t>(i - 1);
    }
    std::swap(b[i - 1], b[i]);
    changed = true;
  }
}

void NfWord::push_factor(Perm f) {
  if (is_identity(f)) return;
  if (is_w0(f)) {
    // x Delta = Delta^{p+1} tau^{c+1}(F_1..F_k)
    ++delta_power_;
    ++twist_;
    return;
  }
  factors_.push_back(f);
  cascade_from(factors_.size() - 1);
}

// Right-to-left renormalization after a single factor was appended at j.
// This is the standard normal-form right-multiplication cascade: a pair that
// gets fixed can only break the pair to its left, full absorption leaves the
// pair to the right left-weighted (right divisors of B divide AB).
void NfWord::cascade_from(size_t j) {
  while (j >= 1 && j < factors_.size()) {
    bool moved = left_weight_pair(factors_[j - 1], factors_[j]);
    if (is_identity(factors_[j]))
      factors_.erase(factors_.begin() + static_cast<long>(j));
    if (is_w0(factors_[j - 1])) {
      // interior Delta: pre-twist the stored prefix, absorb into the power
      for (size_t l = 0; l + 1 < j; ++l) factors_[l] = flip(factors_[l]);
      factors_.erase(factors_.begin() + static_cast<long>(j - 1));
      ++delta_power_;
      j -= 1;
      continue;
    }
    if (!moved) break;
    --j;
  }
}

void NfWord::mul_sigma(int index, int sign) {
  if (index < 1 || index > strands_ - 1)
    throw std::invalid_argument("NfWord: letter index out of ambient range");
  if (sign > 0) {
    Perm t = transposition(index);
    push_factor(twist_ % 2 ? flip(t) : t);
  } else {
    // x sigma_i^{-1} = Delta^{p-1} tau^{c+1}(F_1..F_k) R_i,
    // R_i = Delta sigma_i^{-1} with permutation s -> t_i(w0(s))
    --delta_power_;
    ++twist_;
    Perm r{};
    for (int s = 0; s < strands_; ++s) {
      int v = strands_ - 1 - s;
      if (v == index - 1)
        v = index;
      else if (v == index)
        v = index - 1;
      r[s] = static_cast<uint8_t>(v);
    }
    push_factor(twist_ % 2 ? flip(r) : r);
  }
}

void NfWord::mul_word(const BraidWord& w) {
  if (w.presentation() != Presentation::Artin)
    throw std::invalid_argument("NfWord: Artin words only");
  for (const Letter& l : w.letters()) mul_sigma(l.index, l.sign);
}

std::string NfWord::key() const {
  std::string out;
  out.reserve(5 + factors_.size() * static_cast<size_t>(strands_ + 1));
  int32_t p = delta_power_;
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((p >> (8 * b)) & 0xff));
  bool tw = twist_ % 2 != 0;
  for (const Perm& f : factors_) {
    Perm t = tw ? flip(f) : f;
    for (int s = 0; s < strands_; ++s) out.push_back(static_cast<char>(t[s]));
    out.push_back('|');
  }
  return out;
}

LeftNormalForm NfWord::to_normal_form() const {
  LeftNormalForm nf;
  nf.strands = strands_;
  nf.delta_power = delta_power_;
  bool tw = twist_ % 2 != 0;
  for (const Perm& f : factors_) {
    Perm t = tw ? flip(f) : f;
    PermutationBraid pb;
    pb.image.assign(t.begin(), t.begin() + strands_);
    nf.factors.push_back(std::move(pb));
  }
  return nf;
}

bool operator==(const NfWord& a, const NfWord& b) {
  return a.strands_ == b.strands_ && a.key() == b.key();
}

LeftNormalForm normal_form(const BraidWord& w_in, std::optional<int> n) {
  BraidWord w = as_sigma(w_in);
  int strands = n ? *n : w.ambient_strands();
  if (w.max_index() > strands - 1)
    throw std::invalid_argument("normal_form: letter index needs more strands");
  NfWord acc(strands);
  acc.mul_word(w);
  return acc.to_normal_form();
}

bool is_trivial(const BraidWord& w_in) {
  BraidWord w = as_sigma(w_in);
  NfWord acc(w.ambient_strands());
  acc.mul_word(w);
  return acc.trivial();
}

bool equal(const BraidWord& a_in, const BraidWord& b_in) {
  BraidWord a = as_sigma(a_in), b = as_sigma(b_in);
  int n = std::max(a.ambient_strands(), b.ambient_strands());
  NfWord na(n), nb(n);
  na.mul_word(a);
  nb.mul_word(b);
  return na == nb;
}

BraidWord handle_reduce(const BraidWord& w_in, size_t max_steps) {
  BraidWord w = as_sigma(w_in);
  constexpr int kMaxIdx = 63;
  if (w.max_index() > kMaxIdx)
    throw std::invalid_argument("handle_reduce: letter index too large");
  std::vector<Letter> v = free_reduce(w).letters();
  size_t steps = 0;
  for (;;) {
    // leftmost handle end: first q closing sigma_i^e v sigma_i^{-e} with only
    // larger indices strictly between; minimality of q makes it permitted
    std::array<long, kMaxIdx + 1> last{};
    last.fill(-1);
    long p = -1, q = -1;
    for (size_t pos = 0; pos < v.size(); ++pos) {
      int i = v[pos].index;
      long cand = last[i];
      if (cand >= 0 && v[cand].sign == -v[pos].sign) {
        bool clean = true;
        for (int j = 1; j < i && clean; ++j)
          if (last[j] > cand) clean = false;
        if (clean) {
          p = cand;
          q = static_cast<long>(pos);
          break;
        }
      }
      last[i] = static_cast<long>(pos);
    }
    if (q < 0) return BraidWord(Presentation::Artin, std::move(v));
    if (++steps > max_steps)
      throw std::runtime_error("handle_reduce: iteration cap exceeded");
    int i = v[p].index;
    int e = v[p].sign;
    std::vector<Letter> out;
    out.reserve(v.size() + 16);
    out.insert(out.end(), v.begin(), v.begin() + p);
    for (long pos = p + 1; pos < q; ++pos) {
      const Letter& l = v[pos];
      if (l.index == i + 1) {
        out.emplace_back(Presentation::Artin, i + 1, -e);
        out.emplace_back(Presentation::Artin, i, l.sign);
        out.emplace_back(Presentation::Artin, i + 1, e);
      } else {
        out.push_back(l);
      }
    }
    out.insert(out.end(), v.begin() + q + 1, v.end());
    v = free_reduce(BraidWord(Presentation::Artin, std::move(out))).letters();
  }
}

namespace {

bool commutes_with_sigma(const BraidWord& w, int k, int ambient) {
  NfWord lhs(ambient), rhs(ambient);
  lhs.mul_sigma(k, 1);
  lhs.mul_word(w);
  rhs.mul_word(w);
  rhs.mul_sigma(k, 1);
  return lhs == rhs;
}

}  // namespace

int total_width(const BraidWord& w_in) {
  BraidWord w = free_reduce(as_sigma(w_in));
  if (w.empty()) return 0;
  int N = w.max_index() + 1;  // w in B_N
  int ambient = N + 2;
  for (int m = 0; m < N - 1; ++m) {
    bool inside = true;
    for (int k = m + 2; k <= N + 1 && inside; ++k)
      inside = commutes_with_sigma(w, k, ambient);
    if (inside) return m;
  }
  return N - 1;
}

BraidWord remove_top_strand(const BraidWord& w, int n) {
  if (w.presentation() != Presentation::Artin)
    throw std::invalid_argument("remove_top_strand: Artin words only");
  if (w.max_index() > n - 1)
    throw std::invalid_argument("remove_top_strand: word does not fit in B_n");
  int pos = n - 1;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.index - 1 == pos) {
      pos = l.index;
    } else if (l.index == pos) {
      pos = l.index - 1;
    } else {
      out.emplace_back(Presentation::Artin, l.index > pos ? l.index - 1 : l.index, l.sign);
    }
  }
  if (pos != n - 1)
    throw std::invalid_argument("remove_top_strand: top strand is permuted");
  return BraidWord(Presentation::Artin, std::move(out));
}

CanonicalKey canonical_key(const BraidWord& w_in) {
  BraidWord w = free_reduce(as_sigma(w_in));
  int tw = total_width(w);
  int target = std::max(2, tw + 1);
  for (int n = std::max(2, w.max_index() + 1); n > target; --n) w = remove_top_strand(w, n);
  NfWord acc(target);
  acc.mul_word(w);
  std::string key;
  key.push_back(static_cast<char>(tw));
  key += acc.key();
  return key;
}

int64_t shifted_orbit_distinct(const BraidWord& tau, int m, int K) {
  if (K < 0) throw std::invalid_argument("shifted_orbit_distinct: K must be >= 0");
  std::vector<CanonicalKey> keys;
  BraidWord cur = free_reduce(as_sigma(tau));
  for (int k = 0; k <= K; ++k) {
    keys.push_back(canonical_key(cur));
    if (k < K) cur = m_shift(cur, m);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return static_cast<int64_t>(keys.size());
}

}  // namespace braidprob
