#include "braidprob/laplacian.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "braidprob/garside.hpp"

namespace braidprob {

namespace {

// step alphabets as sigma-letter lists in B_3
const std::vector<std::vector<int>>& step_words(WalkGroup group) {
  static const std::vector<std::vector<int>> b3 = {
      {1}, {-1}, {1, 2, -1}, {1, -2, -1}};  // gamma_1^{+-1}, gamma_2^{+-1}
  static const std::vector<std::vector<int>> b3sq = {
      {1, 1}, {-1, -1}, {1, 2, 2, -1}, {1, -2, -2, -1}};
  static const std::vector<std::vector<int>> single = {{1}, {-1}};
  switch (group) {
    case WalkGroup::B3_gamma:
      return b3;
    case WalkGroup::B3_gamma_squared:
      return b3sq;
    case WalkGroup::Z_single:
      return single;
    default:
      throw std::logic_error("step_words: free group has no braid steps");
  }
}

int max_steps_allowed(WalkGroup group, const WalkLimits& limits) {
  switch (group) {
    case WalkGroup::F2:
      return limits.max_n_f2;
    case WalkGroup::Z_single:
      return limits.max_n_f2;
    default:
      return limits.max_n_b3;
  }
}

// Free-group walk: the transition counts from a reduced word depend only on
// its length, so the walk projects onto a birth-death chain on N_0 (4 moves
// up from the root, otherwise 3 up / 1 down).
std::vector<BigInt> f2_counts_upto(int max_n) {
  std::vector<BigInt> identity_counts;
  std::vector<BigInt> level(static_cast<size_t>(max_n) + 2);
  level[0] = BigInt(1);
  identity_counts.push_back(level[0]);
  for (int step = 1; step <= max_n; ++step) {
    std::vector<BigInt> next(level.size());
    for (size_t l = 0; l < level.size(); ++l) {
      if (level[l].is_zero()) continue;
      if (l == 0) {
        next[1] += level[0] * BigInt(4);
      } else {
        next[l - 1] += level[l];
        if (l + 1 < next.size()) next[l + 1] += level[l] * BigInt(3);
      }
    }
    level = std::move(next);
    identity_counts.push_back(level[0]);
  }
  return identity_counts;
}

std::vector<BigInt> braid_counts_upto(WalkGroup group, int max_n, const WalkLimits& limits) {
  const auto& steps = step_words(group);
  const int strands = 3;
  NfWord trivial(strands);
  const std::string id_key = trivial.key();
  std::unordered_map<std::string, BigInt> frontier;
  frontier.emplace(id_key, BigInt(1));
  std::vector<BigInt> identity_counts{BigInt(1)};
  for (int step = 1; step <= max_n; ++step) {
    std::unordered_map<std::string, BigInt> next;
    next.reserve(frontier.size() * 2);
    for (const auto& [key, count] : frontier) {
      for (const auto& letters : steps) {
        NfWord w = NfWord::from_key(strands, key);
        for (int l : letters) w.mul_sigma(std::abs(l), l > 0 ? 1 : -1);
        next[w.key()] += count;
      }
      if (next.size() > limits.frontier_cap)
        throw std::runtime_error("count_trivial_words: frontier budget exceeded");
    }
    frontier = std::move(next);
    auto it = frontier.find(id_key);
    identity_counts.push_back(it == frontier.end() ? BigInt(0) : it->second);
  }
  return identity_counts;
}

}  // namespace

WalkCounter::WalkCounter(WalkGroup group, WalkLimits limits)
    : group_(group), limits_(limits) {
  if (group == WalkGroup::F2) {
    identity_key_.clear();
  } else {
    identity_key_ = NfWord(3).key();
  }
  frontier_.emplace(identity_key_, BigInt(1));
}

int WalkCounter::alphabet_size() const { return group_ == WalkGroup::Z_single ? 2 : 4; }

void WalkCounter::step() {
  std::map<std::string, BigInt> next;
  if (group_ == WalkGroup::F2) {
    // reduced words over a, A, b, B
    for (const auto& [word, count] : frontier_) {
      for (char l : {'a', 'A', 'b', 'B'}) {
        std::string w = word;
        char inverse = static_cast<char>(l >= 'a' ? l - 32 : l + 32);
        if (!w.empty() && w.back() == inverse)
          w.pop_back();
        else
          w.push_back(l);
        next[w] += count;
      }
      if (next.size() > limits_.frontier_cap)
        throw std::runtime_error("WalkCounter: frontier budget exceeded");
    }
  } else {
    for (const auto& [key, count] : frontier_) {
      for (const auto& letters : step_words(group_)) {
        NfWord w = NfWord::from_key(3, key);
        for (int l : letters) w.mul_sigma(std::abs(l), l > 0 ? 1 : -1);
        next[w.key()] += count;
      }
      if (next.size() > limits_.frontier_cap)
        throw std::runtime_error("WalkCounter: frontier budget exceeded");
    }
  }
  frontier_ = std::move(next);
  ++length_;
}

BigInt WalkCounter::identity_count() const {
  auto it = frontier_.find(identity_key_);
  return it == frontier_.end() ? BigInt(0) : it->second;
}

BigInt WalkCounter::total_count() const {
  BigInt total(0);
  for (const auto& [key, count] : frontier_) total += count;
  return total;
}

std::vector<BigInt> count_trivial_words_upto(WalkGroup group, int max_n,
                                             const WalkLimits& limits) {
  if (max_n < 0) throw std::invalid_argument("count_trivial_words: n must be >= 0");
  if (max_n > max_steps_allowed(group, limits))
    throw std::invalid_argument("count_trivial_words: n exceeds the configured maximum");
  if (group == WalkGroup::F2) return f2_counts_upto(max_n);
  return braid_counts_upto(group, max_n, limits);
}

BigInt count_trivial_words(WalkGroup group, int n, const WalkLimits& limits) {
  return count_trivial_words_upto(group, n, limits).back();
}

BigInt count_trivial_words_raw(WalkGroup group, int n) {
  if (n < 0 || n > 9) throw std::invalid_argument("raw enumeration supports n <= 9 only");
  if (group == WalkGroup::F2) {
    // reduced-word stack over letters +-1, +-2
    std::vector<int> stack;
    BigInt hits(0);
    std::function<void(int)> rec = [&](int depth) {
      if (depth == n) {
        if (stack.empty()) hits += BigInt(1);
        return;
      }
      for (int l : {1, -1, 2, -2}) {
        bool cancels = !stack.empty() && stack.back() == -l;
        if (cancels) {
          int popped = stack.back();
          stack.pop_back();
          rec(depth + 1);
          stack.push_back(popped);
        } else {
          stack.push_back(l);
          rec(depth + 1);
          stack.pop_back();
        }
      }
    };
    rec(0);
    return hits;
  }
  const auto& steps = step_words(group);
  BigInt hits(0);
  std::vector<NfWord> stack{NfWord(3)};
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      if (stack.back().trivial()) hits += BigInt(1);
      return;
    }
    for (const auto& letters : steps) {
      NfWord w = stack.back();
      for (int l : letters) w.mul_sigma(std::abs(l), l > 0 ? 1 : -1);
      stack.push_back(std::move(w));
      rec(depth + 1);
      stack.pop_back();
    }
  };
  rec(0);
  return hits;
}

PowerSeries kesten_series(int max_degree) {
  if (max_degree < 0 || max_degree > 64)
    throw std::invalid_argument("kesten_series: max_degree must be in [0, 64]");
  int m_max = max_degree / 2;
  // sqrt(1 + u) = sum binom(1/2, k) u^k at u = -12 z^2
  std::vector<Rational> sqrt_coeff(static_cast<size_t>(m_max) + 1);
  Rational binom(1);
  Rational minus12(-12);
  Rational upow(1);
  for (int k = 0; k <= m_max; ++k) {
    sqrt_coeff[k] = binom * upow;
    binom = binom * (Rational(BigInt(1), BigInt(2)) - Rational(k)) / Rational(k + 1);
    upow = upow * minus12;
  }
  // numerator 2 sqrt(1 - 12 z^2) - 1, then multiply by sum 16^m z^{2m}
  std::vector<Rational> numer(sqrt_coeff.size());
  for (size_t k = 0; k < sqrt_coeff.size(); ++k)
    numer[k] = Rational(2) * sqrt_coeff[k] - (k == 0 ? Rational(1) : Rational(0));
  PowerSeries out;
  out.coefficients.assign(static_cast<size_t>(max_degree) + 1, Rational(0));
  Rational sixteen(16);
  for (int m = 0; m <= m_max; ++m) {
    Rational acc(0);
    Rational pow16(1);
    for (int k = m; k >= 0; --k) {
      acc += numer[k] * pow16;
      pow16 = pow16 * sixteen;
    }
    out.coefficients[2 * m] = acc;
  }
  return out;
}

std::vector<Rational> laplacian_moments(WalkGroup group, int max_n,
                                        MomentNormalization normalization,
                                        const WalkLimits& limits) {
  std::vector<BigInt> counts = count_trivial_words_upto(group, max_n, limits);
  std::vector<Rational> out;
  out.reserve(counts.size());
  Rational denom(1);
  for (size_t n = 0; n < counts.size(); ++n) {
    if (normalization == MomentNormalization::count)
      out.emplace_back(counts[n]);
    else
      out.push_back(Rational(counts[n]) / denom);
    denom = denom * Rational(2);
  }
  return out;
}

KestenComparison compare_with_kesten(int max_n, const WalkLimits& limits) {
  if (max_n < 0 || max_n > 20 || max_n % 2 != 0)
    throw std::invalid_argument("compare_with_kesten: max_n must be even and <= 20");
  KestenComparison cmp;
  cmp.max_n = max_n;
  PowerSeries series = kesten_series(max_n);
  std::vector<BigInt> counts = count_trivial_words_upto(WalkGroup::F2, max_n, limits);
  for (int n = 0; n <= max_n; n += 2) {
    const Rational& c = series.coefficients[n];
    if (!c.is_integer()) {
      cmp.match = false;
      continue;
    }
    cmp.series_coefficients.push_back(c.num());
    cmp.walk_counts.push_back(counts[n]);
    cmp.half_normalized_moments.push_back(Rational(counts[n]) /
                                          Rational(BigInt::pow(BigInt(2), n)));
    if (!(c.num() == counts[n])) cmp.match = false;
  }
  return cmp;
}

}  // namespace braidprob
