#pragma once

#include <complex>
#include <map>
#include <stdexcept>

#include "braidprob/braid_word.hpp"
#include "braidprob/garside.hpp"
#include "braidprob/rational.hpp"

namespace braidprob {

// Coefficient policies: exact rational-complex (acceptance fixtures) and
// double-complex (CLI/default float mode, zero tolerance 1e-12).
template <typename C>
struct CoeffTraits;

template <>
struct CoeffTraits<RatComplex> {
  static RatComplex zero() { return RatComplex(); }
  static RatComplex one() { return RatComplex(1); }
  static bool is_zero(const RatComplex& c) { return c.is_zero(); }
  static RatComplex conj(const RatComplex& c) { return c.conj(); }
};

template <>
struct CoeffTraits<std::complex<double>> {
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static bool is_zero(const std::complex<double>& c) {
    return std::abs(c.real()) + std::abs(c.imag()) <= 1e-12;
  }
  static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
};

// Finite complex-linear combination sum_w c_w L_w of canonical braid classes.
// Terms are keyed by the stabilization-invariant canonical key and
// re-canonicalized eagerly on every multiplication.
template <typename C>
class GroupAlgebraElement {
 public:
  struct Term {
    C coeff;
    BraidWord rep;  // representative word; canonical_key(rep) equals the map key
  };
  using Terms = std::map<CanonicalKey, Term>;

  GroupAlgebraElement() = default;

  static GroupAlgebraElement unit() { return from_word(BraidWord::sigma({}), CoeffTraits<C>::one()); }

  static GroupAlgebraElement from_word(const BraidWord& w, C coeff = CoeffTraits<C>::one()) {
    GroupAlgebraElement x;
    x.add_term(w, coeff);
    return x;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const BraidWord& w, const C& coeff) {
    if (CoeffTraits<C>::is_zero(coeff)) return;
    CanonicalKey k = canonical_key(w);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), Term{coeff, free_reduce(w)});
    } else {
      it->second.coeff = it->second.coeff + coeff;
      if (CoeffTraits<C>::is_zero(it->second.coeff)) terms_.erase(it);
    }
  }

  friend GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (const auto& [k, t] : b.terms_) r.add_term(t.rep, t.coeff);
    return r;
  }

  friend GroupAlgebraElement scalar_mul(const C& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r;
    if (CoeffTraits<C>::is_zero(c)) return r;
    for (const auto& [k, t] : a.terms_) {
      C nc = c * t.coeff;
      if (!CoeffTraits<C>::is_zero(nc)) r.terms_.emplace(k, Term{nc, t.rep});
    }
    return r;
  }

  friend GroupAlgebraElement mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r;
    for (const auto& [ka, ta] : a.terms_)
      for (const auto& [kb, tb] : b.terms_)
        r.add_term(mul_words(ta.rep, tb.rep), ta.coeff * tb.coeff);
    return r;
  }

  // star: L_w* = L_{w^{-1}}, coefficients conjugated
  friend GroupAlgebraElement star(const GroupAlgebraElement& a) {
    GroupAlgebraElement r;
    for (const auto& [k, t] : a.terms_) r.add_term(invert(t.rep), CoeffTraits<C>::conj(t.coeff));
    return r;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (!CoeffTraits<C>::is_zero(ia->second.coeff - ib->second.coeff)) return false;
    }
    return true;
  }

 private:
  Terms terms_;

  static BraidWord mul_words(const BraidWord& x, const BraidWord& y) {
    if (x.presentation() == y.presentation() || x.empty() || y.empty()) {
      return free_reduce(concat(x, y));
    }
    BraidWord xs = x.presentation() == Presentation::Artin ? x : gamma_to_sigma(x);
    BraidWord ys = y.presentation() == Presentation::Artin ? y : gamma_to_sigma(y);
    return free_reduce(concat(xs, ys));
  }
};

// tau_infinity: the coefficient of the identity class.
template <typename C>
C trace(const GroupAlgebraElement<C>& x) {
  static const CanonicalKey kIdentity = canonical_key(BraidWord::sigma({}));
  auto it = x.terms().find(kIdentity);
  return it == x.terms().end() ? CoeffTraits<C>::zero() : it->second.coeff;
}

// Ad(L_tau): each representative w -> tau w tau^{-1}; coefficients unchanged.
template <typename C>
GroupAlgebraElement<C> ad(const BraidWord& tau, const GroupAlgebraElement<C>& x) {
  BraidWord t = tau.presentation() == Presentation::Artin ? tau : gamma_to_sigma(tau);
  GroupAlgebraElement<C> r;
  for (const auto& [k, term] : x.terms()) {
    BraidWord w = term.rep.presentation() == Presentation::Artin
                      ? term.rep
                      : gamma_to_sigma(term.rep);
    r.add_term(free_reduce(concat(concat(t, w), invert(t))), term.coeff);
  }
  return r;
}

using ExactElement = GroupAlgebraElement<RatComplex>;
using FloatElement = GroupAlgebraElement<std::complex<double>>;

}  // namespace braidprob
