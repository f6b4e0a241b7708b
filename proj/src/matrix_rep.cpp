#include "braidprob/matrix_rep.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace braidprob {

size_t max_matrix_dim() {
  if (const char* env = std::getenv("BRAIDPROB_MAX_DIM")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 4096;
}

std::complex<double> gaussian_omega(int p) {
  double arg = p % 2 == 1 ? 2.0 * std::numbers::pi / p : std::numbers::pi / p;
  return {std::cos(arg), std::sin(arg)};
}

namespace {

// clock and shift legs: X|k> = |k+1 mod p>, Z = diag(1, zeta, ..., zeta^{p-1});
// with e_i = (Z*)^{otimes i} ox X ox 1... one gets e_i e_j = zeta e_j e_i for i < j
DenseMatrix clock(int p, std::complex<double> zeta) {
  DenseMatrix z(static_cast<size_t>(p));
  std::complex<double> acc = 1.0;
  for (int k = 0; k < p; ++k) {
    z.at(k, k) = acc;
    acc *= zeta;
  }
  return z;
}

DenseMatrix shift_matrix(int p) {
  DenseMatrix x(static_cast<size_t>(p));
  for (int k = 0; k < p; ++k) x.at((k + 1) % p, k) = 1.0;
  return x;
}

size_t ipow(int base, int exp) {
  size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= static_cast<size_t>(base);
  return r;
}

}  // namespace

GaussianRep build_gaussian(int p, int n, double tol) {
  if (p < 2 || n < 2) throw std::invalid_argument("build_gaussian: need p >= 2, n >= 2");
  size_t dim = ipow(p, n);
  if (dim > max_matrix_dim())
    throw std::invalid_argument("build_gaussian: dimension budget exceeded");
  GaussianRep rep;
  rep.p = p;
  rep.strands = n;
  rep.omega = gaussian_omega(p);
  std::complex<double> zeta = rep.omega * rep.omega;
  DenseMatrix z = clock(p, zeta);
  DenseMatrix zadj = z.adjoint();
  DenseMatrix x = shift_matrix(p);
  DenseMatrix ip = DenseMatrix::identity(static_cast<size_t>(p));
  for (int i = 0; i < n; ++i) {
    DenseMatrix leg = i == 0 ? x : zadj;
    DenseMatrix acc = leg;
    for (int j = 1; j < n; ++j) {
      const DenseMatrix& next = j < i ? zadj : (j == i ? x : ip);
      acc = DenseMatrix::kron(acc, next);
    }
    rep.e.push_back(std::move(acc));
  }
  // u_i = p^{-1/2} sum_k omega^{k^2} v_i^k with v_i = omega e_{i-1}* e_i
  for (int i = 1; i < n; ++i) {
    DenseMatrix v = rep.omega * (rep.e[i - 1].adjoint() * rep.e[i]);
    DenseMatrix acc = DenseMatrix::zero(dim);
    DenseMatrix vpow = DenseMatrix::identity(dim);
    for (int k = 0; k < p; ++k) {
      std::complex<double> w = std::pow(rep.omega, static_cast<double>(k) * k);
      acc = acc + w * vpow;
      vpow = vpow * v;
    }
    rep.u.push_back(std::complex<double>(1.0 / std::sqrt(static_cast<double>(p)), 0.0) * acc);
  }
  // validate the defining relations
  DenseMatrix id = DenseMatrix::identity(dim);
  for (int i = 0; i < n; ++i) {
    DenseMatrix epow = rep.e[i];
    for (int k = 1; k < p; ++k) epow = epow * rep.e[i];
    if (DenseMatrix::normalized_distance(epow, id) > tol)
      throw std::runtime_error("build_gaussian: e_i^p != 1");
    if (!rep.e[i].is_unitary(tol)) throw std::runtime_error("build_gaussian: e_i not unitary");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      DenseMatrix lhs = rep.e[i] * rep.e[j];
      DenseMatrix rhs = zeta * (rep.e[j] * rep.e[i]);
      if (DenseMatrix::normalized_distance(lhs, rhs) > tol)
        throw std::runtime_error("build_gaussian: e_i e_j != omega^2 e_j e_i");
    }
  BraidRelationReport rel = check_braid_relations(rep.u);
  if (!rel.pass(tol)) throw std::runtime_error("build_gaussian: braid relations failed");
  return rep;
}

std::pair<std::complex<double>, std::complex<double>> gaussian_nonexchangeability_trace(
    int p, int n) {
  if (n < 3) throw std::invalid_argument("gaussian_nonexchangeability_trace: need n >= 3");
  GaussianRep rep = build_gaussian(p, n);
  DenseMatrix a = rep.e[1] * rep.e[2] * rep.e[1].adjoint() * rep.e[2].adjoint();
  DenseMatrix b = rep.e[2] * rep.e[1] * rep.e[2].adjoint() * rep.e[1].adjoint();
  return {a.normalized_trace(), b.normalized_trace()};
}

bool check_ybe(const DenseMatrix& r_breve, double tol) {
  size_t d2 = r_breve.dim();
  size_t d = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(d2))));
  if (d * d != d2) throw std::invalid_argument("check_ybe: dimension is not a square");
  DenseMatrix id = DenseMatrix::identity(d);
  DenseMatrix r12 = DenseMatrix::kron(r_breve, id);
  DenseMatrix r23 = DenseMatrix::kron(id, r_breve);
  DenseMatrix lhs = r12 * r23 * r12;
  DenseMatrix rhs = r23 * r12 * r23;
  if (DenseMatrix::normalized_distance(lhs, rhs) > tol) return false;
  // flipped form R = P R-breve: R12 R13 R23 = R23 R13 R12
  DenseMatrix p(d2);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) p.at(a * d + b, b * d + a) = 1.0;
  DenseMatrix r = p * r_breve;
  DenseMatrix p23(d2 * d);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      for (size_t c = 0; c < d; ++c)
        p23.at((a * d + b) * d + c, (a * d + c) * d + b) = 1.0;
  DenseMatrix R12 = DenseMatrix::kron(r, id);
  DenseMatrix R23 = DenseMatrix::kron(id, r);
  DenseMatrix R13 = p23 * R12 * p23;
  DenseMatrix lhs2 = R12 * R13 * R23;
  DenseMatrix rhs2 = R23 * R13 * R12;
  return DenseMatrix::normalized_distance(lhs2, rhs2) <= tol;
}

DenseMatrix r_matrix_omega(std::complex<double> omega) {
  DenseMatrix r(4);
  r.at(0, 0) = 1.0;
  r.at(1, 2) = 1.0;
  r.at(2, 1) = 1.0;
  r.at(3, 3) = omega;
  return r;
}

namespace {

DenseMatrix embed_at_legs(const DenseMatrix& local, int first_leg, int legs, size_t leg_dim) {
  DenseMatrix acc = DenseMatrix::identity(1);
  acc.at(0, 0) = 1.0;
  DenseMatrix id = DenseMatrix::identity(leg_dim);
  int covered = static_cast<int>(std::llround(
      std::log(static_cast<double>(local.dim())) / std::log(static_cast<double>(leg_dim))));
  for (int leg = 0; leg < legs;) {
    if (leg == first_leg) {
      acc = DenseMatrix::kron(acc, local);
      leg += covered;
    } else {
      acc = DenseMatrix::kron(acc, id);
      ++leg;
    }
  }
  return acc;
}

}  // namespace

std::vector<DenseMatrix> r_matrix_braid_unitaries(const DenseMatrix& r_breve, int legs) {
  size_t d2 = r_breve.dim();
  size_t d = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(d2))));
  if (d * d != d2) throw std::invalid_argument("r_matrix_braid_unitaries: bad dimension");
  if (legs < 2) throw std::invalid_argument("r_matrix_braid_unitaries: need legs >= 2");
  if (ipow(static_cast<int>(d), legs) > max_matrix_dim())
    throw std::invalid_argument("r_matrix_braid_unitaries: dimension budget exceeded");
  std::vector<DenseMatrix> us;
  for (int i = 1; i < legs; ++i) us.push_back(embed_at_legs(r_breve, i - 1, legs, d));
  return us;
}

std::vector<DenseMatrix> r_matrix_braid_unitaries_mixed(
    const std::vector<std::complex<double>>& omegas, int legs) {
  if (static_cast<int>(omegas.size()) < legs - 1)
    throw std::invalid_argument("r_matrix_braid_unitaries_mixed: not enough omegas");
  std::vector<DenseMatrix> us;
  for (int i = 1; i < legs; ++i)
    us.push_back(embed_at_legs(r_matrix_omega(omegas[i - 1]), i - 1, legs, 2));
  return us;
}

DenseMatrix product_endomorphism(const std::vector<DenseMatrix>& us,
                                 const std::vector<int>& signs, const DenseMatrix& x,
                                 int level) {
  if (level < 0) throw std::invalid_argument("product_endomorphism: level must be >= 0");
  if (static_cast<size_t>(level + 1) > us.size())
    throw std::invalid_argument("product_endomorphism: insufficient factors");
  DenseMatrix prod = DenseMatrix::identity(x.dim());
  for (int i = 0; i <= level; ++i) {
    int s = i < static_cast<int>(signs.size()) ? signs[i] : 1;
    prod = prod * (s >= 0 ? us[i] : us[i].adjoint());
  }
  return prod * x * prod.adjoint();
}

DenseMatrix product_endomorphism_iterated(const std::vector<DenseMatrix>& us,
                                          const std::vector<int>& signs, const DenseMatrix& x,
                                          int times) {
  DenseMatrix y = x;
  for (int j = 1; j <= times; ++j) y = product_endomorphism(us, signs, y, j - 1);
  return y;
}

BraidRelationReport check_braid_relations(const std::vector<DenseMatrix>& us) {
  BraidRelationReport rep;
  for (const DenseMatrix& u : us) {
    DenseMatrix p = u * u.adjoint();
    rep.max_unitarity_residual =
        std::max(rep.max_unitarity_residual,
                 DenseMatrix::normalized_distance(p, DenseMatrix::identity(u.dim())));
  }
  for (size_t i = 0; i + 1 < us.size(); ++i) {
    DenseMatrix lhs = us[i] * us[i + 1] * us[i];
    DenseMatrix rhs = us[i + 1] * us[i] * us[i + 1];
    rep.max_b1_residual =
        std::max(rep.max_b1_residual, DenseMatrix::normalized_distance(lhs, rhs));
  }
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = i + 2; j < us.size(); ++j) {
      DenseMatrix lhs = us[i] * us[j];
      DenseMatrix rhs = us[j] * us[i];
      rep.max_b2_residual =
          std::max(rep.max_b2_residual, DenseMatrix::normalized_distance(lhs, rhs));
    }
  return rep;
}

PerturbedRep perturbed_rep(const std::vector<DenseMatrix>& us, const DenseMatrix& g,
                           double tol) {
  for (const DenseMatrix& u : us) {
    DenseMatrix lhs = g * u, rhs = u * g;
    if (DenseMatrix::normalized_distance(lhs, rhs) > tol)
      throw std::invalid_argument("perturbed_rep: g does not commute with every u_i");
  }
  PerturbedRep out;
  for (const DenseMatrix& u : us) out.us.push_back(g * u);
  out.relations = check_braid_relations(out.us);
  // smallest common Ad-period: Ad(u)^N = id iff u^N is scalar
  for (int N = 1; N <= 8 && out.ad_period == 0; ++N) {
    bool all = true;
    for (const DenseMatrix& u : us) {
      DenseMatrix upow = u;
      for (int k = 1; k < N; ++k) upow = upow * u;
      std::complex<double> lead = upow.at(0, 0);
      if (std::abs(lead) < 0.5 ||
          DenseMatrix::normalized_distance(upow, lead * DenseMatrix::identity(u.dim())) > tol) {
        all = false;
        break;
      }
    }
    if (all) out.ad_period = N;
  }
  if (out.ad_period > 0) {
    DenseMatrix gpow = g;
    for (int k = 1; k < out.ad_period; ++k) gpow = gpow * g;
    out.non_generating_flag =
        DenseMatrix::normalized_distance(gpow, DenseMatrix::identity(g.dim())) > tol;
  }
  return out;
}

// ---- Hecke ----

QPolynomial qpoly_add(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  QPolynomial r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

bool qpoly_is_zero(const QPolynomial& a) {
  for (const Rational& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Rational qpoly_eval(const QPolynomial& a, const Rational& q) {
  Rational acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * q + a[i];
  return acc;
}

std::string qpoly_to_string(const QPolynomial& a) {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += a[i].to_string();
    if (i == 1) s += " q";
    if (i > 1) s += " q^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

HeckeElement HeckeElement::unit(int n) {
  Perm id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) id[i] = i;
  return basis(std::move(id));
}

HeckeElement HeckeElement::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("HeckeElement: generator out of range");
  Perm w(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = k;
  std::swap(w[i - 1], w[i]);
  return basis(std::move(w));
}

HeckeElement HeckeElement::basis(Perm w) {
  HeckeElement x;
  x.terms_.emplace(std::move(w), QPolynomial{Rational(1)});
  return x;
}

void HeckeElement::add_term(const Perm& w, const QPolynomial& c) {
  if (qpoly_is_zero(c)) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second = qpoly_add(it->second, c);
    if (qpoly_is_zero(it->second)) terms_.erase(it);
  }
}

bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(w, c);
  return r;
}

HeckeElement hecke_scale(const QPolynomial& c, const HeckeElement& a) {
  HeckeElement r;
  for (const auto& [w, p] : a.terms()) r.add_term(w, qpoly_mul(c, p));
  return r;
}

namespace {

int perm_length(const HeckeElement::Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

// left multiplication T_{s_i} T_w in the T-basis:
// T_{s_i w} if l(s_i w) > l(w), else (q-1) T_w + q T_{s_i w}
void left_mul_generator(HeckeElement& out, int i, const HeckeElement::Perm& w,
                        const QPolynomial& c) {
  HeckeElement::Perm sw = w;
  // s_i acts on positions i-1, i after w: swap the VALUES i-1, i
  for (int& v : sw)
    if (v == i - 1)
      v = i;
    else if (v == i)
      v = i - 1;
  if (perm_length(sw) > perm_length(w)) {
    out.add_term(sw, c);
  } else {
    out.add_term(w, qpoly_mul(QPolynomial{Rational(-1), Rational(1)}, c));  // (q-1) c
    out.add_term(sw, qpoly_mul(QPolynomial{Rational(0), Rational(1)}, c));  // q c
  }
}

// reduced word of w as a product of adjacent transpositions (bubble sort)
std::vector<int> reduced_word(HeckeElement::Perm w) {
  std::vector<int> letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        letters.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  // letters sort w to the identity from the right: w = s_{l1} ... s_{lk}
  std::reverse(letters.begin(), letters.end());
  return letters;
}

}  // namespace

HeckeElement hecke_product(const HeckeElement& a, const HeckeElement& b, int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("hecke_product: n must be in [1, 7]");
  HeckeElement out;
  for (const auto& [v, cv] : a.terms()) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("hecke_product: rank");
    std::vector<int> letters = reduced_word(v);
    for (const auto& [w, cw] : b.terms()) {
      // T_v T_w = T_{l1} ... T_{lk} T_w, applied right to left
      HeckeElement acc;
      acc.add_term(w, qpoly_mul(cv, cw));
      for (size_t li = letters.size(); li-- > 0;) {
        HeckeElement next;
        for (const auto& [x, cx] : acc.terms()) left_mul_generator(next, letters[li], x, cx);
        acc = std::move(next);
      }
      for (const auto& [x, cx] : acc.terms()) out.add_term(x, cx);
    }
  }
  return out;
}

HeckeRelationReport hecke_check_relations(int n) {
  HeckeRelationReport rep;
  HeckeElement one = HeckeElement::unit(n);
  QPolynomial qm1{Rational(-1), Rational(1)};  // q - 1
  QPolynomial q{Rational(0), Rational(1)};
  for (int i = 1; i <= n - 1; ++i) {
    HeckeElement gi = HeckeElement::generator(n, i);
    HeckeElement lhs = hecke_product(gi, gi, n);
    HeckeElement rhs = hecke_add(hecke_scale(qm1, gi), hecke_scale(q, one));
    if (!(lhs == rhs)) rep.quadratic = false;
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      HeckeElement gi = HeckeElement::generator(n, i);
      HeckeElement gj = HeckeElement::generator(n, j);
      if (!(hecke_product(gi, gj, n) == hecke_product(gj, gi, n))) rep.commutation = false;
    }
  for (int i = 1; i + 1 <= n - 1; ++i) {
    HeckeElement gi = HeckeElement::generator(n, i);
    HeckeElement gj = HeckeElement::generator(n, i + 1);
    HeckeElement lhs = hecke_product(hecke_product(gi, gj, n), gi, n);
    HeckeElement rhs = hecke_product(hecke_product(gj, gi, n), gj, n);
    if (!(lhs == rhs)) rep.braid = false;
  }
  // q = 1: products of T's reproduce permutation composition
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      HeckeElement prod =
          hecke_product(HeckeElement::generator(n, i), HeckeElement::generator(n, j), n);
      // compose the transpositions: s_i then s_j acting by value swaps
      HeckeElement::Perm w(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) w[k] = k;
      std::swap(w[j - 1], w[j]);
      for (int& v : w)
        if (v == i - 1)
          v = i;
        else if (v == i)
          v = i - 1;
      Rational total(0);
      bool support_ok = true;
      for (const auto& [x, c] : prod.terms()) {
        Rational val = qpoly_eval(c, Rational(1));
        if (val.is_zero()) continue;
        if (x == w)
          total += val;
        else
          support_ok = false;
      }
      if (!support_ok || !(total == Rational(1))) rep.q1_degeneration = false;
    }
  return rep;
}

}  // namespace braidprob
