#pragma once

// Roots, coroots and admissibility for A_{2l}^{(2)} in the anti-homogeneous
// realization (horizontal subalgebra B_l). Weights are written in the basis
// eps_1..eps_l, delta, Lambda0c of H*.

#include "a2l2/liealg.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace a2l2 {

struct AffineWeight {
  std::vector<Scalar> eps;
  Scalar d_delta = 0;
  Scalar k0 = 0;

  AffineWeight() = default;
  explicit AffineWeight(int l) : eps(l, 0) {}
  AffineWeight(std::vector<Scalar> e, Scalar d, Scalar k) : eps(std::move(e)), d_delta(std::move(d)), k0(std::move(k)) {}

  int rank() const { return static_cast<int>(eps.size()); }

  void check_same(const AffineWeight& o) const {
    if (eps.size() != o.eps.size()) throw Error("AffineWeight: dimension mismatch");
  }
  AffineWeight& operator+=(const AffineWeight& o) {
    check_same(o);
    for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
    d_delta += o.d_delta;
    k0 += o.k0;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) { return *this += Scalar(-1) * o; }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Scalar& s, AffineWeight a) {
    for (auto& x : a.eps) x *= s;
    a.d_delta *= s;
    a.k0 *= s;
    return a;
  }
  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.eps == b.eps && a.d_delta == b.d_delta && a.k0 == b.k0;
  }

  /// "-3/2*L0 + 1/2*e1 + delta"; zero coefficients omitted.
  std::string to_string() const {
    std::vector<std::pair<Scalar, std::string>> parts;
    if (!is_zero(k0)) parts.emplace_back(k0, "L0");
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (!is_zero(eps[i])) parts.emplace_back(eps[i], "e" + std::to_string(i + 1));
    if (!is_zero(d_delta)) parts.emplace_back(d_delta, "delta");
    if (parts.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& [c, name] = parts[i];
      bool neg = sgn(c) < 0;
      os << (i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + "));
      Scalar mag = abs(c);
      if (mag != 1) os << mag << "*";
      os << name;
    }
    return os.str();
  }
};

inline AffineWeight epsilon(int l, int i) {
  AffineWeight w(l);
  w.eps.at(i - 1) = 1;
  return w;
}
inline AffineWeight delta(int l) { return AffineWeight(std::vector<Scalar>(l, 0), 1, 0); }
inline AffineWeight lambda0c(int l) { return AffineWeight(std::vector<Scalar>(l, 0), 0, 1); }

/// (eps_i, eps_j) = delta_ij, (delta, Lambda0c) = 1, all other pairings 0.
inline Scalar ip(const AffineWeight& x, const AffineWeight& y) {
  x.check_same(y);
  Scalar r = x.d_delta * y.k0 + x.k0 * y.d_delta;
  for (std::size_t i = 0; i < x.eps.size(); ++i) r += x.eps[i] * y.eps[i];
  return r;
}

/// (lam, root^vee) = 2 (lam, root) / (root, root).
inline Scalar coroot_pairing(const AffineWeight& lam, const AffineWeight& root) {
  Scalar n = ip(root, root);
  if (is_zero(n)) throw Error("coroot_pairing: isotropic root");
  return 2 * ip(lam, root) / n;
}

/// alpha_0 = delta - 2 eps_1, alpha_k = eps_k - eps_{k+1}, alpha_l = eps_l.
inline std::vector<AffineWeight> simple_roots(int l) {
  require_rank(l);
  std::vector<AffineWeight> a;
  a.push_back(delta(l) - Scalar(2) * epsilon(l, 1));
  for (int k = 1; k < l; ++k) a.push_back(epsilon(l, k) - epsilon(l, k + 1));
  a.push_back(epsilon(l, l));
  return a;
}

/// -H_theta + 1/2 c.
struct H0Expression {
  LieElt finite;
  Scalar central;
};

struct AlgebraData {
  int l = 0;
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<int> marks;
  std::vector<int> comarks;
  int h_dual = 0;
  H0Expression h0;
};

/// The generalized Cartan matrix as printed: [[2,-1],[-4,2]] for l = 1;
/// B_l-tridiagonal with a_01 = -1, a_10 = -2, a_{l,l-1} = -2 for l > 1.
inline std::vector<std::vector<int>> affine_cartan_matrix(int l) {
  require_rank(l);
  if (l == 1) return {{2, -1}, {-4, 2}};
  std::vector<std::vector<int>> a(l + 1, std::vector<int>(l + 1, 0));
  for (int i = 0; i <= l; ++i) {
    a[i][i] = 2;
    if (i + 1 <= l) a[i][i + 1] = -1;
    if (i > 0) a[i][i - 1] = -1;
  }
  a[1][0] = -2;
  a[l][l - 1] = -2;
  return a;
}

/// a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) from the eps realization.
inline std::vector<std::vector<Scalar>> cartan_from_roots(int l) {
  auto a = simple_roots(l);
  std::vector<std::vector<Scalar>> m(l + 1, std::vector<Scalar>(l + 1, 0));
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j) m[i][j] = coroot_pairing(a[j], a[i]);
  return m;
}

inline AlgebraData algebra_data(int l) {
  require_rank(l);
  AlgebraData d;
  d.l = l;
  d.cartan_matrix = affine_cartan_matrix(l);
  d.marks.assign(l + 1, 2);
  d.marks[0] = 1;
  d.comarks.assign(l + 1, 2);
  d.comarks[l] = 1;
  for (int c : d.comarks) d.h_dual += c;
  const int n = matrix_size(l);
  d.h0 = {Scalar(-1) * (E(n, 1, 1) - E(n, n, n)), rat(1, 2)};
  for (int i = 0; i <= l; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j <= l; ++j) {
      row += d.cartan_matrix[i][j] * d.marks[j];
      col += d.comarks[j] * d.cartan_matrix[j][i];
    }
    if (row != 0 || col != 0) throw Error("algebra_data: marks or comarks are not null vectors");
  }
  return d;
}

enum class RootKind { long_root, intermediate, short_root };

inline const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::long_root: return "long";
    case RootKind::intermediate: return "intermediate";
    case RootKind::short_root: return "short";
  }
  return "?";
}

/// Positive real roots { scale*classical + (delta_mul*m + delta_add) delta : m >= m_min }.
/// Long: 2 alpha + (2m+1) delta; otherwise alpha + m delta.
struct RealRootFamily {
  RootKind kind;
  AffineWeight classical;  // alpha, finite part only
  int m_min = 0;

  Scalar scale() const { return kind == RootKind::long_root ? 2 : 1; }
  AffineWeight root(long m) const {
    if (m < m_min) throw Error("RealRootFamily::root: parameter below family range");
    AffineWeight r = scale() * classical;
    r.d_delta = kind == RootKind::long_root ? Scalar(2 * m + 1) : Scalar(m);
    return r;
  }
  Scalar norm() const {
    switch (kind) {
      case RootKind::long_root: return 4;
      case RootKind::intermediate: return 2;
      case RootKind::short_root: return 1;
    }
    return 0;
  }
  std::string to_string() const {
    std::string a = classical.to_string();
    return kind == RootKind::long_root ? "2(" + a + ") + (2m+1)delta, m>=" + std::to_string(m_min)
                                       : "(" + a + ") + m*delta, m>=" + std::to_string(m_min);
  }
};

inline bool is_positive_classical(const AffineWeight& a) {
  for (const auto& x : a.eps)
    if (!is_zero(x)) return sgn(x) > 0;
  return false;
}

inline std::vector<AffineWeight> short_roots(int l) {
  std::vector<AffineWeight> r;
  for (int i = 1; i <= l; ++i) {
    r.push_back(epsilon(l, i));
    r.push_back(Scalar(-1) * epsilon(l, i));
  }
  return r;
}

inline std::vector<AffineWeight> long_roots(int l) {
  std::vector<AffineWeight> r;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) r.push_back(Scalar(si) * epsilon(l, i) + Scalar(sj) * epsilon(l, j));
  return r;
}

inline std::vector<RealRootFamily> positive_real_families(int l) {
  require_rank(l);
  std::vector<RealRootFamily> out;
  for (const auto& a : short_roots(l)) out.push_back({RootKind::long_root, a, 0});
  for (const auto& a : long_roots(l)) out.push_back({RootKind::intermediate, a, is_positive_classical(a) ? 0 : 1});
  for (const auto& a : short_roots(l)) out.push_back({RootKind::short_root, a, is_positive_classical(a) ? 0 : 1});
  return out;
}

/// (2l+1) Lambda0c + sum_i (l - i + 1/2) eps_i.
inline AffineWeight rho(int l) {
  require_rank(l);
  AffineWeight r(l);
  r.k0 = 2 * l + 1;
  for (int i = 1; i <= l; ++i) r.eps[i - 1] = Scalar(l - i) + rat(1, 2);
  return r;
}

/// omega_k = eps_1 + ... + eps_k (k < l), omega_l = (eps_1 + ... + eps_l) / 2.
inline AffineWeight fundamental_weight(int l, int k) {
  if (k < 1 || k > l) throw Error("fundamental_weight: index out of range");
  AffineWeight w(l);
  Scalar c = k == l ? rat(1, 2) : Scalar(1);
  for (int i = 0; i < k; ++i) w.eps[i] = c;
  return w;
}

/// (lam, gamma(m)^vee) = A + B m.
struct AffinePairing {
  Scalar A;
  Scalar B;
  Scalar at(long m) const { return A + B * m; }
};

inline AffinePairing family_pairing(const AffineWeight& lam, const RealRootFamily& f) {
  Scalar a = coroot_pairing(lam, f.root(f.m_min));
  Scalar b = coroot_pairing(lam, f.root(f.m_min + 1)) - a;
  return {Scalar(a - b * f.m_min), b};
}

/// Smallest m >= m_min with A + B m integral, if any; values repeat mod den(B).
inline std::optional<long> first_integral(const AffinePairing& p, long m_min) {
  const long period = p.B.get_den().get_si();
  for (long m = m_min; m < m_min + period; ++m)
    if (is_integer(p.at(m))) return m;
  return std::nullopt;
}

struct PairingWitness {
  RealRootFamily family;
  long m = 0;
  Scalar value;
};

struct AdmissibilityReport {
  bool condition1 = false;
  bool condition2 = false;
  int coroot_rank = 0;
  std::optional<PairingWitness> violation;  // condition 1 counterexample
  std::vector<PairingWitness> integral;     // lambda-integral coroots used for condition 2
  bool admissible() const { return condition1 && condition2; }
};

inline AdmissibilityReport check_admissible(const AffineWeight& lam) {
  const int l = lam.rank();
  require_rank(l);
  AdmissibilityReport rep;
  const AffineWeight shifted = lam + rho(l);
  rep.condition1 = true;
  for (const auto& f : positive_real_families(l)) {
    AffinePairing p = family_pairing(shifted, f);
    auto m = first_integral(p, f.m_min);
    if (!m) continue;
    bool bad = sgn(p.B) < 0 || (sgn(p.B) == 0 && sgn(p.A) <= 0) || sgn(p.at(*m)) <= 0;
    if (bad && rep.condition1) {
      rep.condition1 = false;
      rep.violation = PairingWitness{f, *m, p.at(*m)};
    }
  }
  IncrementalBasis<int> span;
  for (const auto& f : positive_real_families(l)) {
    AffinePairing p = family_pairing(lam, f);
    auto m = first_integral(p, f.m_min);
    if (!m) continue;
    const long period = p.B.get_den().get_si();
    for (long mm : {*m, *m + period}) {
      AffineWeight g = f.root(mm);
      Scalar s = Scalar(2) / f.norm();
      SparseVec<int> v;
      for (int i = 0; i < l; ++i)
        if (!is_zero(g.eps[i])) v.emplace(i, s * g.eps[i]);
      if (!is_zero(g.d_delta)) v.emplace(l, s * g.d_delta);
      span.insert(v);
      rep.integral.push_back({f, mm, p.at(mm)});
    }
  }
  rep.coroot_rank = static_cast<int>(span.rank());
  rep.condition2 = rep.coroot_rank == l + 1;
  return rep;
}

/// level + h_dual > 0, where the level is (lam, delta).
inline bool kw_positivity(const AffineWeight& lam) {
  return sgn(Scalar(ip(lam, delta(lam.rank())) + (2 * lam.rank() + 1))) > 0;
}

}  // namespace a2l2
