#pragma once

// Highest weights of the top spaces: the closed-form list, the zero set of
// the polynomials, and the hand-off to affine weights.

#include "a2l2/affroots.hpp"
#include "a2l2/cartan_poly.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace a2l2 {

/// A B_l weight stored by its values on (h_1, ..., h_{l-1}, hbar_l).
class FiniteWeight {
 public:
  FiniteWeight() = default;
  explicit FiniteWeight(std::vector<Scalar> coroot_vals) : vals_(std::move(coroot_vals)) {
    require_rank(rank());
  }

  static FiniteWeight zero(int l) { return FiniteWeight(std::vector<Scalar>(l, 0)); }
  static FiniteWeight omega(int l, int k) {
    if (k < 1 || k > l) throw Error("FiniteWeight::omega: index out of range");
    FiniteWeight w = zero(l);
    w.vals_[k - 1] = 1;
    return w;
  }
  static FiniteWeight from_eps(const std::vector<Scalar>& eps) {
    const int l = static_cast<int>(eps.size());
    AffineWeight a(eps, 0, 0);
    auto roots = simple_roots(l);
    std::vector<Scalar> vals;
    for (int k = 1; k <= l; ++k) vals.push_back(coroot_pairing(a, roots[k]));
    return FiniteWeight(std::move(vals));
  }

  int rank() const { return static_cast<int>(vals_.size()); }
  const std::vector<Scalar>& coroot_vals() const { return vals_; }

  std::vector<Scalar> eps_coords() const {
    const int l = rank();
    std::vector<Scalar> e(l, 0);
    for (int k = 1; k <= l; ++k) {
      AffineWeight w = fundamental_weight(l, k);
      for (int i = 0; i < l; ++i) e[i] += vals_[k - 1] * w.eps[i];
    }
    return e;
  }

  friend FiniteWeight operator+(FiniteWeight a, const FiniteWeight& b) {
    if (a.rank() != b.rank()) throw Error("FiniteWeight: rank mismatch");
    for (int i = 0; i < a.rank(); ++i) a.vals_[i] += b.vals_[i];
    return a;
  }
  friend FiniteWeight operator*(const Scalar& s, FiniteWeight a) {
    for (auto& v : a.vals_) v *= s;
    return a;
  }
  friend bool operator==(const FiniteWeight& a, const FiniteWeight& b) { return a.vals_ == b.vals_; }
  friend bool operator<(const FiniteWeight& a, const FiniteWeight& b) { return a.vals_ < b.vals_; }

  /// "0", "w2", "-1/2*w1 + w2".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < rank(); ++k) {
      const Scalar& c = vals_[k];
      if (is_zero(c)) continue;
      bool neg = sgn(c) < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      Scalar mag = abs(c);
      if (mag != 1) os << mag << "*";
      os << "w" << k + 1;
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  std::vector<Scalar> vals_;
};

/// mu_S (primed = false) or mu'_S; S is a strictly increasing subset of {1..l-1}.
inline FiniteWeight mu_weight(int l, const std::vector<int>& S, bool primed) {
  require_rank(l);
  for (std::size_t a = 0; a < S.size(); ++a) {
    if (S[a] < 1 || S[a] > l - 1) throw Error("mu_weight: subset element out of range");
    if (a > 0 && S[a] <= S[a - 1]) throw Error("mu_weight: subset must be strictly increasing");
  }
  const int k = static_cast<int>(S.size());
  const Scalar shift = Scalar(l) + (primed ? rat(1, 2) : rat(-1, 2));
  FiniteWeight mu = primed ? FiniteWeight::omega(l, l) : FiniteWeight::zero(l);
  for (int j = 1; j <= k; ++j) {
    Scalar c = S[j - 1];
    for (int s = j + 1; s <= k; ++s) c += 2 * sign_pow(s - j) * S[s - 1];
    c += sign_pow(k - j + 1) * shift;
    mu = mu + c * FiniteWeight::omega(l, S[j - 1]);
  }
  return mu;
}

/// All subsets of {1..l-1}, each in increasing order.
inline std::vector<std::vector<int>> subsets_below(int l) {
  std::vector<std::vector<int>> out;
  const int m = l - 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

/// {mu_S, mu'_S : S subset of {1..l-1}}.
inline std::set<FiniteWeight> classified_weights(int l) {
  std::set<FiniteWeight> out;
  for (const auto& s : subsets_below(l))
    for (bool primed : {false, true}) out.insert(mu_weight(l, s, primed));
  return out;
}

inline std::vector<Scalar> eval_polys(const std::vector<CartanPoly>& polys, const FiniteWeight& mu) {
  std::vector<Scalar> out;
  for (const auto& p : polys) {
    if (p.nvars() != mu.rank()) throw Error("eval_polys: arity mismatch");
    out.push_back(p.eval(mu.coroot_vals()));
  }
  return out;
}

/// p_j = x_j * L_j with L_j affine-linear.
struct FactoredPoly {
  int var = 0;
  CartanPoly linear;
};

inline FactoredPoly factor_polynomial(const CartanPoly& p, int var) {
  auto q = p.divide_by_variable(var);
  if (!q || q->degree() != 1) throw Error("factor_polynomial: polynomial is not x_j times an affine form");
  return {var, *q};
}

/// Common zeros of p_1..p_l, found by solving every choice of one vanishing
/// factor per p_j; the j-th factor pair may only involve x_j..x_l.
inline std::set<FiniteWeight> zero_set_oracle(const std::vector<CartanPoly>& polys) {
  const int l = static_cast<int>(polys.size());
  require_rank(l);
  std::vector<FactoredPoly> f;
  for (int j = 0; j < l; ++j) {
    if (polys[j].nvars() != l) throw Error("zero_set_oracle: arity mismatch");
    f.push_back(factor_polynomial(polys[j], j));
  }
  auto coeff = [&](const CartanPoly& lin, int v) {
    CartanPoly::Exponents e(l, 0);
    e[v] = 1;
    return lin.coeff(e);
  };
  std::set<FiniteWeight> out;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<Scalar> x(l, 0);
    for (int j = l - 1; j >= 0; --j) {
      if (!(mask & (1u << j))) {
        x[j] = 0;
        continue;
      }
      const CartanPoly& lin = f[j].linear;
      for (int v = 0; v < j; ++v)
        if (!is_zero(coeff(lin, v))) throw Error("zero_set_oracle: branch system is not triangular");
      Scalar a = coeff(lin, j);
      if (is_zero(a)) throw Error("zero_set_oracle: branch system has no unique solution");
      Scalar rest = lin.coeff(CartanPoly::Exponents(l, 0));
      for (int v = j + 1; v < l; ++v) rest += coeff(lin, v) * x[v];
      x[j] = -rest / a;
    }
    FiniteWeight w(x);
    for (const auto& p : polys)
      if (!is_zero(p.eval(x))) throw Error("zero_set_oracle: branch solution is not a common zero");
    out.insert(std::move(w));
  }
  return out;
}

inline std::set<FiniteWeight> dominant_integral_filter(const std::set<FiniteWeight>& ws) {
  std::set<FiniteWeight> out;
  for (const auto& w : ws) {
    bool ok = true;
    for (const auto& v : w.coroot_vals()) ok = ok && is_integer(v) && sgn(v) >= 0;
    if (ok) out.insert(w);
  }
  return out;
}

/// (-l - 1/2) Lambda0c + mu.
inline AffineWeight affinize(const FiniteWeight& mu, int l) {
  if (mu.rank() != l) throw Error("affinize: rank mismatch");
  return AffineWeight(mu.eps_coords(), 0, Scalar(-l) - rat(1, 2));
}

/// p_j written as "h{j}*(...)" in the unnormalized variables h_1..h_l.
inline std::string factored_h_string(const CartanPoly& p, int j) {
  const int l = p.nvars();
  std::vector<CartanPoly> images;
  for (int v = 0; v < l; ++v) {
    CartanPoly x = CartanPoly::variable(l, v);
    images.push_back(v == l - 1 ? Scalar(2) * x : x);
  }
  CartanPoly h = p.substitute(images);
  auto q = h.divide_by_variable(j - 1);
  std::vector<std::string> names;
  for (int v = 1; v <= l; ++v) names.push_back("h" + std::to_string(v));
  if (!q) return h.to_string(names);
  return names[j - 1] + "*(" + q->to_string(names) + ")";
}

}  // namespace a2l2
