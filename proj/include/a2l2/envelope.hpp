#pragma once

// U(g0): PBW normal form over the canonical g0 basis, the adjoint action
// x_L u = [x, u], and the Cartan polynomial of a weight-zero element.

#include "a2l2/cartan_poly.hpp"
#include "a2l2/liealg.hpp"
#include "a2l2/pbw.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace a2l2 {

using PBWMonomial = pbw::Word<int>;

/// Element of U(g0): a combination of nondecreasing monomials in the g0
/// basis indices of a fixed TwistedSl.
class UEAElt {
 public:
  using Terms = pbw::Terms<int>;

  UEAElt() = default;
  explicit UEAElt(std::shared_ptr<const TwistedSl> alg) : alg_(std::move(alg)) {}
  UEAElt(std::shared_ptr<const TwistedSl> alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
    for (const auto& [w, c] : terms_)
      if (!pbw::is_sorted_word(w) || a2l2::is_zero(c)) throw Error("UEAElt: terms must be normal-ordered and nonzero");
  }

  static UEAElt one(std::shared_ptr<const TwistedSl> alg) {
    UEAElt u(std::move(alg));
    u.terms_.emplace(PBWMonomial{}, 1);
    return u;
  }
  static UEAElt generator(std::shared_ptr<const TwistedSl> alg, int a) {
    if (a < 0 || a >= alg->g0_dim()) throw Error("UEAElt::generator: index out of range");
    UEAElt u(std::move(alg));
    u.terms_.emplace(PBWMonomial{a}, 1);
    return u;
  }
  /// Degree-one element for x in g0; throws if x is not nu-fixed.
  static UEAElt from_lie(std::shared_ptr<const TwistedSl> alg, const LieElt& x) {
    auto c = alg->g0()->try_coords(x);
    if (!c) throw Error("UEAElt::from_lie: element is not in g0");
    UEAElt u(std::move(alg));
    for (const auto& [a, w] : *c) u.terms_.emplace(PBWMonomial{a}, w);
    return u;
  }

  const std::shared_ptr<const TwistedSl>& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void check_same(const UEAElt& o) const {
    if (alg_ != o.alg_ && (!alg_ || !o.alg_ || alg_->rank() != o.alg_->rank()))
      throw Error("UEAElt: basis mismatch");
  }

  UEAElt& operator+=(const UEAElt& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
    return *this;
  }
  UEAElt& operator-=(const UEAElt& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add_term(terms_, w, Scalar(-c));
    return *this;
  }
  friend UEAElt operator+(UEAElt a, const UEAElt& b) { return a += b; }
  friend UEAElt operator-(UEAElt a, const UEAElt& b) { return a -= b; }
  friend UEAElt operator*(const Scalar& s, UEAElt a) {
    if (a2l2::is_zero(s)) a.terms_.clear();
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const UEAElt& a, const UEAElt& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    a.check_same(b);
    return a.terms_ == b.terms_;
  }

  /// "c*E+[1,2]*h1^2 + ..." using g0 basis labels; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!mono.empty()) mono += "*";
        mono += alg_->g0()->label(w[i]);
        if (j - i > 1) mono += "^" + std::to_string(j - i);
        i = j;
      }
      Scalar mag = abs(c);
      bool neg = sgn(c) < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mono.empty())
        os << mag;
      else if (mag == 1)
        os << mono;
      else
        os << mag << "*" << mono;
      first = false;
    }
    return os.str();
  }

 private:
  void adopt(const UEAElt& o) {
    if (!alg_) {
      alg_ = o.alg_;
      return;
    }
    if (o.alg_) check_same(o);
  }

  std::shared_ptr<const TwistedSl> alg_;
  Terms terms_;
};

namespace detail {

struct G0Bracket {
  const LieBasis* basis;
  const LieBasis::Coords& operator()(int y, int x) const { return basis->bracket_coords(y, x); }
};

inline pbw::Straightener<int, G0Bracket> g0_straightener(const TwistedSl& alg,
                                                         pbw::Schedule s = pbw::Schedule::leftmost) {
  return pbw::Straightener<int, G0Bracket>(G0Bracket{alg.g0().get()}, s);
}

}  // namespace detail

/// coeff * word, rewritten into PBW normal form.
inline UEAElt normal_form(const std::shared_ptr<const TwistedSl>& alg, const PBWMonomial& word, const Scalar& coeff,
                          pbw::Schedule schedule = pbw::Schedule::leftmost) {
  for (int a : word)
    if (a < 0 || a >= alg->g0_dim()) throw Error("normal_form: basis index out of range");
  auto st = detail::g0_straightener(*alg, schedule);
  UEAElt::Terms out;
  st.accumulate(out, word, coeff);
  return UEAElt(alg, std::move(out));
}

inline UEAElt uea_mul(const UEAElt& u, const UEAElt& v) {
  if (u.is_zero() || v.is_zero()) return UEAElt(u.algebra() ? u.algebra() : v.algebra());
  u.check_same(v);
  auto st = detail::g0_straightener(*u.algebra());
  UEAElt::Terms out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) {
      PBWMonomial w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      st.accumulate(out, w, Scalar(cu * cv));
    }
  return UEAElt(u.algebra(), std::move(out));
}

inline UEAElt operator*(const UEAElt& u, const UEAElt& v) { return uea_mul(u, v); }

/// Product of degree-one elements x_1 x_2 ... x_m of g0, normal-ordered.
inline UEAElt lie_product(const std::shared_ptr<const TwistedSl>& alg, const std::vector<LieElt>& factors) {
  UEAElt r = UEAElt::one(alg);
  for (const auto& x : factors) r = r * UEAElt::from_lie(alg, x);
  return r;
}

/// ad_L for a single g0 basis element b: sum over positions of
/// x_1 .. [b, x_p] .. x_m.
inline UEAElt ad_basis(int b, const UEAElt& u) {
  const auto& alg = u.algebra();
  if (!alg) return u;
  auto st = detail::g0_straightener(*alg);
  const LieBasis& g0 = *alg->g0();
  UEAElt::Terms out;
  for (const auto& [w, c] : u.terms())
    for (std::size_t p = 0; p < w.size(); ++p)
      for (const auto& [letter, bc] : g0.bracket_coords(b, w[p])) {
        PBWMonomial v = w;
        v[p] = letter;
        st.accumulate(out, v, Scalar(c * bc));
      }
  return UEAElt(alg, std::move(out));
}

/// x_L u = [x, u] for x in g0.
inline UEAElt ad_L(const LieElt& x, const UEAElt& u) {
  const auto& alg = u.algebra();
  if (!alg) return u;
  auto c = alg->g0()->try_coords(x);
  if (!c) throw Error("ad_L: acting element is not in g0");
  UEAElt r(alg);
  for (const auto& [b, w] : *c) r += w * ad_basis(b, u);
  return r;
}

/// h0-weight (values on h_1..h_{l-1}, hbar_l) of a PBW monomial.
inline std::vector<Scalar> monomial_weight(const TwistedSl& alg, const PBWMonomial& w) {
  std::vector<Scalar> wt(alg.rank(), 0);
  for (int a : w)
    for (int v = 0; v < alg.rank(); ++v) wt[v] += alg.g0_weight(a)[v];
  return wt;
}

/// The common weight of all monomials of u, or nullopt if u is not a weight
/// vector. Zero has no defined weight.
inline std::optional<std::vector<Scalar>> weight_of(const UEAElt& u) {
  if (u.is_zero()) return std::nullopt;
  std::optional<std::vector<Scalar>> wt;
  for (const auto& [w, c] : u.terms()) {
    auto mw = monomial_weight(*u.algebra(), w);
    if (!wt)
      wt = mw;
    else if (*wt != mw)
      return std::nullopt;
  }
  return wt;
}

/// True iff [h, u] = 0 for every Cartan generator h of g0.
inline bool is_weight_zero(const UEAElt& u) {
  if (u.is_zero()) return true;
  const auto& alg = *u.algebra();
  for (int v = 0; v < alg.rank(); ++v)
    if (!ad_basis(alg.cartan_begin() + v, u).is_zero()) return false;
  return true;
}

/// Image of a weight-zero u in S(h0) modulo U(g0) n+: the pure-Cartan part
/// of its normal form, in variables (h_1, ..., h_{l-1}, hbar_l).
inline CartanPoly cartan_polynomial(const UEAElt& u) {
  if (!u.algebra()) return CartanPoly();
  const auto& alg = *u.algebra();
  if (!is_weight_zero(u)) throw Error("cartan_polynomial: element is not of h0-weight zero");
  CartanPoly p(alg.rank());
  for (const auto& [w, c] : u.terms()) {
    bool pure = true;
    CartanPoly::Exponents e(alg.rank(), 0);
    for (int a : w) {
      if (!alg.is_cartan(a)) {
        pure = false;
        break;
      }
      ++e[a - alg.cartan_begin()];
    }
    if (pure) p.add(e, c);
  }
  return p;
}

/// Remainder u - (Cartan part); lies in U(g0) n+ when every monomial ends in a positive factor.
inline bool remainder_in_left_ideal(const UEAElt& u) {
  const auto& alg = *u.algebra();
  for (const auto& [w, c] : u.terms()) {
    bool pure = true;
    for (int a : w) pure = pure && alg.is_cartan(a);
    if (!pure && (w.empty() || !alg.is_positive(w.back()))) return false;
  }
  return true;
}

}  // namespace a2l2
