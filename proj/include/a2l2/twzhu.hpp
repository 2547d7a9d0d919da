#pragma once

// Projection of V(g, k) onto the nu-twisted Zhu algebra, identified with
// U(g0), and the objects derived from the image of the singular vector.

#include "a2l2/envelope.hpp"
#include "a2l2/vacuum.hpp"

#include <map>
#include <memory>
#include <vector>

namespace a2l2 {

struct ProjectionContext {
  std::shared_ptr<const TwistedSl> alg;
  Scalar level_k;
  static constexpr int T = 2;

  explicit ProjectionContext(int l) : alg(std::make_shared<const TwistedSl>(l)), level_k(alg->level()) {}
  explicit ProjectionContext(std::shared_ptr<const TwistedSl> a) : alg(std::move(a)), level_k(alg->level()) {}

  int l() const { return alg->rank(); }
};

namespace detail {

/// Recursive evaluation of the projection over the eigen basis, memoized
/// per monomial. Not shared across threads.
class Projector {
 public:
  explicit Projector(const ProjectionContext& ctx)
      : alg_(ctx.alg), modes_(*ctx.alg->eigen(), ctx.level_k) {}

  UEAElt project(const VermaState::Terms& terms) {
    UEAElt r(alg_);
    for (const auto& [w, c] : terms) r += c * monomial(w);
    return r;
  }

 private:
  bool odd(int idx) const { return idx >= alg_->g0_dim(); }

  const UEAElt& monomial(const ModeMonomial& w) {
    auto hit = memo_.find(w);
    if (hit != memo_.end()) return hit->second;
    UEAElt r(alg_);
    int odd_count = 0;
    for (const auto& m : w) odd_count += odd(m.index) ? 1 : 0;
    if (w.empty()) {
      r = UEAElt::one(alg_);
    } else if (odd_count % 2 == 0) {
      const Mode head = w.front();
      ModeMonomial rest(w.begin() + 1, w.end());
      if (!odd(head.index)) {
        // a(-p) rest -> (-1)^(p-1) [rest] a
        Scalar sign = head.depth % 2 == 1 ? 1 : -1;
        r = sign * (monomial(rest) * UEAElt::generator(alg_, head.index));
      } else {
        // a(-p) rest -> -sum_{j>=1} binom(1/2, j) [a(-p+j) rest]
        const int top = head.depth + total_depth(rest);
        for (int j = 1; j <= top; ++j) {
          VermaState::Terms shifted;
          modes_.act(shifted, head.index, j - head.depth, rest, 1);
          if (shifted.empty()) continue;
          Scalar coeff = -binom_half(j);
          for (const auto& [v, c] : shifted) r += Scalar(coeff * c) * monomial(v);
        }
      }
    }
    return memo_.emplace(w, std::move(r)).first->second;
  }

  std::shared_ptr<const TwistedSl> alg_;
  ModeEngine modes_;
  std::map<ModeMonomial, UEAElt> memo_;
};

}  // namespace detail

/// [[s]] in U(g0).
inline UEAElt project(const VermaState& s, const ProjectionContext& ctx) {
  if (s.level() != ctx.level_k) throw Error("project: level mismatch");
  if (s.depth() > max_state_depth) throw Error("project: depth cap exceeded");
  VermaState e = change_basis(s, ctx.alg->eigen());
  detail::Projector p(ctx);
  return p.project(e.terms());
}

/// Closed form of [[a(-1) b(-1) |0>]]:
/// b+ a+ - 1/2 [a-, b-] + (k/8) <a-, b->.
inline UEAElt projab_closed_form(const LieElt& a, const LieElt& b, const ProjectionContext& ctx) {
  const auto& alg = ctx.alg;
  GradedPair<Scalar> sa = split_pm(a), sb = split_pm(b);
  UEAElt r = UEAElt::from_lie(alg, sb.plus) * UEAElt::from_lie(alg, sa.plus);
  r -= rat(1, 2) * UEAElt::from_lie(alg, bracket(sa.minus, sb.minus));
  r += Scalar(ctx.level_k / 8 * invariant_form(sa.minus, sb.minus)) * UEAElt::one(alg);
  return r;
}

inline VermaState perse_vector(const ProjectionContext& ctx) { return perse_vector(*ctx.alg); }

inline UEAElt zhu_singular_image(const ProjectionContext& ctx) { return project(perse_vector(ctx), ctx); }

/// sum_{i=1}^{2l-1} E+_{i+1,2l+1} E+_{1,i+1}
inline UEAElt zhu_singular_image_closed_form(const ProjectionContext& ctx) {
  const auto& alg = *ctx.alg;
  const int l = ctx.l(), n = alg.matrix_size();
  UEAElt r(ctx.alg);
  for (int i = 1; i <= 2 * l - 1; ++i) r += lie_product(ctx.alg, {alg.e_plus(i + 1, n), alg.e_plus(1, i + 1)});
  return r;
}

/// E_{l+1,1} - (-1)^l E_{2l+1,l+1}
inline LieElt v1_lowering(int l) {
  const int n = matrix_size(l);
  return E(n, l + 1, 1) - Scalar(sign_pow(l)) * E(n, n, l + 1);
}

inline UEAElt compute_v1(const ProjectionContext& ctx, const UEAElt& image) {
  return Scalar(2) * ad_L(v1_lowering(ctx.l()), image);
}

inline UEAElt compute_v1(const ProjectionContext& ctx) { return compute_v1(ctx, zhu_singular_image(ctx)); }

/// The four-group closed form of v1, assembled from matrix units.
inline UEAElt v1_closed_form(const ProjectionContext& ctx) {
  const int l = ctx.l(), n = matrix_size(l);
  const Scalar sl = sign_pow(l);
  auto up = [&](int i) { return E(n, 1, i + 1) - Scalar(sign_pow(i)) * E(n, n - i, n); };
  auto mid = [&](int i) { return E(n, i + 1, l + 1) - Scalar(sign_pow(l - i)) * E(n, l + 1, n - i); };
  const LieElt top = E(n, 1, l + 1) - sl * E(n, l + 1, n);
  UEAElt r(ctx.alg);
  for (int i = 1; i < l; ++i) r += sl * lie_product(ctx.alg, {up(i), mid(i)});
  r += sl * lie_product(ctx.alg, {E(n, 1, 1) - E(n, n, n), top});
  r -= Scalar(sl / 2) * UEAElt::from_lie(ctx.alg, top);
  for (int i = l + 1; i <= 2 * l - 1; ++i) r += sl * lie_product(ctx.alg, {mid(i), up(i)});
  return r;
}

/// -(-1)^j (f_j ... f_1 f_{j+1} ... f_l)_L v1, the rightmost factor acting first.
inline std::vector<UEAElt> lowered_elements(const ProjectionContext& ctx, const UEAElt& v1) {
  const int l = ctx.l();
  BTypeGenerators g = b_type_generators(l);
  std::vector<UEAElt> out;
  for (int j = 1; j <= l; ++j) {
    UEAElt u = v1;
    for (int i = l; i > j; --i) u = ad_L(g.f[i - 1], u);
    for (int i = 1; i <= j; ++i) u = ad_L(g.f[i - 1], u);
    out.push_back(Scalar(-sign_pow(j)) * u);
  }
  return out;
}

inline std::vector<CartanPoly> lowered_polynomials(const ProjectionContext& ctx, const UEAElt& v1) {
  std::vector<CartanPoly> out;
  for (const auto& u : lowered_elements(ctx, v1)) {
    if (!is_weight_zero(u)) throw Error("lowered_polynomials: lowered element is not of weight zero");
    out.push_back(cartan_polynomial(u));
  }
  return out;
}

inline std::vector<CartanPoly> lowered_polynomials(const ProjectionContext& ctx) {
  return lowered_polynomials(ctx, compute_v1(ctx));
}

/// h_j in the variables (h_1..h_{l-1}, hbar_l); h_l = hbar_l / 2.
inline CartanPoly cartan_h(int l, int j) {
  CartanPoly x = CartanPoly::variable(l, j - 1);
  return j == l ? rat(1, 2) * x : x;
}

/// h_j (h_j + 2 sum_{j<i<=l} h_i + (l-j) + shift).
inline CartanPoly expected_polynomial(int l, int j, const Scalar& shift) {
  CartanPoly inner = cartan_h(l, j) + CartanPoly::constant(l, Scalar(l - j) + shift);
  for (int i = j + 1; i <= l; ++i) inner = inner + Scalar(2) * cartan_h(l, i);
  return cartan_h(l, j) * inner;
}

/// 1/4 hbar_l (hbar_l - 1).
inline CartanPoly expected_top_polynomial(int l) {
  CartanPoly x = CartanPoly::variable(l, l - 1);
  return rat(1, 4) * (x * (x - CartanPoly::constant(l, 1)));
}

/// Weight-zero part of ad_L(U(g0)) [[v]], as a basis.
inline std::vector<UEAElt> r0_basis(const ProjectionContext& ctx, const UEAElt& image) {
  const auto& alg = *ctx.alg;
  auto w0 = weight_of(image);
  if (!w0) throw Error("r0_basis: image is not a weight vector");
  auto apply = [&](int op, const SparseVec<PBWMonomial>& x) {
    UEAElt u(ctx.alg, UEAElt::Terms(x.begin(), x.end()));
    return ad_basis(op, u).terms();
  };
  auto shift = [&](int op) -> const std::vector<Scalar>& { return alg.g0_weight(op); };
  auto spans = weighted_closure<PBWMonomial>(image.terms(), *w0, alg.g0_dim(), apply, shift);
  std::vector<UEAElt> out;
  auto it = spans.find(std::vector<Scalar>(ctx.l(), 0));
  if (it == spans.end()) return out;
  for (const auto& r : it->second.rows()) out.emplace_back(ctx.alg, UEAElt::Terms(r.begin(), r.end()));
  return out;
}

inline std::vector<UEAElt> r0_basis(const ProjectionContext& ctx) { return r0_basis(ctx, zhu_singular_image(ctx)); }

/// Rank of a family of polynomials as vectors of coefficients.
inline std::size_t poly_rank(const std::vector<CartanPoly>& ps) {
  IncrementalBasis<CartanPoly::Exponents> b;
  for (const auto& p : ps) b.insert(p.terms());
  return b.rank();
}

/// True iff the two families span the same space.
inline bool same_poly_span(const std::vector<CartanPoly>& a, const std::vector<CartanPoly>& b) {
  std::vector<CartanPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = poly_rank(both);
  return r == poly_rank(a) && r == poly_rank(b);
}

}  // namespace a2l2
