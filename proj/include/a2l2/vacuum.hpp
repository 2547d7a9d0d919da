#pragma once

// The level-k vacuum module V(g, k) of the untwisted affinization of
// sl(2l+1): states are normal-ordered products of creation modes a(-n),
// n >= 1, applied to the vacuum.

#include "a2l2/liealg.hpp"
#include "a2l2/pbw.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace a2l2 {

/// Creation mode b(-depth) for basis element b.
struct Mode {
  int depth = 1;
  int index = 0;

  // Deeper modes sort first; ties by basis index.
  friend bool operator<(const Mode& a, const Mode& b) {
    return a.depth != b.depth ? a.depth > b.depth : a.index < b.index;
  }
  friend bool operator==(const Mode& a, const Mode& b) { return a.depth == b.depth && a.index == b.index; }
};

using ModeMonomial = pbw::Word<Mode>;

inline int total_depth(const ModeMonomial& w) {
  int d = 0;
  for (const auto& m : w) d += m.depth;
  return d;
}

inline constexpr int max_state_depth = 8;

/// A vector of V(g, k), expanded over normal-ordered mode monomials in a
/// fixed basis of g.
class VermaState {
 public:
  using Terms = pbw::Terms<Mode>;

  VermaState() = default;
  VermaState(std::shared_ptr<const LieBasis> basis, Scalar level) : basis_(std::move(basis)), level_(std::move(level)) {}
  VermaState(std::shared_ptr<const LieBasis> basis, Scalar level, Terms terms)
      : basis_(std::move(basis)), level_(std::move(level)), terms_(std::move(terms)) {
    for (const auto& [w, c] : terms_) {
      if (!pbw::is_sorted_word(w) || a2l2::is_zero(c)) throw Error("VermaState: terms must be normal-ordered and nonzero");
      for (const auto& m : w)
        if (m.depth < 1 || m.index < 0 || m.index >= basis_->dim()) throw Error("VermaState: bad mode");
      if (total_depth(w) > max_state_depth) throw Error("VermaState: depth cap exceeded");
    }
  }

  static VermaState vacuum(std::shared_ptr<const LieBasis> basis, Scalar level) {
    VermaState s(std::move(basis), std::move(level));
    s.terms_.emplace(ModeMonomial{}, 1);
    return s;
  }

  const std::shared_ptr<const LieBasis>& basis() const { return basis_; }
  const Scalar& level() const { return level_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest total depth over the monomials; -1 for the zero state.
  int depth() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, total_depth(w));
    return d;
  }

  void check_same(const VermaState& o) const {
    if (basis_ != o.basis_ || level_ != o.level_) throw Error("VermaState: module mismatch");
  }

  VermaState& operator+=(const VermaState& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
    return *this;
  }
  VermaState& operator-=(const VermaState& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(terms_, w, Scalar(-c));
    return *this;
  }
  friend VermaState operator+(VermaState a, const VermaState& b) { return a += b; }
  friend VermaState operator-(VermaState a, const VermaState& b) { return a -= b; }
  friend VermaState operator*(const Scalar& s, VermaState a) {
    if (a2l2::is_zero(s)) a.terms_.clear();
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const VermaState& a, const VermaState& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
  }

  /// "1/3*E[1,3](-1)H[1](-1)|0> - 1/2*E[1,3](-2)|0>"; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string mono;
      for (const auto& m : w) mono += basis_->label(m.index) + "(-" + std::to_string(m.depth) + ")";
      mono += "|0>";
      Scalar mag = abs(c);
      bool neg = sgn(c) < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mag != 1) os << mag << "*";
      os << mono;
      first = false;
    }
    return os.str();
  }

 private:
  std::shared_ptr<const LieBasis> basis_;
  Scalar level_;
  Terms terms_;
};

/// x(n) for x in g and any integer n.
struct ModeOp {
  LieElt elt;
  int mode = 0;
};

namespace detail {

struct ModeBracket {
  const LieBasis* basis;
  // [y(-p), x(-q)] = [y, x](-p-q); no central term for two creation modes.
  std::vector<std::pair<Mode, Scalar>> operator()(const Mode& y, const Mode& x) const {
    std::vector<std::pair<Mode, Scalar>> out;
    for (const auto& [c, w] : basis->bracket_coords(y.index, x.index)) out.emplace_back(Mode{y.depth + x.depth, c}, w);
    return out;
  }
};

/// Mode actions on monomials for one module, memoized for the lifetime of
/// the object. Not shared across threads.
class ModeEngine {
 public:
  ModeEngine(const LieBasis& basis, Scalar level)
      : basis_(basis), level_(std::move(level)), straight_(ModeBracket{&basis}) {}

  /// out += coeff * b(n) w for basis index b.
  void act(VermaState::Terms& out, int b, int n, const ModeMonomial& w, const Scalar& coeff) {
    if (a2l2::is_zero(coeff)) return;
    if (n < 0) {
      if (total_depth(w) - n > max_state_depth) throw Error("mode_action: depth cap exceeded");
      ModeMonomial word;
      word.reserve(w.size() + 1);
      word.push_back(Mode{-n, b});
      word.insert(word.end(), w.begin(), w.end());
      straight_.accumulate(out, word, coeff);
      return;
    }
    for (const auto& [v, c] : annihilate(b, n, w)) add_term(out, v, Scalar(coeff * c));
  }

  const Scalar& level() const { return level_; }

 private:
  // b(n) w for n >= 0, memoized.
  const VermaState::Terms& annihilate(int b, int n, const ModeMonomial& w) {
    auto key = std::make_tuple(b, n, w);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    VermaState::Terms out;
    if (!w.empty() && n <= total_depth(w)) {
      const Mode head = w.front();
      ModeMonomial rest(w.begin() + 1, w.end());
      // head(-m) (b(n) rest)
      VermaState::Terms inner;
      act(inner, b, n, rest, 1);
      for (const auto& [v, c] : inner) act(out, head.index, -head.depth, v, c);
      // [b, head](n - m) rest
      for (const auto& [e, c] : basis_.bracket_coords(b, head.index)) act(out, e, n - head.depth, rest, c);
      // n delta_{n,m} <b, head> k rest
      if (n == head.depth) {
        Scalar central = Scalar(n) * basis_.form(b, head.index) * level_;
        if (!a2l2::is_zero(central)) add_term(out, rest, central);
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  const LieBasis& basis_;
  Scalar level_;
  pbw::Straightener<Mode, ModeBracket> straight_;
  std::map<std::tuple<int, int, ModeMonomial>, VermaState::Terms> memo_;
};

}  // namespace detail

/// b(n) s for basis index b of s's module.
inline VermaState mode_action(int b, int n, const VermaState& s) {
  if (b < 0 || b >= s.basis()->dim()) throw Error("mode_action: basis index out of range");
  if (s.depth() > max_state_depth) throw Error("mode_action: depth cap exceeded");
  detail::ModeEngine eng(*s.basis(), s.level());
  VermaState::Terms out;
  for (const auto& [w, c] : s.terms()) eng.act(out, b, n, w, c);
  return VermaState(s.basis(), s.level(), std::move(out));
}

/// x(n) s for an arbitrary element x of the module's Lie algebra.
inline VermaState mode_action(const ModeOp& op, const VermaState& s) {
  if (s.depth() > max_state_depth) throw Error("mode_action: depth cap exceeded");
  detail::ModeEngine eng(*s.basis(), s.level());
  VermaState::Terms out;
  for (const auto& [b, xc] : s.basis()->coords(op.elt))
    for (const auto& [w, c] : s.terms()) eng.act(out, b, op.mode, w, Scalar(xc * c));
  return VermaState(s.basis(), s.level(), std::move(out));
}

/// Rebuilds s in another module by sending each mode a(-n) to f(a)(-n),
/// where f maps basis elements of s's module to Lie elements of the target.
template <class F>
VermaState map_modes(const VermaState& s, std::shared_ptr<const LieBasis> target, F f) {
  detail::ModeEngine eng(*target, s.level());
  std::vector<LieBasis::Coords> images(s.basis()->dim());
  std::vector<bool> done(s.basis()->dim(), false);
  VermaState::Terms out;
  for (const auto& [w, c] : s.terms()) {
    VermaState::Terms cur;
    cur.emplace(ModeMonomial{}, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (!done[it->index]) {
        images[it->index] = target->coords(f(s.basis()->element(it->index)));
        done[it->index] = true;
      }
      VermaState::Terms next;
      for (const auto& [b, bc] : images[it->index])
        for (const auto& [v, vc] : cur) eng.act(next, b, -it->depth, v, Scalar(bc * vc));
      cur = std::move(next);
    }
    for (const auto& [v, vc] : cur) add_term(out, v, vc);
  }
  return VermaState(std::move(target), s.level(), std::move(out));
}

/// The same vector expressed over another basis of g.
inline VermaState change_basis(const VermaState& s, std::shared_ptr<const LieBasis> target) {
  if (target == s.basis()) return s;
  return map_modes(s, std::move(target), [](const LieElt& x) { return x; });
}

/// Lift of nu: a(-n) -> nu(a)(-n), vacuum fixed.
inline VermaState nu_state(const VermaState& s) {
  return map_modes(s, s.basis(), [](const LieElt& x) { return nu(x); });
}

/// Single creation-mode monomial sum_i c_i prod a_i(-n_i)|0>, normal-ordered.
inline VermaState creation_state(std::shared_ptr<const LieBasis> basis, const Scalar& level,
                                 const std::vector<std::pair<LieElt, int>>& modes, const Scalar& coeff = 1) {
  VermaState s = coeff * VermaState::vacuum(basis, level);
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    if (it->second < 1) throw Error("creation_state: creation depth must be positive");
    s = mode_action(ModeOp{it->first, -it->second}, s);
  }
  return s;
}

/// The singular vector of V(sl(2l+1), -l-1/2), over the standard basis.
inline VermaState perse_vector(const TwistedSl& alg) {
  const int l = alg.rank();
  const int n = alg.matrix_size();
  const auto& basis = alg.standard();
  const Scalar k = alg.level();
  const LieElt theta = E(n, 1, n);
  VermaState v(basis, k);
  for (int i = 1; i <= 2 * l; ++i)
    v += creation_state(basis, k, {{theta, 1}, {H(n, i), 1}}, rat(2 * l - 2 * i + 1, 2 * l + 1));
  for (int i = 1; i <= 2 * l - 1; ++i) v += creation_state(basis, k, {{E(n, 1, i + 1), 1}, {E(n, i + 1, n), 1}});
  v += creation_state(basis, k, {{theta, 2}}, rat(-(2 * l - 1), 2));
  return v;
}

/// Generators of the annihilating half: E_{i,i+1}(0), i = 1..2l, and E_{2l+1,1}(1).
inline std::vector<ModeOp> singular_test_ops(int l) {
  const int n = matrix_size(l);
  std::vector<ModeOp> ops;
  for (int i = 1; i < n; ++i) ops.push_back({E(n, i, i + 1), 0});
  ops.push_back({E(n, n, 1), 1});
  return ops;
}

inline bool check_singular(const VermaState& s, int l) {
  if (s.basis()->matrix_size() != matrix_size(l)) throw Error("check_singular: rank mismatch");
  for (const auto& op : singular_test_ops(l))
    if (!mode_action(op, s).is_zero()) return false;
  return true;
}

/// x(n) s = 0 for every basis element x and every n in 1..max_mode.
inline bool killed_by_positive_modes(const VermaState& s, int max_mode = 2) {
  for (int b = 0; b < s.basis()->dim(); ++b)
    for (int n = 1; n <= max_mode; ++n)
      if (!mode_action(b, n, s).is_zero()) return false;
  return true;
}

/// lambda with h(0) s = lambda s, or nullopt if s is not an eigenvector.
inline std::optional<Scalar> zero_mode_eigenvalue(const LieElt& h, const VermaState& s) {
  if (s.is_zero()) return std::nullopt;
  VermaState hs = mode_action(ModeOp{h, 0}, s);
  const auto& [w, c] = *s.terms().begin();
  auto it = hs.terms().find(w);
  Scalar lambda = it == hs.terms().end() ? Scalar(0) : Scalar(it->second / c);
  if (!(hs == lambda * s)) return std::nullopt;
  return lambda;
}

/// Span of U(g0) v, split by h0-weight on (h_1..h_{l-1}, hbar_l).
struct ZeroModeOrbit {
  std::shared_ptr<const LieBasis> basis;
  Scalar level;
  std::map<std::vector<Scalar>, IncrementalBasis<ModeMonomial>> by_weight;

  int dim() const {
    int d = 0;
    for (const auto& [w, b] : by_weight) d += static_cast<int>(b.rank());
    return d;
  }
  std::vector<VermaState> states(const std::vector<Scalar>& weight) const {
    std::vector<VermaState> out;
    auto it = by_weight.find(weight);
    if (it == by_weight.end()) return out;
    for (const auto& r : it->second.rows()) out.emplace_back(basis, level, VermaState::Terms(r.begin(), r.end()));
    return out;
  }
  std::vector<VermaState> states() const {
    std::vector<VermaState> out;
    for (const auto& [w, b] : by_weight)
      for (const auto& s : states(w)) out.push_back(s);
    return out;
  }
};

/// Closes {v} under x(0) for x in the g0 basis; v must be an h0-weight vector.
inline ZeroModeOrbit zero_mode_orbit(const TwistedSl& alg, const VermaState& v) {
  std::vector<Scalar> w0;
  for (int i = 0; i < alg.rank(); ++i) {
    auto lambda = zero_mode_eigenvalue(alg.cartan_generator(i), v);
    if (!lambda) throw Error("zero_mode_orbit: seed is not an h0-weight vector");
    w0.push_back(*lambda);
  }
  const auto& g0 = *alg.g0();
  detail::ModeEngine eng(*v.basis(), v.level());
  std::vector<LieBasis::Coords> ops;
  for (int a = 0; a < g0.dim(); ++a) ops.push_back(v.basis()->coords(g0.element(a)));
  auto apply = [&](int op, const SparseVec<ModeMonomial>& x) {
    VermaState::Terms out;
    for (const auto& [b, bc] : ops[op])
      for (const auto& [w, c] : x) eng.act(out, b, 0, w, Scalar(bc * c));
    return out;
  };
  auto shift = [&](int op) -> const std::vector<Scalar>& { return alg.g0_weight(op); };
  ZeroModeOrbit orbit{v.basis(), v.level(), {}};
  orbit.by_weight = weighted_closure<ModeMonomial>(v.terms(), w0, g0.dim(), apply, shift);
  return orbit;
}

}  // namespace a2l2
