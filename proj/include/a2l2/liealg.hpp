#pragma once

// gl/sl(2l+1): elementary matrices, bracket, trace form, the involution nu,
// its eigen-split, and the B_l = so(2l+1) fixed-point algebra.

#include "a2l2/linalg.hpp"
#include "a2l2/scalar.hpp"

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace a2l2 {

inline void require_rank(int l) {
  if (l < 1) throw Error("rank l must be a positive integer, got " + std::to_string(l));
}

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

using Entry = std::pair<int, int>;  // 1-based (row, column)

/// Sparse (2l+1)x(2l+1) matrix over K in the elementary-matrix basis.
template <class K>
class MatElt {
 public:
  MatElt() = default;
  explicit MatElt(int n) : n_(n) {
    if (n < 1) throw Error("MatElt: matrix size must be positive");
  }

  static MatElt unit(int n, int i, int j, const K& c = K(Scalar(1))) {
    MatElt m(n);
    m.add(i, j, c);
    return m;
  }

  int size() const { return n_; }
  const std::map<Entry, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  K coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? K() : it->second;
  }

  void add(int i, int j, const K& c) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw Error("MatElt: index out of range");
    if (a2l2::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (a2l2::is_zero(it->second)) terms_.erase(it);
    }
  }

  K trace() const {
    K t{};
    for (const auto& [e, c] : terms_)
      if (e.first == e.second) t += c;
    return t;
  }

  MatElt& operator+=(const MatElt& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  MatElt& operator-=(const MatElt& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, K() - c);
    return *this;
  }
  friend MatElt operator+(MatElt a, const MatElt& b) { return a += b; }
  friend MatElt operator-(MatElt a, const MatElt& b) { return a -= b; }
  friend MatElt operator-(const MatElt& a) { return MatElt(a.n_) - a; }
  friend MatElt operator*(const K& s, const MatElt& a) {
    MatElt r(a.n_);
    for (const auto& [e, c] : a.terms_) r.add(e.first, e.second, s * c);
    return r;
  }

  /// Matrix product.
  friend MatElt matmul(const MatElt& a, const MatElt& b) {
    a.check_same(b);
    MatElt r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      auto lo = b.terms_.lower_bound({ea.second, 0});
      for (auto it = lo; it != b.terms_.end() && it->first.first == ea.second; ++it)
        r.add(ea.first, it->first.second, ca * it->second);
    }
    return r;
  }

  friend bool operator==(const MatElt& a, const MatElt& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  void check_same(const MatElt& o) const {
    if (n_ != o.n_) throw Error("rank mismatch: matrix sizes " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }

 private:
  int n_ = 0;
  std::map<Entry, K> terms_;
};

using LieElt = MatElt<Scalar>;
using QuadLieElt = MatElt<QuadScalar>;

inline int matrix_size(int l) { return 2 * l + 1; }

inline LieElt E(int n, int i, int j) { return LieElt::unit(n, i, j); }
inline LieElt H(int n, int i) { return E(n, i, i) - E(n, i + 1, i + 1); }

template <class K>
MatElt<K> bracket(const MatElt<K>& a, const MatElt<K>& b) {
  return matmul(a, b) - matmul(b, a);
}

/// Trace form tr(ab); the long-root normalization <theta, theta> = 2.
template <class K>
K invariant_form(const MatElt<K>& a, const MatElt<K>& b) {
  return matmul(a, b).trace();
}

/// nu(E_ij) = -(-1)^(i-j) E_{2l+2-j, 2l+2-i}. Requires odd matrix size.
template <class K>
MatElt<K> nu(const MatElt<K>& a) {
  const int n = a.size();
  if (n % 2 == 0 || n < 3) throw Error("nu: matrix size must be 2l+1 with l >= 1");
  MatElt<K> r(n);
  for (const auto& [e, c] : a.terms()) {
    auto [i, j] = e;
    int s = -sign_pow(i - j);
    r.add(n + 1 - j, n + 1 - i, K(Scalar(s)) * c);
  }
  return r;
}

template <class K>
struct GradedPair {
  MatElt<K> plus;   // nu-fixed part
  MatElt<K> minus;  // nu-anti-fixed part
};

template <class K>
GradedPair<K> split_pm(const MatElt<K>& a) {
  MatElt<K> na = nu(a);
  const K half(rat(1, 2));
  return {half * (a + na), half * (a - na)};
}

inline bool in_g0(const LieElt& a) { return nu(a) == a; }
inline bool in_g1(const LieElt& a) { return nu(a) == -a; }

/// A finite basis of a subspace of gl(n) with precomputed coordinates. For a
/// Lie subalgebra the bracket table and trace-form Gram matrix are built at
/// construction, so a LieBasis is immutable and freely shareable.
class LieBasis {
 public:
  using Coords = std::vector<std::pair<int, Scalar>>;

  LieBasis(int n, std::vector<LieElt> elems, std::vector<std::string> labels, bool subalgebra)
      : n_(n), elems_(std::move(elems)), labels_(std::move(labels)) {
    if (elems_.size() != labels_.size()) throw Error("LieBasis: label count mismatch");
    build_dual();
    if (subalgebra) build_tables();
  }

  int matrix_size() const { return n_; }
  int dim() const { return static_cast<int>(elems_.size()); }
  const LieElt& element(int a) const { return elems_.at(a); }
  const std::string& label(int a) const { return labels_.at(a); }
  const std::vector<LieElt>& elements() const { return elems_; }

  /// Coordinates of x if x lies in the span; nullopt otherwise.
  std::optional<Coords> try_coords(const LieElt& x) const {
    x.check_same(elems_.front());
    SparseVec<int> acc;
    for (const auto& [e, c] : x.terms()) {
      auto p = dual_.find(e);
      if (p == dual_.end()) continue;
      for (const auto& [a, w] : p->second) add_term(acc, a, Scalar(c * w));
    }
    Coords out(acc.begin(), acc.end());
    if (!(combine(out) == x)) return std::nullopt;
    return out;
  }

  Coords coords(const LieElt& x) const {
    auto c = try_coords(x);
    if (!c) throw Error("element is not in the span of this basis");
    return *c;
  }

  LieElt combine(const Coords& c) const {
    LieElt r(n_);
    for (const auto& [a, w] : c) r += w * elems_.at(a);
    return r;
  }

  bool has_tables() const { return !brackets_.empty(); }

  /// [b_a, b_b] in coordinates.
  const Coords& bracket_coords(int a, int b) const {
    if (!has_tables()) throw Error("LieBasis: bracket table requested on a non-subalgebra basis");
    return brackets_[static_cast<std::size_t>(a) * dim() + b];
  }
  /// tr(b_a b_b).
  const Scalar& form(int a, int b) const {
    if (!has_tables()) throw Error("LieBasis: form table requested on a non-subalgebra basis");
    return gram_[static_cast<std::size_t>(a) * dim() + b];
  }

 private:
  void build_dual() {
    if (elems_.empty()) throw Error("LieBasis: empty basis");
    IncrementalBasis<Entry> eb;
    std::vector<SparseVec<Entry>> vecs;
    for (const auto& e : elems_) {
      e.check_same(elems_.front());
      SparseVec<Entry> v(e.terms().begin(), e.terms().end());
      if (!eb.insert(v)) throw Error("LieBasis: elements are linearly dependent");
      vecs.push_back(std::move(v));
    }
    // Invert the square submatrix on the pivot entries.
    std::vector<Entry> piv = eb.pivots();
    const std::size_t d = elems_.size();
    Matrix m(d, std::vector<Scalar>(d, 0));  // m[p][a] = entry piv[p] of element a
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t p = 0; p < d; ++p) {
        auto it = vecs[a].find(piv[p]);
        if (it != vecs[a].end()) m[p][a] = it->second;
      }
    auto inv = inverse(std::move(m));
    if (!inv) throw Error("LieBasis: singular pivot block");
    for (std::size_t p = 0; p < d; ++p) {
      auto& slot = dual_[piv[p]];
      for (std::size_t a = 0; a < d; ++a)
        if (!is_zero((*inv)[a][p])) slot.emplace_back(static_cast<int>(a), (*inv)[a][p]);
    }
  }

  void build_tables() {
    const int d = dim();
    brackets_.resize(static_cast<std::size_t>(d) * d);
    gram_.resize(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        auto br = try_coords(bracket(elems_[a], elems_[b]));
        if (!br) throw Error("LieBasis: span is not closed under the bracket");
        Coords neg = *br;
        for (auto& [k, c] : neg) c = -c;
        brackets_[a * d + b] = std::move(*br);
        if (b != a) brackets_[b * d + a] = std::move(neg);
        gram_[a * d + b] = gram_[b * d + a] = invariant_form(elems_[a], elems_[b]);
      }
  }

  int n_;
  std::vector<LieElt> elems_;
  std::vector<std::string> labels_;
  std::map<Entry, Coords> dual_;
  std::vector<Coords> brackets_;
  std::vector<Scalar> gram_;
};


inline std::string entry_label(const char* head, int i, int j) {
  return std::string(head) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

/// sl(2l+1) with the involution nu, its fixed-point algebra g0 = so(2l+1)
/// and the anti-fixed complement g1.
///
/// The g0 basis is laid out as (negative part, Cartan, positive part). The
/// positive part holds E+_{ij}, i<j, i+j != 2l+2, one per nu-orbit (the
/// lexicographically smaller pair); the negative part holds the transposed
/// pairs in the same order; the Cartan block is h_1..h_{l-1}, hbar_l.
class TwistedSl {
 public:
  explicit TwistedSl(int l) : l_(l), n_(2 * l + 1) {
    require_rank(l);
    build_standard();
    build_graded();
  }

  int rank() const { return l_; }
  int matrix_size() const { return n_; }
  Scalar level() const { return Scalar(-l_) - rat(1, 2); }

  /// E_ij (i<j), H_1..H_2l, E_ij (i>j).
  const std::shared_ptr<const LieBasis>& standard() const { return standard_; }
  /// g0 in (negative, Cartan, positive) order.
  const std::shared_ptr<const LieBasis>& g0() const { return g0_; }
  /// g1: E-_{ij} for orbit representatives, antidiagonal E_{i,2l+2-i}, H-_i.
  const std::shared_ptr<const LieBasis>& g1() const { return g1_; }
  /// g0 basis followed by g1 basis: every element is a nu-eigenvector.
  const std::shared_ptr<const LieBasis>& eigen() const { return eigen_; }

  int g0_dim() const { return g0_->dim(); }
  int cartan_begin() const { return l_ * l_; }
  int pos_begin() const { return l_ * l_ + l_; }
  bool is_positive(int a) const { return a >= pos_begin(); }
  bool is_cartan(int a) const { return a >= cartan_begin() && a < pos_begin(); }
  bool is_negative(int a) const { return a < cartan_begin(); }

  /// Cartan generator for variable v in 0..l-1: h_{v+1} for v < l-1, hbar_l for v = l-1.
  const LieElt& cartan_generator(int v) const { return g0_->element(cartan_begin() + v); }

  /// h0-weight of g0 basis element a as values on (h_1..h_{l-1}, hbar_l).
  const std::vector<Scalar>& g0_weight(int a) const { return g0_weights_.at(a); }

  /// Orbit representatives (i, j), i<j, used for the positive block.
  const std::vector<Entry>& positive_pairs() const { return pos_pairs_; }

  LieElt e_plus(int i, int j) const { return split_pm(E(n_, i, j)).plus; }
  LieElt e_minus(int i, int j) const { return split_pm(E(n_, i, j)).minus; }

 private:
  void build_standard() {
    std::vector<LieElt> el;
    std::vector<std::string> lab;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) {
        el.push_back(E(n_, i, j));
        lab.push_back(entry_label("E", i, j));
      }
    for (int i = 1; i < n_; ++i) {
      el.push_back(H(n_, i));
      lab.push_back("H[" + std::to_string(i) + "]");
    }
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j < i; ++j) {
        el.push_back(E(n_, i, j));
        lab.push_back(entry_label("E", i, j));
      }
    standard_ = std::make_shared<const LieBasis>(n_, std::move(el), std::move(lab), true);
  }

  void build_graded() {
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) {
        if (i + j == n_ + 1) continue;
        Entry image{n_ + 1 - j, n_ + 1 - i};
        if (Entry{i, j} < image) pos_pairs_.push_back({i, j});
      }

    std::vector<LieElt> g0;
    std::vector<std::string> g0_lab;
    for (auto [i, j] : pos_pairs_) {
      g0.push_back(e_plus(j, i));
      g0_lab.push_back(entry_label("E+", j, i));
    }
    for (int i = 1; i < l_; ++i) {
      g0.push_back(H(n_, i) + H(n_, n_ - i));
      g0_lab.push_back("h" + std::to_string(i));
    }
    g0.push_back(Scalar(2) * (H(n_, l_) + H(n_, l_ + 1)));
    g0_lab.push_back("hb" + std::to_string(l_));
    for (auto [i, j] : pos_pairs_) {
      g0.push_back(e_plus(i, j));
      g0_lab.push_back(entry_label("E+", i, j));
    }

    std::vector<LieElt> g1;
    std::vector<std::string> g1_lab;
    for (auto [i, j] : pos_pairs_) {
      g1.push_back(e_minus(i, j));
      g1_lab.push_back(entry_label("E-", i, j));
      g1.push_back(e_minus(j, i));
      g1_lab.push_back(entry_label("E-", j, i));
    }
    for (int i = 1; i <= n_; ++i) {
      int j = n_ + 1 - i;
      if (i == j) continue;
      g1.push_back(E(n_, i, j));
      g1_lab.push_back(entry_label("E", i, j));
    }
    for (int i = 1; i <= l_; ++i) {
      g1.push_back(split_pm(H(n_, i)).minus);
      g1_lab.push_back("H-[" + std::to_string(i) + "]");
    }

    std::vector<LieElt> all = g0;
    all.insert(all.end(), g1.begin(), g1.end());
    std::vector<std::string> all_lab = g0_lab;
    all_lab.insert(all_lab.end(), g1_lab.begin(), g1_lab.end());

    g0_ = std::make_shared<const LieBasis>(n_, std::move(g0), std::move(g0_lab), true);
    g1_ = std::make_shared<const LieBasis>(n_, std::move(g1), std::move(g1_lab), false);
    eigen_ = std::make_shared<const LieBasis>(n_, std::move(all), std::move(all_lab), true);

    for (int a = 0; a < g0_->dim(); ++a) {
      std::vector<Scalar> w;
      for (int v = 0; v < l_; ++v) {
        LieElt br = bracket(cartan_generator(v), g0_->element(a));
        const auto& [e, c] = *g0_->element(a).terms().begin();
        Scalar lambda = br.coeff(e.first, e.second) / c;
        if (!(br == lambda * g0_->element(a))) throw Error("g0 basis element is not an h0-weight vector");
        w.push_back(lambda);
      }
      g0_weights_.push_back(std::move(w));
    }
  }

  int l_;
  int n_;
  std::vector<Entry> pos_pairs_;
  std::shared_ptr<const LieBasis> standard_, g0_, g1_, eigen_;
  std::vector<std::vector<Scalar>> g0_weights_;
};

/// Canonical g0 basis for rank l.
inline std::shared_ptr<const LieBasis> g0_basis(int l) { return TwistedSl(l).g0(); }

/// Chevalley data of B_l inside g0.
struct BTypeGenerators {
  int l = 0;
  // Index i-1 holds e_i, f_i, h_i for i = 1..l; index l-1 is the unnormalized e_l, f_l, h_l.
  std::vector<LieElt> e, f, h;
  LieElt hbar;      // 2(H_l + H_{l+1})
  QuadLieElt ebar;  // sqrt2 (E_l + E_{l+1})
  QuadLieElt fbar;  // sqrt2 (F_l + F_{l+1})
};

inline QuadLieElt to_quad(const LieElt& x) {
  QuadLieElt r(x.size());
  for (const auto& [e, c] : x.terms()) r.add(e.first, e.second, QuadScalar(c));
  return r;
}

inline BTypeGenerators b_type_generators(int l) {
  require_rank(l);
  const int n = 2 * l + 1;
  BTypeGenerators g;
  g.l = l;
  for (int i = 1; i <= l; ++i) {
    int m = n - i;  // partner simple index 2l+1-i
    g.e.push_back(E(n, i, i + 1) + E(n, m, m + 1));
    g.f.push_back(E(n, i + 1, i) + E(n, m + 1, m));
    g.h.push_back(H(n, i) + H(n, m));
  }
  g.hbar = Scalar(2) * g.h.back();
  g.ebar = QuadScalar::sqrt2() * to_quad(g.e.back());
  g.fbar = QuadScalar::sqrt2() * to_quad(g.f.back());
  return g;
}

/// B_l Cartan matrix, a_ij = alpha_j(h_i), alpha_l short; [2] for l = 1.
inline std::vector<std::vector<int>> b_cartan_matrix(int l) {
  require_rank(l);
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) {
    a[i][i] = 2;
    if (i + 1 < l) a[i][i + 1] = -1;
    if (i > 0) a[i][i - 1] = -1;
  }
  if (l > 1) a[l - 1][l - 2] = -2;
  return a;
}

/// alpha_j(h_i) computed from brackets of the normalized generators
/// (h_1..h_{l-1}, hbar_l; e_1..e_{l-1}, ebar_l) in Q(sqrt 2). Throws if some
/// [h_i, e_j] is not a rational multiple of e_j.
inline std::vector<std::vector<Scalar>> b_cartan_from_generators(int l) {
  BTypeGenerators g = b_type_generators(l);
  std::vector<QuadLieElt> hs, es;
  for (int i = 0; i + 1 < l; ++i) {
    hs.push_back(to_quad(g.h[i]));
    es.push_back(to_quad(g.e[i]));
  }
  hs.push_back(to_quad(g.hbar));
  es.push_back(g.ebar);
  std::vector<std::vector<Scalar>> a(l, std::vector<Scalar>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      QuadLieElt br = bracket(hs[i], es[j]);
      const auto& [e, c] = *es[j].terms().begin();
      QuadScalar lambda = br.coeff(e.first, e.second) / c;
      if (!lambda.is_rational() || !(br == lambda * es[j]))
        throw Error("b_cartan_from_generators: e_j is not an ad(h_i) eigenvector");
      a[i][j] = lambda.rat_part;
    }
  return a;
}

/// Dimension of the zero-weight space of g1 for the Cartan subalgebra of g0,
/// computed as the joint kernel of ad(h) on g1.
inline int g1_zero_weight_dim(int l) {
  TwistedSl alg(l);
  const auto& g1 = *alg.g1();
  using Key = std::pair<int, Entry>;
  IncrementalBasis<Key> image;
  for (int a = 0; a < g1.dim(); ++a) {
    SparseVec<Key> v;
    for (int h = 0; h < l; ++h) {
      LieElt br = bracket(alg.cartan_generator(h), g1.element(a));
      for (const auto& [e, c] : br.terms()) v.emplace(Key{h, e}, c);
    }
    image.insert(v);
  }
  return g1.dim() - static_cast<int>(image.rank());
}

}  // namespace a2l2
