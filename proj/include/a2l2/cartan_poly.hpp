#pragma once

// Polynomials on the Cartan subalgebra of g0 in the variables
// x_1..x_l = (h_1, ..., h_{l-1}, hbar_l).

#include "a2l2/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace a2l2 {

class CartanPoly {
 public:
  using Exponents = std::vector<int>;

  CartanPoly() = default;
  explicit CartanPoly(int nvars) : nvars_(nvars) {}

  static CartanPoly constant(int nvars, const Scalar& c) {
    CartanPoly p(nvars);
    p.add(Exponents(nvars, 0), c);
    return p;
  }
  /// The variable x_{v+1}, v in 0..nvars-1.
  static CartanPoly variable(int nvars, int v) {
    CartanPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(v) = 1;
    p.add(e, 1);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error("CartanPoly: exponent arity mismatch");
    add_term(terms_, e, c);
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Scalar coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar eval(const std::vector<Scalar>& at) const {
    if (static_cast<int>(at.size()) != nvars_) throw Error("CartanPoly::eval: arity mismatch");
    Scalar total = 0;
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < e[v]; ++k) t *= at[v];
      total += t;
    }
    return total;
  }

  friend CartanPoly operator+(CartanPoly a, const CartanPoly& b) {
    a.check(b);
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend CartanPoly operator-(CartanPoly a, const CartanPoly& b) {
    a.check(b);
    for (const auto& [e, c] : b.terms_) a.add(e, Scalar(-c));
    return a;
  }
  friend CartanPoly operator*(const Scalar& s, CartanPoly a) {
    if (a2l2::is_zero(s)) return CartanPoly(a.nvars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend CartanPoly operator*(const CartanPoly& a, const CartanPoly& b) {
    a.check(b);
    CartanPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
        r.add(e, Scalar(ca * cb));
      }
    return r;
  }
  friend bool operator==(const CartanPoly& a, const CartanPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Substitute x_v -> images[v].
  CartanPoly substitute(const std::vector<CartanPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw Error("CartanPoly::substitute: arity mismatch");
    int out_vars = images.empty() ? 0 : images.front().nvars();
    CartanPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
      CartanPoly t = constant(out_vars, c);
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < e[v]; ++k) t = t * images[v];
      r = r + t;
    }
    return r;
  }

  /// p / x_v, or nullopt if some monomial lacks x_v.
  std::optional<CartanPoly> divide_by_variable(int v) const {
    CartanPoly q(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(v) == 0) return std::nullopt;
      Exponents f = e;
      --f[v];
      q.add(f, c);
    }
    return q;
  }

  /// Expanded text form, lexicographically largest exponent vector first.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (int v = 0; v < nvars_; ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(v);
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      Scalar mag = abs(c);
      bool neg = sgn(c) < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
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
  void check(const CartanPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("CartanPoly: variable count mismatch");
  }

  int nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace a2l2
