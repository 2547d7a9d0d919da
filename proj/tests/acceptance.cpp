// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "a2l2/checks.hpp"
#include "generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace a2l2;
using namespace a2l2::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  long limit_ms;
  std::function<Outcome()> run;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

Outcome ac1() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    auto got = b_cartan_from_generators(l);
    auto want = b_cartan_matrix(l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) note(o, got[i][j] == want[i][j], "l=" + std::to_string(l) + " entry differs");
  }
  if (o.ok) o.detail = "B_l Cartan matrix exact for l=1..3";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) note(o, g1_zero_weight_dim(l) == l, "l=" + std::to_string(l));
  if (o.ok) o.detail = "zero-weight dim of g1 = l for l=1..3";
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    VermaState v = perse_vector(TwistedSl(l));
    note(o, check_singular(v, l), "generators, l=" + std::to_string(l));
    note(o, killed_by_positive_modes(v, 2), "mode sweep, l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "generator set and modes 1..2 sweep kill v for l=1..3";
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    VermaState v = perse_vector(TwistedSl(l));
    note(o, nu_state(v) == v, "l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "nu(v) = v for l=1..3";
  return o;
}

Outcome ac5() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    ProjectionContext ctx(l);
    note(o, zhu_singular_image(ctx) == zhu_singular_image_closed_form(ctx), "l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "[[v]] equals the quadratic closed form for l=1..3";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    ProjectionContext ctx(l);
    note(o, compute_v1(ctx) == v1_closed_form(ctx), "l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "v1 equals the four-line closed form for l=1..3";
  return o;
}

Outcome ac7() {
  Outcome o;
  int plus_matches = 0;
  for (int l = 1; l <= 3; ++l) {
    ProjectionContext ctx(l);
    auto ps = lowered_polynomials(ctx);
    note(o, static_cast<int>(ps.size()) == l, "count");
    for (int j = 1; j <= l && j <= static_cast<int>(ps.size()); ++j) {
      note(o, ps[j - 1] == expected_polynomial(l, j, rat(-1, 2)),
           "l=" + std::to_string(l) + " j=" + std::to_string(j) + " differs from -1/2 form");
      plus_matches += ps[j - 1] == expected_polynomial(l, j, rat(1, 2));
    }
    note(o, ps.back() == expected_top_polynomial(l), "top polynomial, l=" + std::to_string(l));
  }
  note(o, plus_matches == 0, "+1/2 form unexpectedly matches");
  if (o.ok) o.detail = "-1/2 constant matches every p_j for l=1..3; +1/2 variant matches none";
  return o;
}

Outcome ac8() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    ProjectionContext ctx(l);
    auto basis = r0_basis(ctx);
    std::vector<CartanPoly> ps;
    for (const auto& u : basis) ps.push_back(cartan_polynomial(u));
    note(o, static_cast<int>(basis.size()) == l, "dim R0, l=" + std::to_string(l));
    note(o, same_poly_span(ps, lowered_polynomials(ctx)), "span, l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "dim R0 = l and polynomial spans agree for l=1..3";
  return o;
}

Outcome ac9() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    auto zeros = zero_set_oracle(lowered_polynomials(ProjectionContext(l)));
    note(o, zeros.size() == (std::size_t{1} << l), "size, l=" + std::to_string(l));
    note(o, zeros == classified_weights(l), "set, l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "zero set = {mu_S, mu'_S}, 2^l weights, l=1..3";
  return o;
}

Outcome ac10() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    auto zeros = zero_set_oracle(lowered_polynomials(ProjectionContext(l)));
    auto dom = dominant_integral_filter(zeros);
    note(o, dom == std::set<FiniteWeight>{FiniteWeight::zero(l), FiniteWeight::omega(l, l)},
         "l=" + std::to_string(l));
  }
  if (o.ok) o.detail = "dominant integral = {0, w_l} for l=1..3";
  return o;
}

Outcome ac11() {
  Outcome o;
  for (int l = 1; l <= 3; ++l)
    for (const auto& mu : classified_weights(l))
      note(o, check_admissible(affinize(mu, l)).admissible(), "l=" + std::to_string(l) + " mu=" + mu.to_string());
  AffineWeight root = delta(1) - epsilon(1, 1);
  note(o, coroot_pairing(affinize(FiniteWeight::zero(1), 1), root) == -3, "l=1 pairing -3");
  note(o, coroot_pairing(affinize(FiniteWeight::omega(1, 1), 1), root) == -4, "l=1 pairing -4");
  for (const auto& mu : classified_weights(1)) {
    AffineWeight shifted = affinize(mu, 1) + rho(1);
    Scalar m1 = ip(affinize(mu, 1), epsilon(1, 1));
    for (const auto& f : positive_real_families(1)) {
      if (f.kind != RootKind::long_root) continue;
      AffinePairing p = family_pairing(shifted, f);
      Scalar sign = sgn(f.classical.eps[0]);
      note(o, p.B == rat(3, 2) && p.A == rat(3, 4) + sign * (rat(1, 2) + m1), "long family form");
      note(o, !first_integral(p, f.m_min), "long family integral");
    }
  }
  if (o.ok) o.detail = "all 2^l weights admissible for l=1..3; l=1 pairings -3, -4; long pairings 3/4(2m+1) +- 1/2 +- (mu,a1) never integral";
  return o;
}

Outcome ac12() {
  Outcome o;
  for (int l = 1; l <= 3; ++l)
    for (const auto& mu : classified_weights(l)) note(o, kw_positivity(affinize(mu, l)), "l=" + std::to_string(l));
  if (o.ok) o.detail = "level + h_dual = l + 1/2 > 0 for every classified weight, l=1..3";
  return o;
}

Outcome ac13() {
  Outcome o;
  std::mt19937 rng(20241019);
  int nu_fail = 0, jacobi_fail = 0, pbw_fail = 0, projab_fail = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 * (1 + t % 3) + 1;
    LieElt a = random_sl(rng, n), b = random_sl(rng, n);
    if (!(nu(bracket(a, b)) == bracket(nu(a), nu(b))) || invariant_form(nu(a), nu(b)) != invariant_form(a, b))
      ++nu_fail;
  }
  for (int t = 0; t < 50; ++t) {
    TwistedSl alg(1 + t % 3);
    const int n = alg.matrix_size();
    VermaState s = random_state(rng, alg.standard(), alg.level(), 3);
    LieElt x = random_sl(rng, n, 2), y = random_sl(rng, n, 2);
    int m = std::uniform_int_distribution<int>(-2, 2)(rng), p = std::uniform_int_distribution<int>(-2, 2)(rng);
    VermaState lhs = mode_action(ModeOp{x, m}, mode_action(ModeOp{y, p}, s)) -
                     mode_action(ModeOp{y, p}, mode_action(ModeOp{x, m}, s));
    VermaState rhs = mode_action(ModeOp{bracket(x, y), m + p}, s);
    if (m + p == 0) rhs += Scalar(m * invariant_form(x, y) * alg.level()) * s;
    if (!(lhs == rhs)) ++jacobi_fail;
  }
  for (int t = 0; t < 100; ++t) {
    auto alg = std::make_shared<const TwistedSl>(1 + t % 3);
    PBWMonomial w = random_word(rng, *alg, 2, 5);
    if (!(normal_form(alg, w, 1, pbw::Schedule::leftmost) == normal_form(alg, w, 1, pbw::Schedule::rightmost)))
      ++pbw_fail;
  }
  for (int t = 0; t < 100; ++t) {
    ProjectionContext ctx(1 + t % 3);
    const int n = ctx.alg->matrix_size();
    LieElt a = random_sl(rng, n, 3), b = random_sl(rng, n, 3);
    VermaState s = creation_state(ctx.alg->standard(), ctx.level_k, {{a, 1}, {b, 1}});
    if (!(project(s, ctx) == projab_closed_form(a, b, ctx))) ++projab_fail;
  }
  note(o, nu_fail == 0, std::to_string(nu_fail) + " nu failures");
  note(o, jacobi_fail == 0, std::to_string(jacobi_fail) + " Jacobi failures");
  note(o, pbw_fail == 0, std::to_string(pbw_fail) + " PBW failures");
  note(o, projab_fail == 0, std::to_string(projab_fail) + " projab failures");

  for (int l = 1; l <= 3; ++l) note(o, run_checks(l, {}).pass(), "check registry, l=" + std::to_string(l));
  auto t0 = std::chrono::steady_clock::now();
  bool l4 = run_checks(4, {}).pass();
  long l4_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  note(o, l4 && l4_ms < 600000, "optional l=4 run");
  if (o.ok)
    o.detail = "nu 200, Jacobi 50, PBW 100, projab 100 samples clean; registry passes l=1..3; l=4 passes in " +
               std::to_string(l4_ms) + " ms";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", 1000, ac1},   {"AC2", 1000, ac2},   {"AC3", 5000, ac3},   {"AC4", 5000, ac4},   {"AC5", 5000, ac5},
      {"AC6", 5000, ac6},   {"AC7", 5000, ac7},   {"AC8", 5000, ac8},   {"AC9", 5000, ac9},   {"AC10", 5000, ac10},
      {"AC11", 5000, ac11}, {"AC12", 1000, ac12}, {"AC13", 60000, ac13},
  };
  const long total_limit_ms = 60000;
  bool all = true;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (ms > c.limit_ms) note(o, false, "time limit exceeded");
    all = all && o.ok;
    std::printf("%-4s %s  %ld ms (limit %ld ms)  %s\n", c.id, o.ok ? "PASS" : "FAIL", ms, c.limit_ms, o.detail.c_str());
  }
  long total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  bool in_time = total <= total_limit_ms;
  std::printf("total %ld ms (limit %ld ms)  %s\n", total, total_limit_ms, (all && in_time) ? "PASS" : "FAIL");
  return all && in_time ? 0 : 1;
}
