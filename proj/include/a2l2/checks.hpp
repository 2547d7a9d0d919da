#pragma once

// Check registry, reports and object dumps used by the a2l2 tool.

#include "a2l2/affroots.hpp"
#include "a2l2/classify.hpp"
#include "a2l2/twzhu.hpp"

#include "json.hpp"

#include <chrono>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace a2l2 {

using Json = nlohmann::ordered_json;

/// Bad arguments: unknown ids, selectors or ranks. Maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Integers as JSON numbers when they fit, everything else as "p/q".
inline Json scalar_json(const Scalar& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
  return Json(to_string(x));
}

inline Json scalars_json(const std::vector<Scalar>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(scalar_json(x));
  return a;
}

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::skip;
  long elapsed_ms = 0;
  std::string summary;
  Json details = Json::object();
};

struct Report {
  int l = 0;
  Scalar level;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

/// Lazily computed objects shared by the checks of one run.
class Pipeline {
 public:
  explicit Pipeline(int l) : ctx_(l) {}

  int l() const { return ctx_.l(); }
  const ProjectionContext& ctx() const { return ctx_; }

  const VermaState& singular() {
    if (!singular_) singular_ = perse_vector(ctx_);
    return *singular_;
  }
  const UEAElt& image() {
    if (!image_) image_ = project(singular(), ctx_);
    return *image_;
  }
  const UEAElt& v1() {
    if (!v1_) v1_ = compute_v1(ctx_, image());
    return *v1_;
  }
  const std::vector<CartanPoly>& polys() {
    if (!polys_) polys_ = lowered_polynomials(ctx_, v1());
    return *polys_;
  }
  const std::set<FiniteWeight>& zero_set() {
    if (!zeros_) zeros_ = zero_set_oracle(polys());
    return *zeros_;
  }

 private:
  ProjectionContext ctx_;
  std::optional<VermaState> singular_;
  std::optional<UEAElt> image_, v1_;
  std::optional<std::vector<CartanPoly>> polys_;
  std::optional<std::set<FiniteWeight>> zeros_;
};

struct CheckOutcome {
  bool ok = false;
  std::string summary;
  Json details = Json::object();
};

struct CheckSpec {
  std::string id;
  std::vector<std::string> deps;
  std::function<CheckOutcome(Pipeline&)> run;
};

/// (S, primed) pairs in the order used by reports: for each subset, mu then mu'.
inline std::vector<std::pair<std::vector<int>, bool>> weight_labels(int l) {
  std::vector<std::pair<std::vector<int>, bool>> out;
  for (const auto& s : subsets_below(l))
    for (bool primed : {false, true}) out.emplace_back(s, primed);
  return out;
}

inline std::string subset_name(const std::vector<int>& s, bool primed) {
  std::string r = primed ? "mu'{" : "mu{";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

namespace detail {

inline Json matrix_json(const std::vector<std::vector<Scalar>>& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(scalars_json(row));
  return a;
}

inline CheckOutcome check_cartan(Pipeline& p) {
  const int l = p.l();
  auto got = b_cartan_from_generators(l);
  auto want = b_cartan_matrix(l);
  bool finite_ok = true;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) finite_ok = finite_ok && got[i][j] == want[i][j];
  auto aff = cartan_from_roots(l);
  auto printed = affine_cartan_matrix(l);
  bool affine_ok = true;
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j) affine_ok = affine_ok && aff[i][j] == printed[i][j];
  AlgebraData d = algebra_data(l);
  bool hdual_ok = d.h_dual == 2 * l + 1;
  CheckOutcome o;
  o.ok = finite_ok && affine_ok && hdual_ok;
  o.details["finite"] = matrix_json(got);
  o.details["affine"] = matrix_json(aff);
  o.details["h_dual"] = d.h_dual;
  o.summary = std::string("B_l matrix ") + (finite_ok ? "matches" : "differs") + ", affine matrix " +
              (affine_ok ? "matches" : "differs") + ", h_dual=" + std::to_string(d.h_dual);
  return o;
}

inline CheckOutcome check_g1_dim(Pipeline& p) {
  const int l = p.l();
  const TwistedSl& alg = *p.ctx().alg;
  int zero_dim = g1_zero_weight_dim(l);
  int g0 = alg.g0_dim(), g1 = alg.g1()->dim();
  CheckOutcome o;
  o.ok = zero_dim == l && g0 == l * (2 * l + 1) && g0 + g1 == (2 * l + 1) * (2 * l + 1) - 1;
  o.details["dim_g0"] = g0;
  o.details["dim_g1"] = g1;
  o.details["zero_weight_dim"] = zero_dim;
  o.summary = "dim g1=" + std::to_string(g1) + ", zero-weight dim=" + std::to_string(zero_dim);
  return o;
}

inline CheckOutcome check_singular_vector(Pipeline& p) {
  const VermaState& v = p.singular();
  bool gens = check_singular(v, p.l());
  bool sweep = killed_by_positive_modes(v, 2);
  CheckOutcome o;
  o.ok = gens && sweep;
  o.details["terms"] = v.terms().size();
  o.details["generators"] = gens;
  o.details["positive_mode_sweep"] = sweep;
  o.summary = std::string("generators ") + (gens ? "kill v" : "do not kill v") + ", modes 1..2 sweep " +
              (sweep ? "clean" : "nonzero");
  return o;
}

inline CheckOutcome check_nu_fixed(Pipeline& p) {
  const VermaState& v = p.singular();
  VermaState d = nu_state(v) - v;
  CheckOutcome o;
  o.ok = d.is_zero();
  o.details["difference_terms"] = d.terms().size();
  o.summary = o.ok ? "nu(v) = v" : "nu(v) differs from v in " + std::to_string(d.terms().size()) + " terms";
  return o;
}

inline CheckOutcome check_zhu_image(Pipeline& p) {
  const UEAElt& img = p.image();
  UEAElt cf = zhu_singular_image_closed_form(p.ctx());
  CheckOutcome o;
  o.ok = img == cf;
  o.details["image"] = img.to_string();
  o.details["terms"] = img.terms().size();
  o.summary = "[[v]] = " + img.to_string();
  return o;
}

inline CheckOutcome check_v1(Pipeline& p) {
  const UEAElt& v1 = p.v1();
  UEAElt cf = v1_closed_form(p.ctx());
  CheckOutcome o;
  o.ok = v1 == cf;
  o.details["v1"] = v1.to_string();
  o.details["terms"] = v1.terms().size();
  o.summary = std::to_string(v1.terms().size()) + " terms, closed form " + (o.ok ? "matches" : "differs");
  return o;
}

inline CheckOutcome check_polys(Pipeline& p) {
  const int l = p.l();
  const auto& ps = p.polys();
  bool ok = static_cast<int>(ps.size()) == l;
  Json arr = Json::array();
  Json plus_variant = Json::array();
  bool any_plus_match = false;
  for (int j = 1; j <= static_cast<int>(ps.size()); ++j) {
    const CartanPoly& pj = ps[j - 1];
    bool minus = pj == expected_polynomial(l, j, rat(-1, 2));
    bool top = j < l || pj == expected_top_polynomial(l);
    ok = ok && minus && top;
    Json e;
    e["j"] = j;
    e["poly"] = factored_h_string(pj, j);
    e["matches_minus_half"] = minus;
    arr.push_back(e);
    if (j < l) {
      bool plus = pj == expected_polynomial(l, j, rat(1, 2));
      any_plus_match = any_plus_match || plus;
      plus_variant.push_back({{"j", j}, {"matches", plus}});
    }
  }
  CheckOutcome o;
  o.ok = ok && !any_plus_match;
  o.details["polys"] = arr;
  o.details["plus_half_variant"] = plus_variant;
  std::string list;
  for (int j = 1; j <= static_cast<int>(ps.size()); ++j) list += (j > 1 ? "; " : "") + factored_h_string(ps[j - 1], j);
  o.summary = list + (l > 1 ? (any_plus_match ? " (+1/2 variant matches)" : " (+1/2 variant rejected)") : "");
  return o;
}

inline CheckOutcome check_r0(Pipeline& p) {
  auto basis = r0_basis(p.ctx(), p.image());
  std::vector<CartanPoly> rp;
  for (const auto& u : basis) rp.push_back(cartan_polynomial(u));
  bool span = same_poly_span(rp, p.polys());
  CheckOutcome o;
  o.ok = static_cast<int>(basis.size()) == p.l() && span;
  o.details["dim_r0"] = basis.size();
  o.details["span_matches"] = span;
  o.summary = "dim R0=" + std::to_string(basis.size()) + ", span " + (span ? "matches" : "differs");
  return o;
}

inline CheckOutcome check_classification(Pipeline& p) {
  const int l = p.l();
  const auto& zeros = p.zero_set();
  auto listed = classified_weights(l);
  bool all_zero = true;
  for (const auto& w : listed)
    for (const auto& v : eval_polys(p.polys(), w)) all_zero = all_zero && is_zero(v);
  CheckOutcome o;
  o.ok = zeros == listed && zeros.size() == (std::size_t{1} << l) && all_zero;
  Json ws = Json::array();
  for (const auto& [s, primed] : weight_labels(l)) {
    FiniteWeight w = mu_weight(l, s, primed);
    ws.push_back({{"name", subset_name(s, primed)},
                  {"weight", w.to_string()},
                  {"coroot_vals", scalars_json(w.coroot_vals())},
                  {"in_zero_set", zeros.count(w) > 0}});
  }
  o.details["weights"] = ws;
  o.details["zero_set_size"] = zeros.size();
  o.summary = std::to_string(zeros.size()) + " weights, zero set " + (zeros == listed ? "equals" : "differs from") +
              " the closed-form list";
  return o;
}

inline CheckOutcome check_dominant(Pipeline& p) {
  const int l = p.l();
  auto dom = dominant_integral_filter(p.zero_set());
  std::set<FiniteWeight> want{FiniteWeight::zero(l), FiniteWeight::omega(l, l)};
  CheckOutcome o;
  o.ok = dom == want;
  Json arr = Json::array();
  std::string list;
  for (const auto& w : dom) {
    arr.push_back(w.to_string());
    list += (list.empty() ? "" : ", ") + w.to_string();
  }
  o.details["dominant_integral"] = arr;
  o.summary = "{" + list + "}";
  return o;
}

inline CheckOutcome check_admissible_weights(Pipeline& p) {
  const int l = p.l();
  bool ok = true;
  Json arr = Json::array();
  for (const auto& [s, primed] : weight_labels(l)) {
    AffineWeight lam = affinize(mu_weight(l, s, primed), l);
    AdmissibilityReport rep = check_admissible(lam);
    ok = ok && rep.admissible();
    Json e{{"name", subset_name(s, primed)},
           {"lambda", lam.to_string()},
           {"condition1", rep.condition1},
           {"condition2", rep.condition2},
           {"coroot_rank", rep.coroot_rank}};
    if (rep.violation) e["violation"] = {{"family", rep.violation->family.to_string()}, {"m", rep.violation->m},
                                         {"value", scalar_json(rep.violation->value)}};
    arr.push_back(e);
  }
  CheckOutcome o;
  o.details["weights"] = arr;
  if (l == 1) {
    // The printed pairings at delta - alpha_1 and the long-family pattern.
    AffineWeight root = delta(1) - epsilon(1, 1);
    Scalar a = coroot_pairing(affinize(FiniteWeight::zero(1), 1), root);
    Scalar b = coroot_pairing(affinize(FiniteWeight::omega(1, 1), 1), root);
    bool long_ok = true;
    for (const auto& w : {FiniteWeight::zero(1), FiniteWeight::omega(1, 1)}) {
      AffineWeight shifted = affinize(w, 1) + rho(1);
      for (const auto& f : positive_real_families(1)) {
        if (f.kind != RootKind::long_root) continue;
        AffinePairing pr = family_pairing(shifted, f);
        Scalar mu_a = ip(AffineWeight(w.eps_coords(), 0, 0), epsilon(1, 1));
        Scalar pm = sgn(f.classical.eps[0]);
        // 3/4 (2m+1) + pm (1/2 + (mu, alpha_1))
        long_ok = long_ok && pr.B == rat(3, 2) && pr.A == rat(3, 4) + pm * (rat(1, 2) + mu_a) &&
                  !first_integral(pr, f.m_min);
      }
    }
    o.details["pairing_lambda"] = scalar_json(a);
    o.details["pairing_lambda_prime"] = scalar_json(b);
    o.details["long_family_nonintegral"] = long_ok;
    ok = ok && a == -3 && b == -4 && long_ok;
  }
  o.ok = ok;
  o.summary = std::to_string(arr.size()) + " weights " + (ok ? "admissible" : "not all admissible");
  return o;
}

inline CheckOutcome check_kw(Pipeline& p) {
  const int l = p.l();
  bool ok = true;
  for (const auto& w : p.zero_set()) ok = ok && kw_positivity(affinize(w, l));
  Scalar margin = Scalar(-l) - rat(1, 2) + (2 * l + 1);
  CheckOutcome o;
  o.ok = ok && sgn(margin) > 0;
  o.details["level_plus_h_dual"] = scalar_json(margin);
  o.summary = "level + h_dual = " + to_string(margin);
  return o;
}

}  // namespace detail

inline const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = {
      {"cartan-matrix", {}, detail::check_cartan},
      {"g1-dim", {}, detail::check_g1_dim},
      {"singular", {}, detail::check_singular_vector},
      {"nu-fixed", {}, detail::check_nu_fixed},
      {"zhu-image", {"singular", "nu-fixed"}, detail::check_zhu_image},
      {"v1-closed-form", {"zhu-image"}, detail::check_v1},
      {"polynomials", {"v1-closed-form"}, detail::check_polys},
      {"r0-dim", {"zhu-image", "polynomials"}, detail::check_r0},
      {"classification", {"polynomials"}, detail::check_classification},
      {"dominant", {"classification"}, detail::check_dominant},
      {"admissible", {"classification"}, detail::check_admissible_weights},
      {"kw-positivity", {"classification"}, detail::check_kw},
  };
  return reg;
}

inline int default_max_l() { return 4; }

inline void require_l_in_range(int l, int max_l) {
  if (l < 1 || l > max_l)
    throw UsageError("l must be between 1 and " + std::to_string(max_l) + ", got " + std::to_string(l));
}

/// Runs the selected checks (empty = all). Dependencies are evaluated even
/// when not selected; a check whose dependency failed is reported as skip.
inline Report run_checks(int l, const std::vector<std::string>& ids, int max_l = default_max_l(),
                         const std::vector<CheckSpec>& reg = check_registry()) {
  require_l_in_range(l, max_l);
  std::set<std::string> wanted;
  for (const auto& id : ids) {
    bool known = false;
    for (const auto& c : reg) known = known || c.id == id;
    if (!known) throw UsageError("unknown check id '" + id + "'");
    wanted.insert(id);
  }
  if (wanted.empty())
    for (const auto& c : reg) wanted.insert(c.id);
  std::set<std::string> needed = wanted;
  for (auto it = reg.rbegin(); it != reg.rend(); ++it)
    if (needed.count(it->id))
      for (const auto& d : it->deps) needed.insert(d);

  Pipeline pipe(l);
  Report rep;
  rep.l = l;
  rep.level = pipe.ctx().level_k;
  std::map<std::string, CheckStatus> status;
  for (const auto& c : reg) {
    if (!needed.count(c.id)) continue;
    CheckResult r;
    r.id = c.id;
    std::string blocked;
    for (const auto& d : c.deps)
      if (status[d] != CheckStatus::pass && blocked.empty()) blocked = d;
    if (!blocked.empty()) {
      r.status = CheckStatus::skip;
      r.summary = "dependency " + blocked + " did not pass";
      r.details["reason"] = r.summary;
    } else {
      auto t0 = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = c.run(pipe);
        r.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
        r.summary = std::move(o.summary);
        r.details = std::move(o.details);
      } catch (const Error& e) {
        r.status = CheckStatus::fail;
        r.summary = e.what();
        r.details = {{"error", e.what()}};
      }
      r.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
    status[c.id] = r.status;
    if (wanted.count(c.id)) rep.checks.push_back(std::move(r));
  }
  return rep;
}

enum class ReportFormat { text, json };

/// Without with_timing the JSON elapsed_ms fields are 0, so repeated runs are byte-identical.
inline std::string render_report(const Report& r, ReportFormat fmt, bool with_timing = false) {
  if (fmt == ReportFormat::json) {
    Json j;
    j["l"] = r.l;
    j["level"] = to_string(r.level);
    j["overall"] = r.pass() ? "pass" : "fail";
    j["checks"] = Json::array();
    for (const auto& c : r.checks)
      j["checks"].push_back(
          {{"id", c.id}, {"status", to_string(c.status)}, {"elapsed_ms", with_timing ? c.elapsed_ms : 0L}, {"details", c.details}});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "l=" << r.l << " level=" << to_string(r.level) << "\n";
  for (const auto& c : r.checks) {
    std::string id = c.id;
    id.resize(16, ' ');
    std::string st = to_string(c.status);
    for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "  " << st << "  " << id << " " << c.elapsed_ms << " ms  " << c.summary << "\n";
  }
  os << "overall: " << (r.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

inline const std::vector<std::string>& dump_selectors() {
  static const std::vector<std::string> s = {"singular", "zhu-image", "v1", "polys", "weights"};
  return s;
}

/// Plain-text form of one computed object, newline-terminated.
inline std::string dump_object(int l, const std::string& which, int max_l = default_max_l()) {
  require_l_in_range(l, max_l);
  bool known = false;
  for (const auto& s : dump_selectors()) known = known || s == which;
  if (!known) throw UsageError("unknown object '" + which + "'");
  if (which == "weights") {
    std::string out;
    for (const auto& [s, primed] : weight_labels(l)) out += mu_weight(l, s, primed).to_string() + "\n";
    return out;
  }
  Pipeline p(l);
  if (which == "singular") return p.singular().to_string() + "\n";
  if (which == "zhu-image") return p.image().to_string() + "\n";
  if (which == "v1") return p.v1().to_string() + "\n";
  std::string out;
  for (int j = 1; j <= l; ++j) out += factored_h_string(p.polys()[j - 1], j) + "\n";
  return out;
}

/// JSON listing of the classified weights with their zero-set and admissibility status.
inline Json classify_json(int l, int max_l = default_max_l()) {
  require_l_in_range(l, max_l);
  Pipeline p(l);
  const auto& zeros = p.zero_set();
  auto listed = classified_weights(l);
  Json j;
  j["l"] = l;
  j["level"] = to_string(p.ctx().level_k);
  j["zero_set_matches"] = zeros == listed;
  j["weights"] = Json::array();
  auto dom = dominant_integral_filter(zeros);
  for (const auto& [s, primed] : weight_labels(l)) {
    FiniteWeight w = mu_weight(l, s, primed);
    AffineWeight lam = affinize(w, l);
    j["weights"].push_back({{"name", subset_name(s, primed)},
                            {"subset", s},
                            {"primed", primed},
                            {"weight", w.to_string()},
                            {"coroot_vals", scalars_json(w.coroot_vals())},
                            {"eps", scalars_json(w.eps_coords())},
                            {"affine", lam.to_string()},
                            {"dominant_integral", dom.count(w) > 0},
                            {"admissible", check_admissible(lam).admissible()}});
  }
  return j;
}

}  // namespace a2l2
