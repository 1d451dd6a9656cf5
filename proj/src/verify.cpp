#include "bmangle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "bmangle/bingles.hpp"
#include "bmangle/hyper.hpp"
#include "bmangle/invariants.hpp"
#include "bmangle/metric.hpp"
#include "bmangle/sampling.hpp"
#include "bmangle/tringles.hpp"

namespace bm {

namespace {

struct Sample {
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  std::vector<double> inputs;
};

// Evaluators return nullopt on a domain rejection; the caller redraws from
// the same stream, so determinism is preserved.
using Evaluator = std::function<std::optional<Sample>(SampleStream&, const RunOptions&)>;

double lu(SampleStream& s, const RunOptions& o) { return s.log_uniform(o.range_lo, o.range_hi); }
double slu(SampleStream& s, const RunOptions& o) {
  return s.signed_log_uniform(o.range_lo, o.range_hi);
}

Vector3 positive_vec(SampleStream& s, const RunOptions& o) {
  return {lu(s, o), lu(s, o), lu(s, o)};
}
Vector3 signed_vec(SampleStream& s, const RunOptions& o) {
  return {slu(s, o), slu(s, o), slu(s, o)};
}

double rel_scale(double lhs, double rhs) { return std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

Sample make_sample(double lhs, double rhs, std::vector<double> inputs) {
  double abs_res = std::abs(lhs - rhs);
  return {abs_res, abs_res / rel_scale(lhs, rhs), std::move(inputs)};
}

// ---- planar additivity of f(w1, w2) = arccos sqrt(w1 w2) ----------------------

std::optional<Sample> eval_fund1(SampleStream& s, const RunOptions& o) {
  // a = (1,0), b = (xi, eta), c = a1*a + a2*b with a1, a2 > 0
  double xi = lu(s, o);
  double eta = slu(s, o);
  double a1 = lu(s, o), a2 = lu(s, o);

  auto f = [](double w1, double w2) {
    return std::acos(std::sqrt(std::clamp(w1 * w2, 0.0, 1.0)));
  };
  double t = a1 + a2 * xi;
  double bb = xi * xi + eta * eta;
  double cc = t * t + a2 * eta * a2 * eta;
  double cb = t * xi + a2 * eta * eta;

  double lhs = f(xi, xi / bb);
  double rhs = f(t, t / cc) + f(cb / cc, cb / bb);
  double res = std::abs(lhs - rhs);
  return Sample{res, res / std::max(1.0, std::abs(lhs)), {xi, eta, a1, a2}};
}

// ---- F(xi) = F(x) + F(xi/x) with F = C1 ln ------------------------------------

std::optional<Sample> eval_eq3_log(SampleStream& s, const RunOptions& o) {
  double xi = lu(s, o), x = lu(s, o), c1 = slu(s, o);
  double lhs = c1 * std::log(xi);
  double rhs = c1 * std::log(x) + c1 * std::log(xi / x);
  return make_sample(lhs, rhs, {xi, x, c1});
}

// ---- psi(u) = psi(v) + psi((sqrt((v-1)(u-1)) + sqrt(uv))^2), psi = A arccos sqrt

std::optional<Sample> eval_eq6_arc(SampleStream& s, const RunOptions& o) {
  double amp = slu(s, o);
  double u = s.uniform(0.05, 0.95);
  double v = s.uniform(0.05, 0.95);
  if (u > v) std::swap(u, v);  // the decomposed angle must not exceed the whole
  if (v - u < 1e-4) return std::nullopt;  // keep arccos near zeta ~ 1 conditioned
  double zeta = std::sqrt((1.0 - v) * (1.0 - u)) + std::sqrt(u * v);
  double lhs = amp * std::acos(std::sqrt(u));
  double rhs = amp * std::acos(std::sqrt(v)) + amp * std::acos(std::clamp(zeta, -1.0, 1.0));
  double res = std::abs(lhs - rhs);
  return Sample{res, res / std::max(1.0, std::abs(lhs)), {u, v, amp}};
}

// ---- affine decomposition identity for f = A ln|w3| ---------------------------

std::optional<Sample> eval_add21_affine(SampleStream& s, const RunOptions& o) {
  PairInvariants w{slu(s, o), slu(s, o), slu(s, o)};
  double a1 = slu(s, o), a2 = slu(s, o), amp = slu(s, o);
  double delta = add21_delta(w, a1, a2);
  if (std::abs(delta) < 1e-6) return std::nullopt;
  auto [ac, cb] = add21_arguments(w, a1, a2);
  double lhs = amp * std::log(std::abs(w.w3));
  double rhs = amp * std::log(std::abs(ac.w3)) + amp * std::log(std::abs(cb.w3));
  return make_sample(lhs, rhs, {w.w1, w.w2, w.w3, a1, a2, amp});
}

// ---- family bingle additivity through scaling intermediates -------------------

std::optional<Sample> eval_family_scaling(SampleStream& s, const RunOptions& o) {
  Vector3 a = signed_vec(s, o);
  RatioVector xi{{s.signed_log_uniform(0.2, 5.0), s.signed_log_uniform(0.2, 5.0),
                  s.signed_log_uniform(0.2, 5.0)}};
  Vector3 b{xi[0] * a[0], xi[1] * a[1], xi[2] * a[2]};
  PairInvariants w = invariants_of_ratio(xi);
  if (std::abs(w.w1) < 0.05 || std::abs(w.w2) < 0.05) return std::nullopt;
  FamilyParams p{slu(s, o), slu(s, o), slu(s, o), 1.0};
  // scale factor depending on all three invariants, bounded away from zero
  double q1 = s.uniform(-1.0, 1.0), q2 = s.uniform(-1.0, 1.0);
  auto phi = [&](double w1, double w2, double w3) {
    double f = 1.0 + 0.4 * q1 * std::tanh(w1 / 10.0) + 0.4 * q2 * std::tanh(w3 / 10.0);
    (void)w2;
    return f;
  };
  Vector3 c = intermediate_scaling(a, b, phi);
  double lhs = family_bingle(a, b, p);
  double rhs = family_bingle(a, c, p) + family_bingle(c, b, p);
  return make_sample(lhs, rhs, {xi[0], xi[1], xi[2], p.A, p.B, p.C});
}

// ---- 3-orthogonal additivity of Phi(w1^3/w3) on the w2 = 0 submanifold --------

std::optional<Sample> eval_addfin_sym(SampleStream& s, const RunOptions& o) {
  Vector3 a = positive_vec(s, o);
  double xi1 = s.log_uniform(0.5, 2.0);
  double t = s.log_uniform(0.4, 2.5);
  if (std::abs(t - 1.0) < 0.01) return std::nullopt;
  double xi2 = t * xi1;
  double xi3 = -xi1 * xi2 / (xi1 + xi2);  // makes w2 = 0
  RatioVector xi{{xi1, xi2, xi3}};
  PairInvariants w = invariants_of_ratio(xi);
  double x = w.w1 * w.w1 * w.w1 / w.w3;
  if (!(1.0 + x / 9.0 > 0.01)) return std::nullopt;
  double k = slu(s, o);

  // route 1: the symmetric decomposition arguments written in (w1, w2, w3, w)
  double wd = w_direct(xi);
  double u1_ac = k * (xi[2] - xi[1]) + k * (xi[0] - xi[2]) + k * (xi[1] - xi[0]);
  double u3_ac = -k * k * k * wd;
  double u1_cb = k * wd / w.w3;
  double u3_cb = -k * k * k * wd / w.w3;
  double formal = ortho_log_phi(x) - ortho_log_phi(u1_ac * u1_ac * u1_ac / u3_ac) -
                  ortho_log_phi(u1_cb * u1_cb * u1_cb / u3_cb);

  // route 2: an actual intermediate vector and pair invariants
  Vector3 b{xi[0] * a[0], xi[1] * a[1], xi[2] * a[2]};
  Vector3 c;
  try {
    c = intermediate_orthogonal(a, b, {k, k, k});
  } catch (const Error&) {
    return std::nullopt;
  }
  double cmax = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
  double cmin = std::min({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
  if (cmin < 1e-3 * cmax) return std::nullopt;
  PairInvariants wac = pair_invariants(a, c);
  PairInvariants wcb = pair_invariants(c, b);
  double vector_route = ortho_log_phi(x) -
                        ortho_log_phi(wac.w1 * wac.w1 * wac.w1 / wac.w3) -
                        ortho_log_phi(wcb.w1 * wcb.w1 * wcb.w1 / wcb.w3);

  double res = std::max(std::abs(formal), std::abs(vector_route));
  double scale = std::max(1.0, std::abs(ortho_log_phi(x)));
  return Sample{res, res / scale, {xi1, t, k, a[0], a[1], a[2]}};
}

// ---- Phi(x) = Phi(0) + Phi(4x + 27) -------------------------------------------

std::optional<Sample> eval_addfin3_w2zero(SampleStream& s, const RunOptions&) {
  double x = s.log_uniform(1e-2, 1009.0) - 9.0;
  double lhs = ortho_log_phi(x);
  double rhs = ortho_log_phi(0.0) + ortho_log_phi(4.0 * x + 27.0);
  double res = std::abs(lhs - rhs);
  return Sample{res, res / std::max(1.0, std::abs(lhs)), {x}};
}

// ---- Phi(psi(x)) = Phi(x) - Phi(0) for linear fractional Phi ------------------

std::optional<Sample> eval_addfin3_moebius(SampleStream& s, const RunOptions&) {
  MoebiusParams m{s.signed_log_uniform(0.1, 3.0), s.signed_log_uniform(0.1, 3.0),
                  s.signed_log_uniform(0.1, 3.0), s.signed_log_uniform(0.1, 3.0)};
  if (std::abs(m.det()) < 0.05 || std::abs(m.d) < 0.1) return std::nullopt;
  double x = s.signed_log_uniform(0.1, 10.0);
  auto mphi = [&](double t) { return (m.a * t + m.b) / (m.c * t + m.d); };
  if (std::abs(m.c * x + m.d) < 0.01) return std::nullopt;
  if (std::abs(m.b * m.c * m.c * x + m.a * m.d * m.d) < 0.01) return std::nullopt;
  double psi = psi_moebius(x, m);
  if (std::abs(m.c * psi + m.d) < 0.01) return std::nullopt;
  double lhs = mphi(psi);
  double rhs = mphi(x) - mphi(0.0);
  double res = std::abs(lhs - rhs);
  return Sample{res, res / std::max(1.0, std::abs(lhs)), {m.a, m.b, m.c, m.d, x}};
}

// ---- exponential bingles: additivity, conformal invariance, metric form -------

std::optional<Sample> eval_exp_additivity(SampleStream& s, const RunOptions& o) {
  auto hyper = [&] {
    return HyperNumber{lu(s, o), lu(s, o), lu(s, o)};
  };
  HyperNumber a = hyper(), b = hyper(), c = hyper();
  double lam = lu(s, o), mu = lu(s, o);
  HyperNumber la{lam * a[0], lam * a[1], lam * a[2]};
  HyperNumber mb{mu * b[0], mu * b[1], mu * b[2]};

  auto [p1, p2] = exp_bingles(a, b);
  auto [q1, q2] = exp_bingles(a, c);
  auto [r1, r2] = exp_bingles(c, b);
  auto [s1, s2] = exp_bingles(la, mb);
  auto [m1, m2] = exp_bingles_metric_form(a, b);

  double res = std::max({std::abs(p1 - q1 - r1), std::abs(p2 - q2 - r2), std::abs(s1 - p1),
                         std::abs(s2 - p2), std::abs(m1 - p1), std::abs(m2 - p2)});
  double scale = std::max({1.0, std::abs(p1), std::abs(p2)});
  return Sample{res, res / scale, {a[0], a[1], a[2], b[0], b[1], b[2]}};
}

// ---- tringle identity suite and fourth-variant additivity ---------------------

std::optional<Sample> eval_tringle_v4(SampleStream& s, const RunOptions& o) {
  Vector3 a = positive_vec(s, o), b = positive_vec(s, o), c = positive_vec(s, o),
          d = positive_vec(s, o);
  double A = slu(s, o), B = slu(s, o);

  double base = tringle_AB(a, b, c, A, B);
  double r1 = std::abs(tringle_AB(a, a, a, A, B));
  double r2 = std::abs(tringle_AB(a, a, c, A, B) - B * affine_bingle(a, c, 1.0));
  double r3 = std::abs(tringle_AB(a, c, b, A, B) - tringle_AB(a, b, c, B, A));
  double r4 = std::abs(tringle_AB(b, a, c, A, B) - tringle_AB(a, b, c, -A - B, B));
  auto phi = [&](const Vector3& x, const Vector3& y, const Vector3& z) {
    return tringle_AB(x, y, z, A, B);
  };
  double r5 = std::abs(tringle_additivity_residual(phi, a, b, c, d, 4));

  double res = std::max({r1, r2, r3, r4, r5});
  double scale = std::max(1.0, std::abs(base));
  return Sample{res, res / scale, {A, B, a[0], b[0], c[0], d[0]}};
}

// ---- additivity of ln(w1/3) through the conic coplanarity surface -------------

std::optional<Sample> eval_pc_prop5(SampleStream& s, const RunOptions& o) {
  Vector3 a = positive_vec(s, o), b = positive_vec(s, o);
  RatioVector xi = ratio_of(a, b);
  double theta = s.uniform(0.0, 2.0 * M_PI);
  double cu = std::cos(theta), cv = std::sin(theta);

  // march outward along the ray, bisect the first pole-free sign change
  auto g = [&](double tau) { return section_residual(tau * cu, tau * cv, xi); };
  auto has_pole = [&](double t0, double t1) {
    for (double p : {cu != 0.0 ? (1.0 / 3.0) / cu : -1.0, cv != 0.0 ? (1.0 / 3.0) / cv : -1.0,
                     cu + cv != 0.0 ? (-1.0 / 3.0) / (cu + cv) : -1.0}) {
      if (t0 < p && p < t1) return true;
    }
    return false;
  };

  const int steps = 240;
  const double tau_max = 1.2;
  double t_prev = 1e-4, g_prev = g(t_prev);
  double root = 0.0;
  bool found = false;
  for (int i = 1; i <= steps && !found; ++i) {
    double t = tau_max * i / steps;
    if (has_pole(t_prev, t)) {
      t_prev = t;
      g_prev = g(t);
      continue;
    }
    double gt = g(t);
    if (g_prev * gt < 0.0) {
      double lo = t_prev, hi = t, glo = g_prev, mid = 0.0, gm = 0.0;
      for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        gm = g(mid);
        if (std::abs(gm) <= 1e-13 || hi - lo < 1e-16) break;
        if ((glo < 0.0) != (gm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          glo = gm;
        }
      }
      if (std::abs(gm) <= 1e-11) {
        root = mid;
        found = true;
      }
    }
    t_prev = t;
    g_prev = gt;
  }
  if (!found) return std::nullopt;

  double u = root * cu, v = root * cv;
  std::array<double, 3> x{1.0 / 3.0 + u + v, 1.0 / 3.0 - u, 1.0 / 3.0 - v};
  if (std::abs(x[0]) < 1e-4 || std::abs(x[1]) < 1e-4 || std::abs(x[2]) < 1e-4)
    return std::nullopt;
  Vector3 c{x[0] * a[0], x[1] * a[1], x[2] * a[2]};

  // the A=1, B=C=0, D=1/3 bingle: ln(w1) + ln(1/3)
  auto bingle = [](const Vector3& p, const Vector3& q) {
    double w1 = pair_invariants(p, q).w1;
    if (!(w1 > 0.0)) fail(Errc::domain_violation, "w1 must stay positive");
    return std::log(w1 / 3.0);
  };
  double lhs = bingle(a, b);
  double rhs = bingle(a, c) + bingle(c, b);
  double res = std::abs(lhs - rhs);

  // the same membership through the printed condition residual
  auto [r1, r2] = pc_coplanarity_residuals(a, b, c, FamilyParams{1.0, 0.0, 0.0, 1.0 / 3.0},
                                           0.0, 0.0, 1.0);
  double w1ab = pair_invariants(a, b).w1;
  res = std::max(res, std::abs(r1) / std::max(1.0, 3.0 * w1ab));
  (void)r2;
  return Sample{res, res / std::max(1.0, std::abs(lhs)), {xi[0], xi[1], xi[2], theta}};
}

// ---- discriminant identity -----------------------------------------------------

std::optional<Sample> eval_nabla(SampleStream& s, const RunOptions& o) {
  RatioVector xi{{slu(s, o), slu(s, o), slu(s, o)}};
  double lhs = discriminant_sq(invariants_of_ratio(xi));
  double rhs = w_direct(xi) * w_direct(xi);
  return make_sample(lhs, rhs, {xi[0], xi[1], xi[2]});
}

// ---- the quadruple-invariant table identity suite ------------------------------

std::optional<Sample> eval_quad_table(SampleStream& s, const RunOptions& o) {
  Vector3 a = signed_vec(s, o);
  auto rv = [&] {
    return RatioVector{{s.signed_log_uniform(1.0 / 3.0, 3.0),
                        s.signed_log_uniform(1.0 / 3.0, 3.0),
                        s.signed_log_uniform(1.0 / 3.0, 3.0)}};
  };
  RatioVector xi = rv(), eta = rv(), de = rv();
  Vector3 b{xi[0] * a[0], xi[1] * a[1], xi[2] * a[2]};
  Vector3 c{eta[0] * a[0], eta[1] * a[1], eta[2] * a[2]};
  Vector3 d{de[0] * a[0], de[1] * a[1], de[2] * a[2]};

  QuadInvariantTable t = quad_table(a, b, c, d);
  double worst_abs = 0.0, worst_rel = 0.0;
  for (const TableIdentity& ident : quad_table_identities(t)) {
    double abs_res = std::abs(ident.lhs - ident.rhs);
    worst_abs = std::max(worst_abs, abs_res);
    worst_rel = std::max(worst_rel, abs_res / rel_scale(ident.lhs, ident.rhs));
  }
  return Sample{worst_abs, worst_rel, {a[0], xi[0], eta[0], de[0]}};
}

// ---- ratio reconstruction round-trip -------------------------------------------

std::optional<Sample> eval_roundtrip_cubic(SampleStream& s, const RunOptions& o) {
  Vector3 a = positive_vec(s, o);
  auto rv = [&] {
    return RatioVector{{s.log_uniform(0.2, 5.0), s.log_uniform(0.2, 5.0),
                        s.log_uniform(0.2, 5.0)}};
  };
  RatioVector xi = rv(), eta = rv(), de = rv();
  // reject near-multiple roots: the cubic conditioning degrades as the
  // inverse square of the smallest root gap
  for (const RatioVector* r : {&xi, &eta, &de}) {
    double m = std::max({(*r)[0], (*r)[1], (*r)[2], 1.0});
    if (std::abs((*r)[0] - (*r)[1]) < 1e-3 * m || std::abs((*r)[1] - (*r)[2]) < 1e-3 * m ||
        std::abs((*r)[0] - (*r)[2]) < 1e-3 * m)
      return std::nullopt;
  }
  Vector3 b{xi[0] * a[0], xi[1] * a[1], xi[2] * a[2]};
  Vector3 c{eta[0] * a[0], eta[1] * a[1], eta[2] * a[2]};
  Vector3 d{de[0] * a[0], de[1] * a[1], de[2] * a[2]};

  QuadInvariantTable t = quad_table(a, b, c, d);
  auto triples = reconstruct_ratio_triples(t);

  double worst = 0.0;
  const RatioVector* truth[3] = {&xi, &eta, &de};
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> want{(*truth[i])[0], (*truth[i])[1], (*truth[i])[2]};
    std::sort(want.begin(), want.end());
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, std::abs(triples[i][j] - want[j]) /
                                  std::max(1.0, std::abs(want[j])));
    }
  }
  double direct = w4(a, b, c);
  double member = 1e300;
  for (double v : generalized_tringle_w4(t))
    member = std::min(member, std::abs(v - direct));
  worst = std::max(worst, member / std::max(1.0, std::abs(direct)));
  return Sample{worst, worst, {xi[0], eta[0], de[0]}};
}

struct CheckEntry {
  CheckInfo info;
  Evaluator eval;
};

const std::vector<CheckEntry>& checks() {
  static const std::vector<CheckEntry> table = {
      {{EquationId::fund1, "FUND1", 1e-9, false,
        "planar pair additivity of arccos sqrt(w1 w2); xi > 0, interior intermediates"},
       eval_fund1},
      {{EquationId::eq3_log, "EQ3_LOG", 1e-12, true,
        "logarithm decomposition F(xi) = F(x) + F(xi/x); xi, x > 0"},
       eval_eq3_log},
      {{EquationId::eq6_arc, "EQ6_ARC", 1e-9, false,
        "arcsine-branch decomposition on u <= v in (0,1)"},
       eval_eq6_arc},
      {{EquationId::add21_affine, "ADD21_AFFINE", 1e-12, true,
        "affine decomposition arguments with f = A ln|w3|; |Delta| >= 1e-6"},
       eval_add21_affine},
      {{EquationId::family_scaling, "FAMILY_SCALING", 1e-10, true,
        "three-parameter log family through scaling intermediates; ratios in [0.2, 5]"},
       eval_family_scaling},
      {{EquationId::addfin_sym, "ADDFIN_SYM", 1e-12, true,
        "equal-weight 3-orthogonal decomposition on the w2 = 0 submanifold"},
       eval_addfin_sym},
      {{EquationId::addfin3_w2zero, "ADDFIN3_W2ZERO", 1e-12, false,
        "Phi(x) = Phi(0) + Phi(4x + 27) for x in (-9, 1e3)"},
       eval_addfin3_w2zero},
      {{EquationId::addfin3_moebius, "ADDFIN3_MOEBIUS", 1e-10, false,
        "Phi(psi(x)) = Phi(x) - Phi(0) for nondegenerate linear fractional maps"},
       eval_addfin3_moebius},
      {{EquationId::exp_additivity, "EXP_ADDITIVITY", 1e-12, true,
        "exponential bingles: additivity, conformal invariance, metric form"},
       eval_exp_additivity},
      {{EquationId::tringle_v4, "TRINGLE_V4", 1e-10, true,
        "tringle identity suite and fourth-variant additivity; positive components"},
       eval_tringle_v4},
      {{EquationId::pc_prop5, "PC_PROP5", 1e-9, false,
        "conic coplanarity surface: additivity of ln(w1/3) through bisected sections"},
       eval_pc_prop5},
      {{EquationId::nabla_identity, "NABLA_IDENTITY", 1e-9, true,
        "discriminant polynomial against the squared difference product"},
       eval_nabla},
      {{EquationId::quad_table_identities, "QUAD_TABLE_IDENTITIES", 1e-12, true,
        "all internal identities of the quadruple invariant table; ratios in [1/3, 3]"},
       eval_quad_table},
      {{EquationId::roundtrip_cubic, "ROUNDTRIP_CUBIC", 1e-8, true,
        "cubic reconstruction of ratio multisets; positive separated ratios"},
       eval_roundtrip_cubic},
  };
  return table;
}

const CheckEntry& check_entry(EquationId id) {
  for (const CheckEntry& e : checks())
    if (e.info.id == id) return e;
  fail(Errc::unknown_equation, "no registered check for this equation id");
}

struct ChunkResult {
  double max_abs = 0.0;
  double max_rel = 0.0;
  std::uint64_t rejections = 0;
  std::vector<SampleFailure> failures;
};

ChunkResult run_chunk(const CheckEntry& entry, const RunOptions& opts, double tol,
                      std::uint64_t begin, std::uint64_t end) {
  ChunkResult r;
  for (std::uint64_t i = begin; i < end; ++i) {
    SampleStream stream(opts.seed, i);
    std::optional<Sample> sample;
    for (int attempt = 0; !sample; ++attempt) {
      if (attempt >= 100000)
        fail(Errc::invalid_input, "sampler rejected 100000 consecutive draws");
      sample = entry.eval(stream, opts);
      if (!sample) ++r.rejections;
    }
    r.max_abs = std::max(r.max_abs, sample->abs_residual);
    r.max_rel = std::max(r.max_rel, sample->rel_residual);
    double gated = entry.info.gate_relative ? sample->rel_residual : sample->abs_residual;
    if (gated > tol) r.failures.push_back({i, std::move(sample->inputs), gated});
  }
  return r;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const CheckEntry& e : checks()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const CheckInfo& check_info(EquationId id) { return check_entry(id).info; }

const char* equation_name(EquationId id) { return check_info(id).name; }

EquationId equation_from_name(const std::string& name) {
  for (const CheckEntry& e : checks())
    if (name == e.info.name) return e.info.id;
  fail(Errc::unknown_equation, "unknown equation '" + name + "'");
}

std::vector<EquationId> all_equations() {
  std::vector<EquationId> ids;
  for (const CheckEntry& e : checks()) ids.push_back(e.info.id);
  return ids;
}

VerificationReport run_check(EquationId eq, const RunOptions& opts) {
  const CheckEntry& entry = check_entry(eq);
  if (opts.samples < 1) fail(Errc::invalid_input, "run_check needs samples >= 1");
  const double tol = opts.tolerance.value_or(entry.info.default_tol);

  auto t0 = std::chrono::steady_clock::now();

  unsigned workers = opts.workers;
  if (workers == 0)
    workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, opts.samples)));

  std::vector<std::future<ChunkResult>> futures;
  std::uint64_t chunk = (opts.samples + workers - 1) / workers;
  for (unsigned wk = 0; wk < workers; ++wk) {
    std::uint64_t begin = wk * chunk;
    std::uint64_t end = std::min(opts.samples, begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&entry, &opts, tol, begin, end] {
      return run_chunk(entry, opts, tol, begin, end);
    }));
  }

  VerificationReport report;
  report.equation = eq;
  report.seed = opts.seed;
  report.samples = opts.samples;
  report.tolerance = tol;
  report.gate_relative = entry.info.gate_relative;
  for (auto& f : futures) {
    ChunkResult r = f.get();  // chunks folded in index order
    report.max_abs_residual = std::max(report.max_abs_residual, r.max_abs);
    report.max_rel_residual = std::max(report.max_rel_residual, r.max_rel);
    report.rejections += r.rejections;
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<VerificationReport> run_all(const RunOptions& opts) {
  std::vector<VerificationReport> reports;
  for (EquationId id : all_equations()) reports.push_back(run_check(id, opts));
  return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::string summary_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass() ? "pass " : "FAIL ") << equation_name(r.equation) << " samples=" << r.samples
     << " max_abs=" << r.max_abs_residual << " max_rel=" << r.max_rel_residual
     << " tol=" << r.tolerance << (r.gate_relative ? " (rel)" : " (abs)")
     << " rejections=" << r.rejections << " elapsed=" << r.elapsed_seconds << "s";
  return os.str();
}

}  // namespace bm
