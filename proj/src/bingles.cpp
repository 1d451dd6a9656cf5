#include "bmangle/bingles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bm {

namespace {

constexpr double kLn3 = 1.0986122886681098;
constexpr double kLn4 = 1.3862943611198906;

double norm2(const std::vector<double>& u) {
  double s = 0.0;
  for (double x : u) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) fail(Errc::dimension_mismatch, "angle arguments differ in size");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// ln|base| guarded against an exactly vanishing invariant; exponent 0 means
// the factor is absent and the base is not inspected.
double log_abs_pow(double base, double expo, const char* which) {
  if (expo == 0.0) return 0.0;
  if (std::abs(base) < 1e-300)
    fail(Errc::vanishing_invariant, std::string(which) + " vanishes under a nonzero exponent");
  return expo * std::log(std::abs(base));
}

// base^expo for the power-law coplanarity conditions: real exponents need a
// positive base.
double pos_pow(double base, double expo, const char* which) {
  if (expo == 0.0) return 1.0;
  if (!(base > 0.0))
    fail(Errc::domain_violation,
         std::string(which) + " must be positive under a real exponent");
  return std::pow(base, expo);
}

}  // namespace

double euclid_phi1(const std::vector<double>& u, const std::vector<double>& v) {
  double nu = norm2(u), nv = norm2(v);
  double d = dot(u, v);
  if (nu == 0.0 || nv == 0.0) fail(Errc::zero_vector, "euclid_phi1 needs nonzero vectors");
  return std::acos(std::clamp(d / (nu * nv), -1.0, 1.0));
}

double euclid_phi2(const std::vector<double>& u, const std::vector<double>& v) {
  double nu = norm2(u), nv = norm2(v);
  if (u.size() != v.size()) fail(Errc::dimension_mismatch, "angle arguments differ in size");
  if (nu == 0.0 || nv == 0.0) fail(Errc::zero_vector, "euclid_phi2 needs nonzero vectors");
  return std::log(nu / nv);
}

double pseudo_phi1(const std::vector<double>& u, const std::vector<double>& v) {
  QuadraticForm eta = QuadraticForm::pseudo_plane();
  double uu = qform_dot(eta, u, u), vv = qform_dot(eta, v, v), uv = qform_dot(eta, u, v);
  if (uu == 0.0 && vv == 0.0 && uv == 0.0)
    fail(Errc::zero_vector, "pseudo_phi1 needs nonzero vectors");
  if (!(uu > 0.0) || !(vv > 0.0))
    fail(Errc::sector_violation, "pseudo_phi1 arguments must be timelike");
  double q = uv / std::sqrt(uu * vv);
  if (q < 1.0 - 1e-12)
    fail(Errc::sector_violation, "pseudo_phi1 arguments lie in different sectors");
  return std::acosh(std::max(q, 1.0));
}

double affine_bingle(const Vector3& a, const Vector3& b, double A) {
  require_non_isotropic(b, "affine_bingle vector b");
  PairInvariants w = pair_invariants(a, b);
  return A * std::log(std::abs(w.w3));
}

double family_bingle(const Vector3& a, const Vector3& b, const FamilyParams& p) {
  PairInvariants w = pair_invariants(a, b);
  return log_abs_pow(w.w1, p.A, "w1") + log_abs_pow(w.w2, p.B, "w2") +
         log_abs_pow(w.w3, p.C, "w3") - (p.A + p.B) * kLn3;
}

double ortho_log_phi(double x) {
  if (!(1.0 + x / 9.0 > 0.0))
    fail(Errc::domain_violation, "ortho bingle argument must satisfy w1^3/w3 > -9");
  return std::log1p(x / 9.0) - kLn4;
}

double ortho_bingle_log(const Vector3& a, const Vector3& b) {
  PairInvariants w = pair_invariants(a, b);
  require_non_isotropic(b, "ortho_bingle_log vector b");
  if (std::abs(w.w2) > 1e-9 * std::max(1.0, w.w1 * w.w1))
    fail(Errc::submanifold_violation, "pair does not satisfy w2 = 0 within tolerance");
  return ortho_log_phi(w.w1 * w.w1 * w.w1 / w.w3);
}

double ortho_bingle_moebius(const Vector3& a, const Vector3& b, const MoebiusParams& m) {
  PairInvariants w = pair_invariants(a, b);
  require_non_isotropic(b, "ortho_bingle_moebius vector b");
  double w13 = w.w1 * w.w1 * w.w1;
  double den = m.c * w13 + m.d * w.w3;
  if (den == 0.0) fail(Errc::pole_hit, "ortho_bingle_moebius denominator vanishes");
  return (m.a * w13 + m.b * w.w3) / den;
}

double psi_moebius(double x, const MoebiusParams& m) {
  if (m.det() == 0.0) fail(Errc::invalid_input, "psi_moebius needs ad - bc != 0");
  if (m.d == 0.0) fail(Errc::pole_hit, "psi_moebius needs d != 0 so Phi(0) is finite");
  double num = m.d * (m.a * m.d - 2.0 * m.b * m.c) * x - m.b * m.d * m.d;
  double den = m.b * m.c * m.c * x + m.a * m.d * m.d;
  if (den == 0.0) fail(Errc::pole_hit, "psi_moebius denominator vanishes");
  return num / den;
}

Vector3 intermediate_affine(const Vector3& a, const Vector3& b, double alpha1, double alpha2) {
  return alpha1 * a + alpha2 * b;
}

Vector3 intermediate_scaling(const Vector3& a, const Vector3& b,
                             const std::function<double(double, double, double)>& phi) {
  PairInvariants w = pair_invariants(a, b);
  double s = phi(w.w1, w.w2, w.w3);
  if (s == 0.0 || !std::isfinite(s))
    fail(Errc::zero_scale, "scaling coefficient vanishes or is not finite");
  return s * a;
}

Vector3 intermediate_orthogonal(const Vector3& a, const Vector3& b,
                                const std::array<double, 3>& k) {
  RatioVector xi = ratio_of(a, b);
  Vector3 c{k[1] * (a[0] * xi[1] + b[0]) - k[2] * (a[0] * xi[2] + b[0]),
            k[2] * (a[1] * xi[2] + b[1]) - k[0] * (a[1] * xi[0] + b[1]),
            k[0] * (a[2] * xi[0] + b[2]) - k[1] * (a[2] * xi[1] + b[2])};
  // A zero component is legitimate output (the c is still a 3-orthogonality
  // witness); only the zero vector is useless for any purpose.
  if (c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0)
    fail(Errc::degenerate_intermediate, "constructed intermediate vanishes");
  return c;
}

std::pair<PairInvariants, PairInvariants> add21_arguments(const PairInvariants& w,
                                                          double a1, double a2) {
  double delta = add21_delta(w, a1, a2);
  PairInvariants ac{3.0 * a1 + a2 * w.w1,
                    3.0 * a1 * a1 + a2 * a2 * w.w2 + 2.0 * a1 * a2 * w.w1, delta};
  PairInvariants cb{(a1 * a1 * w.w1 + 3.0 * a2 * a2 * w.w3 + 2.0 * a1 * a2 * w.w2) / delta,
                    (a1 * w.w2 + 3.0 * a2 * w.w3) / delta, w.w3 / delta};
  return {ac, cb};
}

double add21_delta(const PairInvariants& w, double a1, double a2) {
  return a1 * a1 * a1 + a2 * a2 * a2 * w.w3 + a1 * a1 * a2 * w.w1 + a1 * a2 * a2 * w.w2;
}

std::pair<double, double> pc_coplanarity_residuals(const Vector3& a, const Vector3& b,
                                                   const Vector3& c, const FamilyParams& p,
                                                   double alpha, double beta, double gamma,
                                                   double k) {
  if (p.A == 0.0 && p.B == 0.0) return {0.0, 0.0};  // unconditionally additive
  if (!(p.D > 0.0)) fail(Errc::invalid_input, "coplanarity condition needs D > 0");
  PairInvariants wab = pair_invariants(a, b);
  PairInvariants wac = pair_invariants(a, c);
  PairInvariants wcb = pair_invariants(c, b);

  double r1 = 0.0, r2 = 0.0;
  if (p.A != 0.0) {
    double rhs = pos_pow(gamma, p.B, "gamma") * pos_pow(p.D, -1.0 / p.A, "D") *
                 pos_pow(wab.w1, 1.0 - beta * p.B / p.A, "w1") *
                 pos_pow(wab.w2, alpha, "w2") * pos_pow(wab.w3, -k * p.B, "w3");
    r1 = wac.w1 * wcb.w1 - rhs;
  }
  if (p.B != 0.0) {
    double rhs = pos_pow(gamma, -p.A, "gamma") * pos_pow(wab.w1, beta, "w1") *
                 pos_pow(wab.w2, 1.0 - alpha * p.A / p.B, "w2") *
                 pos_pow(wab.w3, k * p.A, "w3");
    r2 = wac.w2 * wcb.w2 - rhs;
  }
  return {r1, r2};
}

double conic_surface_residual(const std::array<double, 3>& x, const RatioVector& xi) {
  for (double xi_c : x)
    if (xi_c == 0.0) fail(Errc::pole_hit, "conic surface residual needs x_i != 0");
  double lhs = (x[0] + x[1] + x[2]) * (xi[0] / x[0] + xi[1] / x[1] + xi[2] / x[2]);
  return lhs - 3.0 * (xi[0] + xi[1] + xi[2]);
}

double section_residual(double u, double v, const RatioVector& xi) {
  double d1 = 1.0 / 3.0 + u + v, d2 = u - 1.0 / 3.0, d3 = v - 1.0 / 3.0;
  if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0)
    fail(Errc::pole_hit, "section residual evaluated on an excluded line");
  return (u + v) * xi[0] / d1 + u * xi[1] / d2 + v * xi[2] / d3;
}

namespace {

// True when one of the section poles v = 1/3 or v = -1/3 - u lies strictly
// inside (v_lo, v_hi); sign flips across them are not roots.
bool pole_inside(double u, double v_lo, double v_hi) {
  double p1 = 1.0 / 3.0;
  double p2 = -1.0 / 3.0 - u;
  return (v_lo < p1 && p1 < v_hi) || (v_lo < p2 && p2 < v_hi);
}

}  // namespace

std::vector<SurfacePoint> fig1_section(const RatioVector& xi, const SurfaceGrid& grid) {
  if (grid.nu < 1 || grid.nv < 1) fail(Errc::invalid_input, "surface grid needs >= 1 cell");
  std::vector<SurfacePoint> pts;
  const double du = (grid.u_max - grid.u_min) / grid.nu;
  const double dv = (grid.v_max - grid.v_min) / grid.nv;

  auto g = [&](double u, double v) { return section_residual(u, v, xi); };

  for (int i = 0; i <= grid.nu; ++i) {
    double u = grid.u_min + i * du;
    if (u == 1.0 / 3.0) continue;  // whole row excluded
    double v_prev = grid.v_min;
    double g_prev = 0.0;
    bool have_prev = false;
    bool prev_emitted = false;
    for (int j = 0; j <= grid.nv; ++j) {
      double v = grid.v_min + j * dv;
      if (v == 1.0 / 3.0 || u + v == -1.0 / 3.0) {  // node on an excluded line
        have_prev = false;
        prev_emitted = false;
        continue;
      }
      double gv = g(u, v);
      bool emitted = false;
      if (std::abs(gv) <= grid.tol) {
        pts.push_back({u, v});
        emitted = true;
      } else if (have_prev && !prev_emitted && g_prev * gv < 0.0 &&
                 !pole_inside(u, v_prev, v)) {
        // strict sign change in a pole-free cell: bisect
        double lo = v_prev, hi = v, glo = g_prev;
        double mid = 0.5 * (lo + hi), gm = 0.0;
        for (int it = 0; it < 200; ++it) {
          mid = 0.5 * (lo + hi);
          gm = g(u, mid);
          if (std::abs(gm) <= 0.25 * grid.tol || hi - lo < 1e-15) break;
          if ((glo < 0.0) != (gm < 0.0)) {
            hi = mid;
          } else {
            lo = mid;
            glo = gm;
          }
        }
        if (std::abs(gm) <= grid.tol) pts.push_back({u, mid});
      }
      v_prev = v;
      g_prev = gv;
      have_prev = true;
      prev_emitted = emitted;
    }
  }
  return pts;
}

}  // namespace bm
