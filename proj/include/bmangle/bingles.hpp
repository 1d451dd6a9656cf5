#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bmangle/invariants.hpp"
#include "bmangle/metric.hpp"

namespace bm {

// Exponents of the three-parameter bingle family; D enters only the
// log-family variant with the additive ln D term and must be positive.
struct FamilyParams {
  double A = 1.0;
  double B = 0.0;
  double C = 0.0;
  double D = 1.0;
};

// Coefficients of the linear fractional map Phi(x) = (a x + b)/(c x + d).
struct MoebiusParams {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const { return a * d - b * c; }
};

// --- Reference angles of quadratic geometries --------------------------------

// arccos of the normalized Euclidean product; symmetric, additive on coplanar
// triples with an interior intermediate.
double euclid_phi1(const std::vector<double>& u, const std::vector<double>& v);

// ln(|u|/|v|); antisymmetric and unconditionally additive.
double euclid_phi2(const std::vector<double>& u, const std::vector<double>& v);

// arccosh of the normalized product in the (+,-) plane; both vectors must be
// timelike in the same sector.
double pseudo_phi1(const std::vector<double>& u, const std::vector<double>& v);

// --- Bingles of H3 ------------------------------------------------------------

// A * ln|w3|; unconditionally additive over any non-isotropic intermediate.
double affine_bingle(const Vector3& a, const Vector3& b, double A = 1.0);

// ln|w1^A w2^B w3^C| - (A+B) ln 3; additive through scaling intermediates.
double family_bingle(const Vector3& a, const Vector3& b, const FamilyParams& p);

// ln(1 + w1^3/(9 w3)) - ln 4 on the w2 = 0 submanifold.
double ortho_bingle_log(const Vector3& a, const Vector3& b);

// (a w1^3 + b w3)/(c w1^3 + d w3), the linear fractional bingle in w1^3/w3.
double ortho_bingle_moebius(const Vector3& a, const Vector3& b, const MoebiusParams& m);

// The translation conjugate psi = Phi^{-1} o (Phi - Phi(0)) of the map Phi
// given by m, so Phi(psi(x)) = Phi(x) - Phi(0). Written out,
//   psi(x) = (d(ad - 2bc)x - b d^2) / (b c^2 x + a d^2),
// which for ad - bc = 1 is (d(1-bc)x - b d^2) / (c(ad-1)x + a d^2).
double psi_moebius(double x, const MoebiusParams& m);

// The pure w2 = 0 bingle as a scalar function of x = w1^3/w3; satisfies
// phi(x) = phi(0) + phi(4x + 27).
double ortho_log_phi(double x);

// --- Intermediate-vector constructions ----------------------------------------

Vector3 intermediate_affine(const Vector3& a, const Vector3& b, double alpha1, double alpha2);

// c = phi(w1, w2, w3) * a; every family bingle is additive through it.
Vector3 intermediate_scaling(const Vector3& a, const Vector3& b,
                             const std::function<double(double, double, double)>& phi);

// c_i built from weights k so that bm3(a, b, c) = 0 identically:
//   c1 = k2 (a1 xi2 + b1) - k3 (a1 xi3 + b1)   (and cyclic),
// i.e. c = alpha x circ(a,b) with alpha_i = k_i / a_i.
Vector3 intermediate_orthogonal(const Vector3& a, const Vector3& b,
                                const std::array<double, 3>& k);

// The images of a pair-invariant triple under decomposition through the
// affine intermediate alpha1*a + alpha2*b: returns the invariant triples of
// (a,c) and (c,b) expressed in the original (w1,w2,w3) and (alpha1,alpha2).
std::pair<PairInvariants, PairInvariants> add21_arguments(const PairInvariants& w,
                                                          double alpha1, double alpha2);
double add21_delta(const PairInvariants& w, double alpha1, double alpha2);

// --- Nonlinear coplanarity conditions ------------------------------------------

// Residuals of the two power-law conditions tying an intermediate c to the
// pair (a,b) for the bingle ln[w1^A w2^B w3^C] + ln D. The first residual is
// reported as 0 when A = 0, the second when B = 0 (the conditions are void
// there). The exponent k defaults to 0.
std::pair<double, double> pc_coplanarity_residuals(const Vector3& a, const Vector3& b,
                                                   const Vector3& c, const FamilyParams& p,
                                                   double alpha, double beta, double gamma,
                                                   double k = 0.0);

// (x1+x2+x3)(xi1/x1 + xi2/x2 + xi3/x3) - 3(xi1+xi2+xi3): zero on the
// coplanarity cone of the A=1, B=C=0 worked case.
double conic_surface_residual(const std::array<double, 3>& x, const RatioVector& xi);

// The same cone cut by the plane x1+x2+x3 = 1 in the coordinates
// x1 = 1/3+u+v, x2 = 1/3-u, x3 = 1/3-v:
//   (u+v) xi1/(1/3+u+v) + u xi2/(u-1/3) + v xi3/(v-1/3).
double section_residual(double u, double v, const RatioVector& xi);

struct SurfaceGrid {
  double u_min = -1.0, u_max = 1.0;
  double v_min = -1.0, v_max = 1.0;
  int nu = 800;  // cells per axis; nodes = cells + 1
  int nv = 800;
  double tol = 1e-10;
};

struct SurfacePoint {
  double u = 0.0, v = 0.0;
};

// Scans the (u,v) grid row by row: emits grid nodes where the section
// residual already vanishes within tol, and bisects every pole-free cell
// with a strict sign change. Output is row-major and scheduling-independent.
std::vector<SurfacePoint> fig1_section(const RatioVector& xi, const SurfaceGrid& grid = {});

}  // namespace bm
