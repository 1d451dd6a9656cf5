#include "bmangle/tringles.hpp"

#include <algorithm>
#include <cmath>

namespace bm {

double tringle_AB(const Vector3& a, const Vector3& b, const Vector3& c, double A, double B) {
  require_non_isotropic(b, "tringle_AB vector b");
  require_non_isotropic(c, "tringle_AB vector c");
  PairInvariants wab = pair_invariants(a, b);
  PairInvariants wac = pair_invariants(a, c);
  if (std::abs(wab.w3) < 1e-300 || std::abs(wac.w3) < 1e-300)
    fail(Errc::domain_violation, "tringle_AB: a w3 invariant vanishes");
  return A * std::log(std::abs(wab.w3)) + B * std::log(std::abs(wac.w3));
}

double tringle_additivity_residual(const TringleFn& phi, const Vector3& a, const Vector3& b,
                                   const Vector3& c, const Vector3& d, int variant) {
  double lhs = phi(a, b, c);
  switch (variant) {
    case 1: return lhs - (phi(d, b, c) + phi(a, d, c) + phi(a, b, d));
    case 2: return lhs - (phi(a, b, d) + phi(b, c, d) + phi(c, a, d));
    case 4: return lhs - (phi(a, d, d) + phi(d, b, d) + phi(d, d, c));
    default:
      fail(Errc::invalid_input, "additivity variant must be 1, 2 or 4");
  }
}

RootTriple solve_cubic_real(const CubicCoeffs& c, double tol) {
  const double c2 = c.c2, c1 = c.c1, c0 = c.c0;
  // q and r of the depressed form; three real roots iff r^2 <= q^3.
  const double q = (c2 * c2 - 3.0 * c1) / 9.0;
  const double r = (2.0 * c2 * c2 * c2 - 9.0 * c2 * c1 + 27.0 * c0) / 54.0;
  const double disc = q * q * q - r * r;
  const double tol_eff = tol * std::max(1.0, c2 * c2 + c1 * c1 + c0 * c0);

  if (disc < -tol_eff)
    fail(Errc::non_real_roots, "cubic has one real and two complex roots");

  RootTriple out;
  if (q <= 0.0) {
    // with disc >= -tol this forces q ~ 0 ~ r: a (near-)triple root
    double t = -c2 / 3.0;
    out.roots = {t, t, t};
    return out;
  }
  const double theta = std::acos(std::clamp(r / std::sqrt(q * q * q), -1.0, 1.0));
  const double s = -2.0 * std::sqrt(q);
  const double two_pi = 2.0 * M_PI;
  out.roots = {s * std::cos(theta / 3.0) - c2 / 3.0,
               s * std::cos((theta + two_pi) / 3.0) - c2 / 3.0,
               s * std::cos((theta - two_pi) / 3.0) - c2 / 3.0};
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

namespace {

// Cubic whose roots are the ratio triple of the pair (x, y), with every
// coefficient drawn from table entries:
//   t^3 - [3 w2_yx * (w4_xyd / w4_yxd)] t^2 + [3 w2_xy] t - w3_xy = 0.
CubicCoeffs ratio_cubic(const QuadInvariantTable& t, const std::string& pair_xy,
                        const std::string& pair_yx, const std::string& w4_num,
                        const std::string& w4_den) {
  double den = t.at(w4_den);
  if (den == 0.0)
    fail(Errc::degenerate_invariant, "vanishing " + w4_den + " in a cubic coefficient");
  CubicCoeffs c;
  c.c2 = -3.0 * t.at("w2_" + pair_yx) * (t.at(w4_num) / den);
  c.c1 = 3.0 * t.at("w2_" + pair_xy);
  c.c0 = -t.at("w3_" + pair_xy);
  return c;
}

}  // namespace

std::array<RootTriple, 3> reconstruct_ratio_triples(const QuadInvariantTable& t) {
  CubicCoeffs xi_cubic = ratio_cubic(t, "ab", "ba", "w4_abd", "w4_bad");
  CubicCoeffs eta_cubic = ratio_cubic(t, "ac", "ca", "w4_acd", "w4_cad");
  CubicCoeffs de_cubic = ratio_cubic(t, "ad", "da", "w4_acd", "w4_dca");
  return {solve_cubic_real(xi_cubic), solve_cubic_real(eta_cubic), solve_cubic_real(de_cubic)};
}

std::vector<double> generalized_tringle_w4(const QuadInvariantTable& t) {
  auto triples = reconstruct_ratio_triples(t);
  const RootTriple& xi = triples[0];
  const RootTriple& eta = triples[1];

  std::array<int, 3> perm{0, 1, 2};
  std::vector<double> values;
  std::sort(perm.begin(), perm.end());
  do {
    RatioVector p{{xi[perm[0]], xi[perm[1]], xi[perm[2]]}};
    RatioVector q{{eta[0], eta[1], eta[2]}};
    values.push_back((delta1(p, q) + delta2(p, q) + delta3(p, q)) / 6.0);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (out.empty() || std::abs(v - out.back()) > 1e-12 * std::max(1.0, std::abs(v)))
      out.push_back(v);
  }
  return out;
}

}  // namespace bm
