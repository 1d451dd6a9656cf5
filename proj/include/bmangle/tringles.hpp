#pragma once

#include <array>
#include <functional>
#include <vector>

#include "bmangle/invariants.hpp"
#include "bmangle/metric.hpp"

namespace bm {

// Monic cubic t^3 + c2 t^2 + c1 t + c0.
struct CubicCoeffs {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
};

// Three real roots, sorted ascending, multiplicities repeated.
struct RootTriple {
  std::array<double, 3> roots{0.0, 0.0, 0.0};

  double operator[](std::size_t i) const { return roots[i]; }
};

// ln((w3^{ab})^A (w3^{ac})^B) with |.| under the logs; additive through the
// fourth-vector decomposition phi(a,b,c) = phi(a,d,d) + phi(d,b,d) + phi(d,d,c).
double tringle_AB(const Vector3& a, const Vector3& b, const Vector3& c, double A, double B);

using TringleFn = std::function<double(const Vector3&, const Vector3&, const Vector3&)>;

// LHS - RHS of one of the three-vector additivity decompositions through the
// intermediate d. Variants:
//   1: phi(a,b,c) = phi(d,b,c) + phi(a,d,c) + phi(a,b,d)
//   2: phi(a,b,c) = phi(a,b,d) + phi(b,c,d) + phi(c,a,d)
//   4: phi(a,b,c) = phi(a,d,d) + phi(d,b,d) + phi(d,d,c)
// (The signed-permutation variant 3 is deliberately not offered: its sign
// convention is ambiguous as stated, and no function here relies on it.)
double tringle_additivity_residual(const TringleFn& phi, const Vector3& a, const Vector3& b,
                                   const Vector3& c, const Vector3& d, int variant);

// All real roots of a monic cubic via the trigonometric method; fails with
// NonRealRoots when the discriminant is negative beyond tol * max(1, |coeffs|^2).
RootTriple solve_cubic_real(const CubicCoeffs& c, double tol = 1e-10);

// Recovers the ratio multisets {b_i/a_i}, {c_i/a_i}, {d_i/a_i} from a
// quadruple-invariant table by solving the three associated monic cubics.
std::array<RootTriple, 3> reconstruct_ratio_triples(const QuadInvariantTable& t);

// w4 rebuilt from the reconstructed ratio roots. Root order is lost in the
// reconstruction, so the value is returned for every relative pairing of the
// two root triples (deduplicated, sorted ascending); the direct w4(a,b,c)
// belongs to this set.
std::vector<double> generalized_tringle_w4(const QuadInvariantTable& t);

}  // namespace bm
