#pragma once

#include <array>
#include <map>
#include <string>

#include "bmangle/metric.hpp"

namespace bm {

// Componentwise ratio triple xi_i = b_i / a_i; defined for non-isotropic a.
struct RatioVector {
  std::array<double, 3> xi{1.0, 1.0, 1.0};

  double operator[](std::size_t i) const { return xi[i]; }
};

RatioVector ratio_of(const Vector3& a, const Vector3& b);  // b over a

// Elementary symmetric polynomials of a ratio triple: the conformal
// invariants of an ordered pair.
struct PairInvariants {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
};

PairInvariants pair_invariants(const Vector3& a, const Vector3& b);
PairInvariants invariants_of_ratio(const RatioVector& xi);

// Triple invariant w4 = bm3(a,b,c)/bm3(a,a,a)
//                     = (1/6) sum over i != j of xi_i eta_j.
double w4(const Vector3& a, const Vector3& b, const Vector3& c);

// Helper symmetric functions over ratio triples.
double delta_of(const RatioVector& p);                           // p1 p2 p3
double delta1(const RatioVector& p, const RatioVector& q);       // p2 q3 + p3 q2
double delta2(const RatioVector& p, const RatioVector& q);       // p1 q3 + p3 q1
double delta3(const RatioVector& p, const RatioVector& q);       // p1 q2 + p2 q1
double w1_of(const RatioVector& p);                              // p1 + p2 + p3
double w2_of(const RatioVector& p);                              // p1 p2 + p2 p3 + p1 p3
RatioVector ratio_quotient(const RatioVector& p, const RatioVector& q);  // p / q

// The full table of conformal invariants of an ordered vector quadruple,
// keyed by label ("w4_abc", "w3_bd", "w2_ca", ...), together with the helper
// values delta_xi, w1_xi, w2_xi (and the eta/delta counterparts).
struct QuadInvariantTable {
  std::map<std::string, double> entries;
  RatioVector xi, eta, delta;  // b/a, c/a, d/a

  double at(const std::string& label) const;
  bool has(const std::string& label) const { return entries.count(label) != 0; }
};

QuadInvariantTable quad_table(const Vector3& a, const Vector3& b, const Vector3& c,
                              const Vector3& d);

// One internal identity of the quadruple table: |lhs - rhs| should vanish.
struct TableIdentity {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Every cross-entry identity of the table (w3 reciprocals, w4 quotient
// relations, the 3*w2 expressions, and the sixfold w4 sums), with both sides
// evaluated through independent arithmetic routes.
std::vector<TableIdentity> quad_table_identities(const QuadInvariantTable& t);

// w^2 = -4 w2^3 - 27 w3^2 + w1^2 w2^2 - 4 w1^3 w3 + 18 w1 w2 w3, the square
// of the product of ratio differences expressed through the invariants.
double discriminant_sq(const PairInvariants& p);

// (xi1 - xi2)(xi2 - xi3)(xi1 - xi3) directly.
double w_direct(const RatioVector& xi);

}  // namespace bm
