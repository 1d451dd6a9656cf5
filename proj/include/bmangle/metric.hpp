#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bmangle/errors.hpp"

namespace bm {

// Vector of H3 in isotropic coordinates.
struct Vector3 {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Vector3() = default;
  Vector3(double c1, double c2, double c3) : c{c1, c2, c3} {}
  explicit Vector3(const std::array<double, 3>& a) : c(a) {}

  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }

  friend bool operator==(const Vector3&, const Vector3&) = default;
};

inline Vector3 operator*(double s, const Vector3& v) { return {s * v[0], s * v[1], s * v[2]}; }
inline Vector3 operator+(const Vector3& u, const Vector3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

// True when some component vanishes; such vectors have zero cube-norm and
// no ratio invariants.
bool is_isotropic(const Vector3& a, double eps = 0.0);

void require_non_isotropic(const Vector3& a, const char* what);

// Fully symmetric Berwald-Moor trilinear form, normalized by the permutation
// average so that bm3(a,a,a) = a1*a2*a3.
double bm3(const Vector3& a, const Vector3& b, const Vector3& c);

// c1(a2 b3 + a3 b2) + c2(a1 b3 + a3 b1) + c3(a2 b1 + a1 b2); equals 6*bm3
// and vanishes exactly on 3-orthogonal triples.
double ortho3_residual(const Vector3& a, const Vector3& b, const Vector3& c);

// The symmetric "circle product" (a2 b3 + a3 b2, a1 b3 + a3 b1, a2 b1 + a1 b2);
// 3-orthogonality of (a,b,c) is the Euclidean orthogonality of c to circ(a,b).
Vector3 circ(const Vector3& a, const Vector3& b);

// Componentwise reciprocal (1/a1, 1/a2, 1/a3).
Vector3 inv_vec(const Vector3& a);

// Diagonal quadratic form given by a signature of +/-1 entries per axis.
struct QuadraticForm {
  std::vector<int> signature;

  std::size_t dimension() const { return signature.size(); }

  static QuadraticForm euclidean(std::size_t n) {
    return QuadraticForm{std::vector<int>(n, +1)};
  }
  // The pseudo-Euclidean plane (+1, -1).
  static QuadraticForm pseudo_plane() { return QuadraticForm{{+1, -1}}; }
};

double qform_dot(const QuadraticForm& q, const std::vector<double>& u,
                 const std::vector<double>& v);

// 3x3 determinant of the rows u, v, w (the Euclidean volume form).
double vol3(const Vector3& u, const Vector3& v, const Vector3& w);

// Euclidean cross product.
Vector3 cross3(const Vector3& u, const Vector3& v);

}  // namespace bm
