#include "bmangle/metric.hpp"

#include <cmath>
#include <string>

namespace bm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_divisor: return "ZeroDivisor";
    case Errc::non_positive_component: return "NonPositiveComponent";
    case Errc::unsupported: return "Unsupported";
    case Errc::isotropic_vector: return "IsotropicVector";
    case Errc::vanishing_invariant: return "VanishingInvariant";
    case Errc::submanifold_violation: return "SubmanifoldViolation";
    case Errc::domain_violation: return "DomainViolation";
    case Errc::pole_hit: return "PoleHit";
    case Errc::zero_scale: return "ZeroScale";
    case Errc::degenerate_intermediate: return "DegenerateIntermediate";
    case Errc::sector_violation: return "SectorViolation";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::non_real_roots: return "NonRealRoots";
    case Errc::degenerate_invariant: return "DegenerateInvariant";
    case Errc::unknown_equation: return "UnknownEquation";
    case Errc::invalid_input: return "InvalidInput";
  }
  return "Error";
}

bool is_isotropic(const Vector3& a, double eps) {
  return std::abs(a[0]) <= eps || std::abs(a[1]) <= eps || std::abs(a[2]) <= eps;
}

void require_non_isotropic(const Vector3& a, const char* what) {
  if (is_isotropic(a))
    fail(Errc::isotropic_vector, std::string(what) + " has a vanishing component");
}

double bm3(const Vector3& a, const Vector3& b, const Vector3& c) {
  return ortho3_residual(a, b, c) / 6.0;
}

double ortho3_residual(const Vector3& a, const Vector3& b, const Vector3& c) {
  return c[0] * (a[1] * b[2] + a[2] * b[1]) + c[1] * (a[0] * b[2] + a[2] * b[0]) +
         c[2] * (a[1] * b[0] + a[0] * b[1]);
}

Vector3 circ(const Vector3& a, const Vector3& b) {
  return {a[1] * b[2] + a[2] * b[1], a[0] * b[2] + a[2] * b[0], a[1] * b[0] + a[0] * b[1]};
}

Vector3 inv_vec(const Vector3& a) {
  require_non_isotropic(a, "inv_vec argument");
  return {1.0 / a[0], 1.0 / a[1], 1.0 / a[2]};
}

double qform_dot(const QuadraticForm& q, const std::vector<double>& u,
                 const std::vector<double>& v) {
  if (u.size() != q.dimension() || v.size() != q.dimension())
    fail(Errc::dimension_mismatch, "qform_dot: vector size does not match form dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += q.signature[i] * u[i] * v[i];
  return s;
}

double vol3(const Vector3& u, const Vector3& v, const Vector3& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

Vector3 cross3(const Vector3& u, const Vector3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace bm
