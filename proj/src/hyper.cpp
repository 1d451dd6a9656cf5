#include "bmangle/hyper.hpp"

#include <cmath>
#include <string>

#include "bmangle/metric.hpp"

namespace bm {

namespace {

void require_same_n(const HyperNumber& a, const HyperNumber& b, const char* op) {
  if (a.n() != b.n())
    fail(Errc::dimension_mismatch, std::string(op) + ": operands have different n");
}

void require_h3(const HyperNumber& a, const char* op) {
  if (a.n() != 3)
    fail(Errc::unsupported, std::string(op) + " is defined for n = 3 only");
}

void require_positive(const HyperNumber& a, const char* op) {
  for (double x : a.components)
    if (!(x > 0.0))
      fail(Errc::non_positive_component, std::string(op) + " requires all components > 0");
}

Vector3 as_vec3(const HyperNumber& a) { return {a[0], a[1], a[2]}; }

}  // namespace

HyperNumber hc_mul(const HyperNumber& a, const HyperNumber& b) {
  require_same_n(a, b, "hc_mul");
  std::vector<double> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) out[i] = a[i] * b[i];
  return HyperNumber(std::move(out));
}

HyperNumber hc_div(const HyperNumber& a, const HyperNumber& b) {
  require_same_n(a, b, "hc_div");
  std::vector<double> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (b[i] == 0.0)
      fail(Errc::zero_divisor, "hc_div: divisor component " + std::to_string(i + 1) + " is zero");
    out[i] = a[i] / b[i];
  }
  return HyperNumber(std::move(out));
}

double hc_norm(const HyperNumber& a) {
  // Geometric mean of |a_i| through logs to stay clear of overflow.
  double s = 0.0;
  for (double x : a.components) {
    if (x == 0.0) return 0.0;
    s += std::log(std::abs(x));
  }
  return std::exp(s / static_cast<double>(a.n()));
}

HyperNumber hc_apply(const std::function<double(double)>& f, const HyperNumber& a) {
  std::vector<double> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    out[i] = f(a[i]);
    if (!std::isfinite(out[i]))
      fail(Errc::domain_violation,
           "hc_apply: component " + std::to_string(i + 1) + " outside the domain of f");
  }
  return HyperNumber(std::move(out));
}

ExponentialForm to_exponential(const HyperNumber& a) {
  require_h3(a, "to_exponential");
  require_positive(a, "to_exponential");
  ExponentialForm e;
  e.norm = std::cbrt(a[0] * a[1] * a[2]);
  e.angles = {std::log(a[0] * a[2] / (a[1] * a[1])) / 3.0,
              std::log(a[0] * a[1] / (a[2] * a[2])) / 3.0};
  return e;
}

HyperNumber from_exponential(const ExponentialForm& e) {
  // exp(sum alpha_k e_k) has isotropic components
  // (exp(alpha_1 + ... + alpha_{n-1}), exp(-alpha_1), ..., exp(-alpha_{n-1})).
  std::size_t n = e.angles.size() + 1;
  if (n < 2) fail(Errc::unsupported, "from_exponential: need at least one angle");
  std::vector<double> out(n);
  double total = 0.0;
  for (double alpha : e.angles) total += alpha;
  out[0] = e.norm * std::exp(total);
  for (std::size_t k = 0; k + 1 < n; ++k) out[k + 1] = e.norm * std::exp(-e.angles[k]);
  return HyperNumber(std::move(out));
}

std::pair<double, double> exp_bingles(const HyperNumber& a, const HyperNumber& b) {
  require_h3(a, "exp_bingles");
  require_h3(b, "exp_bingles");
  require_positive(a, "exp_bingles");
  require_positive(b, "exp_bingles");
  double phi1 = std::log(a[0] * a[2] * b[1] * b[1] / (b[0] * b[2] * a[1] * a[1])) / 3.0;
  double phi2 = std::log(a[0] * a[1] * b[2] * b[2] / (b[0] * b[1] * a[2] * a[2])) / 3.0;
  return {phi1, phi2};
}

std::pair<double, double> exp_bingles_metric_form(const HyperNumber& a, const HyperNumber& b) {
  require_h3(a, "exp_bingles_metric_form");
  require_h3(b, "exp_bingles_metric_form");
  const Vector3 i1{1, 0, 0}, i2{0, 1, 0}, i3{0, 0, 1};
  const Vector3 va = as_vec3(a), vb = as_vec3(b);

  auto angle = [&](const Vector3& ik, const Vector3& ip, const Vector3& iq) {
    double num = bm3(va, va, ik) * bm3(ip, iq, vb) * bm3(ip, iq, vb);
    double den = bm3(vb, vb, ik) * bm3(ip, iq, va) * bm3(ip, iq, va);
    if (!(num / den > 0.0))
      fail(Errc::non_positive_component, "exp_bingles_metric_form: log argument not positive");
    return std::log(num / den) / 3.0;
  };
  return {angle(i2, i1, i3), angle(i3, i1, i2)};
}

}  // namespace bm
