#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bmangle/errors.hpp"

namespace bm {

// Element of the commutative-associative algebra H_n in the isotropic basis
// i_k * i_l = i_k delta_kl; all arithmetic is componentwise.
struct HyperNumber {
  std::vector<double> components;

  HyperNumber() : components(3, 0.0) {}
  explicit HyperNumber(std::vector<double> comps) : components(std::move(comps)) {}
  HyperNumber(double a1, double a2, double a3) : components{a1, a2, a3} {}

  std::size_t n() const { return components.size(); }
  double operator[](std::size_t i) const { return components[i]; }

  friend bool operator==(const HyperNumber&, const HyperNumber&) = default;
};

// |a| exp(alpha_1 e_1 + ... + alpha_{n-1} e_{n-1}) over the hyperbolic-rotation
// basis e_k = i_1 - i_{k+1}.
struct ExponentialForm {
  double norm = 0.0;
  std::vector<double> angles;  // n-1 exponential angles
};

HyperNumber hc_mul(const HyperNumber& a, const HyperNumber& b);

// Componentwise quotient; defined only against elements with nonvanishing
// norm, i.e. every b_i != 0.
HyperNumber hc_div(const HyperNumber& a, const HyperNumber& b);

// |a| = |a_1 * ... * a_n|^(1/n); zero exactly on isotropic elements.
double hc_norm(const HyperNumber& a);

// f(a) = f(a_1) i_1 + ... + f(a_n) i_n for a real-analytic scalar f.
HyperNumber hc_apply(const std::function<double(double)>& f, const HyperNumber& a);

// Exponential representation of an all-positive element of H3.
ExponentialForm to_exponential(const HyperNumber& a);

// Rebuild components from (norm, angles); inverse of to_exponential.
HyperNumber from_exponential(const ExponentialForm& e);

// The pair of exponential bingles (phi1, phi2) of a/b, each of the form
// (1/3) ln of a ratio of component products. Unconditionally additive and
// conformally invariant for all-positive arguments.
std::pair<double, double> exp_bingles(const HyperNumber& a, const HyperNumber& b);

// Same angles written through the trilinear form against the isotropic
// basis vectors; agrees with exp_bingles on its whole domain.
std::pair<double, double> exp_bingles_metric_form(const HyperNumber& a, const HyperNumber& b);

}  // namespace bm
