#pragma once

#include <stdexcept>
#include <string>

namespace bm {

// Machine-readable error codes; code_name() strings are part of the CLI
// contract (emitted in error objects and stable across versions).
enum class Errc {
  dimension_mismatch,
  zero_divisor,
  non_positive_component,
  unsupported,
  isotropic_vector,
  vanishing_invariant,
  submanifold_violation,
  domain_violation,
  pole_hit,
  zero_scale,
  degenerate_intermediate,
  sector_violation,
  zero_vector,
  non_real_roots,
  degenerate_invariant,
  unknown_equation,
  invalid_input,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace bm
