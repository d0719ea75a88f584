#pragma once

#include <stdexcept>
#include <string>

namespace orbitcodes {

/// Distinguishes the failure modes of domain preconditions.
enum class Errc {
  not_prime,
  reducible_modulus,
  non_monic_modulus,
  tower_too_deep,
  cap_exceeded,
  field_mismatch,
  division_by_zero,
  index_out_of_range,
  constant_polynomial,
  zero_constant_term,
  reducible_polynomial,
  dimension_mismatch,
  not_square,
  singular_matrix,
  reducible_matrix,
  degree_mismatch,
  not_divisible,
  not_primitive,
  primitive_context,
  zero_subspace,
  singleton_code,
  internal_defect,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated mathematical precondition (reducible modulus, singular matrix, ...).
class DomainError : public Error {
 public:
  DomainError(Errc code, const std::string& what)
      : Error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed textual input (polynomials, matrices, code files, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitcodes
