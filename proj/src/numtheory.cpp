#include "orbitcodes/numtheory.hpp"

#include "orbitcodes/error.hpp"

namespace orbitcodes {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "not prime";
    case Errc::reducible_modulus: return "reducible modulus";
    case Errc::non_monic_modulus: return "non-monic modulus";
    case Errc::tower_too_deep: return "tower too deep";
    case Errc::cap_exceeded: return "desk-scale cap exceeded";
    case Errc::field_mismatch: return "field mismatch";
    case Errc::division_by_zero: return "division by zero";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::constant_polynomial: return "constant polynomial";
    case Errc::zero_constant_term: return "zero constant term";
    case Errc::reducible_polynomial: return "reducible polynomial";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::not_square: return "matrix not square";
    case Errc::singular_matrix: return "singular matrix";
    case Errc::reducible_matrix: return "reducible matrix";
    case Errc::degree_mismatch: return "degree mismatch";
    case Errc::not_divisible: return "k does not divide n";
    case Errc::not_primitive: return "not primitive";
    case Errc::primitive_context: return "primitive context";
    case Errc::zero_subspace: return "zero subspace";
    case Errc::singleton_code: return "singleton code";
    case Errc::internal_defect: return "internal defect";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return 0;
    result *= base;
  }
  return result;
}

int exact_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2 || value == 0) return -1;
  int d = 0;
  while (value % base == 0) {
    value /= base;
    ++d;
  }
  return value == 1 ? d : -1;
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace orbitcodes
