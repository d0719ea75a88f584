#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitcodes/gfq.hpp"

namespace orbitcodes {

/// Univariate polynomial over a Field, coefficients lowest degree first with
/// trailing zeros stripped. Equality is structural.
class Poly {
 public:
  explicit Poly(Field field);
  Poly(Field field, std::vector<Value> coefficients);

  static Poly constant(Field field, Value c);
  static Poly monomial(Field field, Value c, std::size_t degree);
  static Poly x(Field field) { return monomial(std::move(field), 1, 1); }

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Value coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Value leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<Value>& coefficients() const { return coeffs_; }
  FieldElement coefficient(std::size_t i) const { return {field_, coeff(i)}; }

  Poly monic() const;
  FieldElement evaluate(const FieldElement& at) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
  }

 private:
  void strip();
  Field field_;
  std::vector<Value> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws division_by_zero for a zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
/// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_powmod(const Poly& f, std::uint64_t e, const Poly& m);

/// Rabin's test: f | x^{Q^n} - x and gcd(f, x^{Q^{n/t}} - x) = 1 for each
/// prime t | n, where Q is the size of the coefficient field.
bool is_irreducible(const Poly& f);

/// Least e with f | x^e - 1, found by stripping prime factors from Q^n - 1.
std::uint64_t order_of_polynomial(const Poly& f);
bool is_primitive(const Poly& f);

/// Monic irreducibles of the given degree, in coefficient-index order.
std::vector<Poly> list_irreducibles(const Field& field, unsigned degree);

/// Parses "x^6+x+1", "2*x^2+1", "[2]*x+[1]". Coefficients are element indices
/// of `field`; terms may appear in any order and repeated terms are summed.
Poly parse_poly(std::string_view text, const Field& field);
/// Descending-degree form that parse_poly reads back.
std::string to_string(const Poly& f);

}  // namespace orbitcodes
