#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitcodes/error.hpp"
#include "orbitcodes/numtheory.hpp"

namespace orbitcodes {

class Poly;
class FieldElement;

namespace detail {
struct FieldData;
}

/// Raw element value: the mixed-radix index of the coefficient sequence over
/// the level below, lowest-degree coefficient least significant.
using Value = std::uint32_t;

/**
 * A finite field in a tower Z_p ⊂ F_q ⊂ F_{q^n} of depth at most two.
 *
 * Level 0 is the prime field. Each higher level is a quotient ring of the
 * level below by a monic irreducible modulus, checked at construction.
 * Elements are stored as their enumeration index, which makes 0 the zero
 * element and 1 the unit at every level. Handles are cheap to copy and the
 * underlying data is immutable, so a Field can be shared across threads.
 *
 * Two fields compare equal when they have the same characteristic and the
 * same chain of moduli, regardless of how they were constructed.
 */
class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field extend(const Field& below, const Poly& modulus);
  static Field make(std::uint32_t p, const std::optional<Poly>& base_modulus,
                    const std::optional<Poly>& top_modulus);

  std::uint32_t characteristic() const;
  std::uint64_t cardinality() const;
  unsigned level() const;
  /// Degree of the modulus over the level below (1 for a prime field).
  unsigned degree() const;
  bool is_prime_field() const { return level() == 0; }
  Field below() const;
  /// The defining modulus over the level below. Throws for a prime field.
  Poly modulus() const;

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;
  Value pow(Value a, std::int64_t e) const;

  /// Coefficients over the level below, lowest degree first, length degree().
  std::vector<Value> digits(Value a) const;
  /// Encodes a coefficient sequence over the level below, reducing it by the
  /// modulus if it is longer than degree().
  Value from_digits(std::span<const Value> coefficients) const;

  FieldElement element(std::uint64_t index) const;
  FieldElement zero() const;
  FieldElement one() const;
  std::vector<FieldElement> elements() const;

  bool contains(Value a) const { return a < cardinality(); }
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// A field element bound to its field.
class FieldElement {
 public:
  FieldElement(Field field, Value value);

  const Field& field() const { return field_; }
  Value index() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// Coefficients over the level below, lowest degree first.
  std::vector<FieldElement> coefficients() const;

  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  Value value_;
};

inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement pow(const FieldElement& a, std::int64_t e) { return a.pow(e); }

std::uint64_t index_of(const FieldElement& a);

}  // namespace orbitcodes
