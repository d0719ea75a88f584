#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

/**
 * F_{q^n} = F_q[x]/(p(x)) together with the root α = x mod p, its order e and
 * dense discrete-log tables with respect to a fixed primitive element γ.
 *
 * γ is α itself when p is primitive; otherwise it is the first element in
 * enumeration order whose multiplicative order is q^n - 1. The multiplicative
 * group splits into l = (q^n - 1)/e orbits under multiplication by α. Orbit i
 * has representative γ^i, the element of least discrete log in it, and every
 * element of the orbit is γ^i α^b for a unique b in [0, e).
 *
 * All tables are built in the constructor; the context is immutable and can
 * be shared across threads.
 */
class ExtensionContext {
 public:
  explicit ExtensionContext(const Poly& modulus);

  const Field& base() const;
  const Field& extension() const;
  const Poly& modulus() const;
  std::size_t degree() const;

  FieldElement alpha() const;
  FieldElement gamma() const;
  bool primitive() const;
  /// Order of α, which is the order of the modulus.
  std::uint64_t order() const;
  /// q^n - 1.
  std::uint64_t group_order() const;
  std::uint64_t orbit_count() const { return group_order() / order(); }

  /// Discrete log base γ of a nonzero element index.
  std::uint64_t log_of(Value x) const;
  /// γ^i as an element index.
  Value exp_of(std::uint64_t i) const;
  /// Orbit index in [0, orbit_count()) of a nonzero element.
  std::uint64_t orbit_of(Value x) const;
  /// b with x = γ^{orbit_of(x)} α^b.
  std::uint64_t orbit_exponent_of(Value x) const;

 private:
  struct Tables;
  std::shared_ptr<const Tables> t_;
};

/// (v_1, ..., v_n) -> sum v_i α^{i-1}.
FieldElement phi(std::span<const Value> v, const ExtensionContext& ctx);
std::vector<Value> phi_inv(const FieldElement& x, const ExtensionContext& ctx);

/// Discrete log base γ; throws division_by_zero for zero.
std::uint64_t dlog(const FieldElement& x, const ExtensionContext& ctx);

struct ExponentProfile {
  std::size_t dimension = 0;
  /// dlogs of the q^k - 1 nonzero vectors, ascending.
  std::vector<std::uint64_t> exponents;

  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

/// Requires a primitive context so that exponents are powers of α.
ExponentProfile exponent_profile(const Subspace& u, const ExtensionContext& ctx);

struct Orbit {
  Value representative = 1;
  std::uint64_t size = 0;
  /// Number of nonzero vectors of the given subspace in this orbit.
  std::uint64_t members = 0;
  /// Within-orbit exponents b of those vectors, ascending.
  std::vector<std::uint64_t> exponents;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

struct OrbitPartition {
  std::vector<Orbit> orbits;
};

OrbitPartition orbit_partition(const ExtensionContext& ctx,
                               const std::optional<Subspace>& u = std::nullopt);

}  // namespace orbitcodes
