#include "orbitcodes/fieldmap.hpp"

#include <algorithm>
#include <limits>

namespace orbitcodes {

struct ExtensionContext::Tables {
  explicit Tables(const Poly& m) : base(m.field()), ext(m.field()), modulus(m) {}

  Field base;
  Field ext;
  Poly modulus;
  Value alpha = 0;
  Value gamma = 0;
  std::uint64_t order = 0;
  std::uint64_t group_order = 0;
  std::vector<std::uint32_t> log;  // indexed by element; log[0] unused
  std::vector<Value> exp;          // indexed by exponent
  std::vector<std::uint32_t> orbit;
  std::vector<std::uint32_t> orbit_exp;
};

namespace {

std::uint64_t element_order(const Field& f, Value a, std::uint64_t group_order,
                            const std::vector<std::uint64_t>& primes) {
  std::uint64_t e = group_order;
  for (std::uint64_t r : primes) {
    while (e % r == 0 && f.pow(a, static_cast<std::int64_t>(e / r)) == 1) e /= r;
  }
  return e;
}

}  // namespace

ExtensionContext::ExtensionContext(const Poly& modulus) {
  auto t = std::make_shared<Tables>(modulus);
  if (!modulus.is_monic()) throw DomainError(Errc::non_monic_modulus, to_string(modulus));
  if (modulus.coeff(0) == 0) throw DomainError(Errc::zero_constant_term, to_string(modulus));
  // Field::extend rejects reducible moduli and sizes above the cap.
  t->ext = Field::extend(t->base, modulus);
  const Field& f = t->ext;
  const std::uint64_t n = t->group_order = f.cardinality() - 1;
  const std::vector<Value> x_digits{0, 1};
  t->alpha = f.from_digits(x_digits);

  const auto primes = prime_factors(n);
  t->order = element_order(f, t->alpha, n, primes);
  if (t->order == n) {
    t->gamma = t->alpha;
  } else {
    for (Value v = 2; v <= n; ++v) {
      if (element_order(f, v, n, primes) == n) {
        t->gamma = v;
        break;
      }
    }
  }
  if (t->gamma == 0 && n > 1) throw DomainError(Errc::internal_defect, "no primitive element found");
  if (n == 1) t->gamma = 1;

  t->log.assign(n + 1, std::numeric_limits<std::uint32_t>::max());
  t->exp.resize(n);
  Value v = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    t->exp[i] = v;
    t->log[v] = static_cast<std::uint32_t>(i);
    v = f.mul(v, t->gamma);
  }

  t->orbit.assign(n + 1, 0);
  t->orbit_exp.assign(n + 1, 0);
  const std::uint64_t orbits = n / t->order;
  for (std::uint64_t i = 0; i < orbits; ++i) {
    Value y = t->exp[i];
    for (std::uint64_t b = 0; b < t->order; ++b) {
      t->orbit[y] = static_cast<std::uint32_t>(i);
      t->orbit_exp[y] = static_cast<std::uint32_t>(b);
      y = f.mul(y, t->alpha);
    }
  }
  t_ = std::move(t);
}

const Field& ExtensionContext::base() const { return t_->base; }
const Field& ExtensionContext::extension() const { return t_->ext; }
const Poly& ExtensionContext::modulus() const { return t_->modulus; }
std::size_t ExtensionContext::degree() const { return t_->ext.degree(); }
FieldElement ExtensionContext::alpha() const { return {t_->ext, t_->alpha}; }
FieldElement ExtensionContext::gamma() const { return {t_->ext, t_->gamma}; }
bool ExtensionContext::primitive() const { return t_->order == t_->group_order; }
std::uint64_t ExtensionContext::order() const { return t_->order; }
std::uint64_t ExtensionContext::group_order() const { return t_->group_order; }

std::uint64_t ExtensionContext::log_of(Value x) const {
  if (x == 0) throw DomainError(Errc::division_by_zero, "discrete log of zero");
  if (x > t_->group_order) throw DomainError(Errc::index_out_of_range, "element outside field");
  return t_->log[x];
}

Value ExtensionContext::exp_of(std::uint64_t i) const { return t_->exp[i % t_->group_order]; }

std::uint64_t ExtensionContext::orbit_of(Value x) const {
  log_of(x);
  return t_->orbit[x];
}

std::uint64_t ExtensionContext::orbit_exponent_of(Value x) const {
  log_of(x);
  return t_->orbit_exp[x];
}

FieldElement phi(std::span<const Value> v, const ExtensionContext& ctx) {
  if (v.size() != ctx.degree()) throw DomainError(Errc::dimension_mismatch, "phi: vector length");
  for (Value c : v) {
    if (!ctx.base().contains(c)) throw DomainError(Errc::field_mismatch, "phi: entry not in base field");
  }
  return {ctx.extension(), ctx.extension().from_digits(v)};
}

std::vector<Value> phi_inv(const FieldElement& x, const ExtensionContext& ctx) {
  if (!(x.field() == ctx.extension())) throw DomainError(Errc::field_mismatch, "phi_inv");
  return ctx.extension().digits(x.index());
}

std::uint64_t dlog(const FieldElement& x, const ExtensionContext& ctx) {
  if (!(x.field() == ctx.extension())) throw DomainError(Errc::field_mismatch, "dlog");
  return ctx.log_of(x.index());
}

namespace {
void require_subspace(const Subspace& u, const ExtensionContext& ctx) {
  if (!(u.field() == ctx.base())) throw DomainError(Errc::field_mismatch, "subspace field");
  if (u.ambient() != ctx.degree()) throw DomainError(Errc::dimension_mismatch, "subspace ambient");
  if (u.dimension() == 0) throw DomainError(Errc::zero_subspace, "zero subspace");
}
}  // namespace

ExponentProfile exponent_profile(const Subspace& u, const ExtensionContext& ctx) {
  if (!ctx.primitive()) throw DomainError(Errc::not_primitive, "exponent_profile needs a primitive context");
  require_subspace(u, ctx);
  ExponentProfile out{u.dimension(), {}};
  for (const auto& v : u.nonzero_vectors()) out.exponents.push_back(ctx.log_of(phi(v, ctx).index()));
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

OrbitPartition orbit_partition(const ExtensionContext& ctx, const std::optional<Subspace>& u) {
  OrbitPartition out;
  for (std::uint64_t i = 0; i < ctx.orbit_count(); ++i) {
    out.orbits.push_back({ctx.exp_of(i), ctx.order(), 0, {}});
  }
  if (u) {
    require_subspace(*u, ctx);
    for (const auto& v : u->nonzero_vectors()) {
      const Value x = phi(v, ctx).index();
      Orbit& o = out.orbits[ctx.orbit_of(x)];
      ++o.members;
      o.exponents.push_back(ctx.orbit_exponent_of(x));
    }
    for (Orbit& o : out.orbits) std::sort(o.exponents.begin(), o.exponents.end());
  }
  return out;
}

}  // namespace orbitcodes
