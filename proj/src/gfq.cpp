#include "orbitcodes/gfq.hpp"

#include <array>
#include <sstream>

#include "orbitcodes/poly.hpp"

namespace orbitcodes {

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  unsigned level = 0;
  unsigned degree = 1;
  std::uint64_t cardinality = 2;
  std::uint64_t radix = 2;  // cardinality of the level below
  std::shared_ptr<const FieldData> below;
  std::vector<Value> modulus;  // monic, degree + 1 entries; empty at level 0
};

namespace {

// 2^24 over Z_2 is the deepest digit expansion the cap allows.
constexpr std::size_t kMaxDegree = 24;
using Digits = std::array<Value, 2 * kMaxDegree>;

Value add(const FieldData& f, Value a, Value b);
Value neg(const FieldData& f, Value a);
Value mul(const FieldData& f, Value a, Value b);

void decode(const FieldData& f, Value a, Value* out) {
  for (unsigned i = 0; i < f.degree; ++i) {
    out[i] = static_cast<Value>(a % f.radix);
    a = static_cast<Value>(a / f.radix);
  }
}

Value encode(const FieldData& f, const Value* digits) {
  std::uint64_t v = 0;
  for (unsigned i = f.degree; i-- > 0;) v = v * f.radix + digits[i];
  return static_cast<Value>(v);
}

Value add(const FieldData& f, Value a, Value b) {
  if (f.level == 0) return static_cast<Value>((std::uint64_t{a} + b) % f.p);
  Digits da{}, db{};
  decode(f, a, da.data());
  decode(f, b, db.data());
  for (unsigned i = 0; i < f.degree; ++i) da[i] = add(*f.below, da[i], db[i]);
  return encode(f, da.data());
}

Value neg(const FieldData& f, Value a) {
  if (f.level == 0) return a == 0 ? 0 : f.p - a;
  Digits da{};
  decode(f, a, da.data());
  for (unsigned i = 0; i < f.degree; ++i) da[i] = neg(*f.below, da[i]);
  return encode(f, da.data());
}

// Reduces a coefficient sequence of arbitrary length in place by the monic
// modulus; the result occupies the first `degree` entries.
void reduce(const FieldData& f, std::vector<Value>& c) {
  const FieldData& b = *f.below;
  for (std::size_t i = c.size(); i-- > f.degree;) {
    Value lead = c[i];
    if (lead == 0) continue;
    Value factor = neg(b, lead);
    for (unsigned j = 0; j < f.degree; ++j) {
      std::size_t pos = i - f.degree + j;
      c[pos] = add(b, c[pos], mul(b, factor, f.modulus[j]));
    }
    c[i] = 0;
  }
  c.resize(f.degree, 0);
}

Value mul(const FieldData& f, Value a, Value b) {
  if (f.level == 0) return static_cast<Value>((std::uint64_t{a} * b) % f.p);
  if (a == 0 || b == 0) return 0;
  const FieldData& lo = *f.below;
  Digits da{}, db{}, prod{};
  decode(f, a, da.data());
  decode(f, b, db.data());
  const unsigned d = f.degree;
  for (unsigned i = 0; i < d; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = add(lo, prod[i + j], mul(lo, da[i], db[j]));
    }
  }
  for (unsigned i = 2 * d - 1; i-- > d;) {
    Value lead = prod[i];
    if (lead == 0) continue;
    Value factor = neg(lo, lead);
    for (unsigned j = 0; j < d; ++j) {
      prod[i - d + j] = add(lo, prod[i - d + j], mul(lo, factor, f.modulus[j]));
    }
    prod[i] = 0;
  }
  return encode(f, prod.data());
}

Value pow(const FieldData& f, Value a, std::uint64_t e) {
  Value result = 1;
  while (e > 0) {
    if (e & 1) result = mul(f, result, a);
    a = mul(f, a, a);
    e >>= 1;
  }
  return result;
}

bool same(const FieldData* a, const FieldData* b) {
  while (a != b) {
    if (!a || !b) return false;
    if (a->p != b->p || a->level != b->level || a->modulus != b->modulus) return false;
    a = a->below.get();
    b = b->below.get();
  }
  return true;
}

}  // namespace
}  // namespace detail

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError(Errc::not_prime, std::to_string(p) + " is not prime");
  if (p > kDeskScaleCap) throw DomainError(Errc::cap_exceeded, "characteristic " + std::to_string(p));
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->cardinality = p;
  data->radix = p;
  return Field(std::move(data));
}

Field Field::extend(const Field& below, const Poly& modulus) {
  if (!(modulus.field() == below)) {
    throw DomainError(Errc::field_mismatch, "modulus is not over " + below.describe());
  }
  if (below.level() >= 2) {
    throw DomainError(Errc::tower_too_deep, "at most two extension levels above Z_p");
  }
  if (modulus.degree() < 1) {
    throw DomainError(Errc::constant_polynomial, "modulus must have degree >= 1");
  }
  if (!modulus.is_monic()) {
    throw DomainError(Errc::non_monic_modulus, to_string(modulus) + " is not monic");
  }
  const auto degree = static_cast<unsigned>(modulus.degree());
  const std::uint64_t card = checked_pow(below.cardinality(), degree, kDeskScaleCap);
  if (card == 0) {
    throw DomainError(Errc::cap_exceeded, "field of size " + std::to_string(below.cardinality()) +
                                              "^" + std::to_string(degree) + " exceeds 2^24");
  }
  if (!is_irreducible(modulus)) {
    throw DomainError(Errc::reducible_modulus,
                      to_string(modulus) + " is reducible over " + below.describe());
  }
  auto data = std::make_shared<detail::FieldData>();
  data->p = below.characteristic();
  data->level = below.level() + 1;
  data->degree = degree;
  data->cardinality = card;
  data->radix = below.cardinality();
  data->below = below.data_;
  data->modulus = modulus.coefficients();
  return Field(std::move(data));
}

Field Field::make(std::uint32_t p, const std::optional<Poly>& base_modulus,
                  const std::optional<Poly>& top_modulus) {
  Field f = prime(p);
  if (base_modulus) f = extend(f, *base_modulus);
  if (top_modulus) f = extend(f, *top_modulus);
  return f;
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint64_t Field::cardinality() const { return data_->cardinality; }
unsigned Field::level() const { return data_->level; }
unsigned Field::degree() const { return data_->degree; }

Field Field::below() const {
  if (!data_->below) throw DomainError(Errc::index_out_of_range, "prime field has no level below");
  return Field(data_->below);
}

Poly Field::modulus() const { return Poly(below(), data_->modulus); }

Value Field::add(Value a, Value b) const { return detail::add(*data_, a, b); }
Value Field::sub(Value a, Value b) const { return detail::add(*data_, a, detail::neg(*data_, b)); }
Value Field::neg(Value a) const { return detail::neg(*data_, a); }
Value Field::mul(Value a, Value b) const { return detail::mul(*data_, a, b); }

Value Field::inv(Value a) const {
  if (a == 0) throw DomainError(Errc::division_by_zero, "inverse of zero");
  return detail::pow(*data_, a, data_->cardinality - 2);
}

Value Field::pow(Value a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  return detail::pow(*data_, a, static_cast<std::uint64_t>(e));
}

std::vector<Value> Field::digits(Value a) const {
  std::vector<Value> out(data_->degree);
  if (data_->level == 0) {
    out[0] = a;
  } else {
    detail::decode(*data_, a, out.data());
  }
  return out;
}

Value Field::from_digits(std::span<const Value> coefficients) const {
  if (data_->level == 0) {
    if (coefficients.size() > 1) {
      throw DomainError(Errc::dimension_mismatch, "prime field elements have a single digit");
    }
    return coefficients.empty() ? 0 : coefficients[0] % data_->p;
  }
  std::vector<Value> c(coefficients.begin(), coefficients.end());
  if (c.size() > data_->degree) detail::reduce(*data_, c);
  c.resize(data_->degree, 0);
  return detail::encode(*data_, c.data());
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= cardinality()) {
    throw DomainError(Errc::index_out_of_range, std::to_string(index) + " not below " +
                                                    std::to_string(cardinality()));
  }
  return FieldElement(*this, static_cast<Value>(index));
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(cardinality());
  for (std::uint64_t i = 0; i < cardinality(); ++i) out.emplace_back(*this, static_cast<Value>(i));
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  if (level() == 0) {
    os << "Z_" << characteristic();
  } else {
    os << "GF(" << cardinality() << ") = " << below().describe() << "[x]/(" << to_string(modulus())
       << ")";
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  return detail::same(a.data_.get(), b.data_.get());
}

FieldElement::FieldElement(Field field, Value value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) {
    throw DomainError(Errc::index_out_of_range, "element " + std::to_string(value_) + " of " +
                                                    field_.describe());
  }
}

std::vector<FieldElement> FieldElement::coefficients() const {
  Field lo = field_.below();
  std::vector<FieldElement> out;
  for (Value d : field_.digits(value_)) out.emplace_back(lo, d);
  return out;
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw DomainError(Errc::field_mismatch, a.field().describe() + " vs " + b.field().describe());
  }
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
}

std::uint64_t index_of(const FieldElement& a) { return a.index(); }

}  // namespace orbitcodes
