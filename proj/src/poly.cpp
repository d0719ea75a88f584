#include "orbitcodes/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace orbitcodes {

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Value> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (Value c : coeffs_) {
    if (!field_.contains(c)) {
      throw DomainError(Errc::index_out_of_range,
                        "coefficient " + std::to_string(c) + " not in " + field_.describe());
    }
  }
  strip();
}

Poly Poly::constant(Field field, Value c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(Field field, Value c, std::size_t degree) {
  std::vector<Value> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  Value scale = field_.inv(leading());
  Poly out(field_);
  out.coeffs_ = coeffs_;
  for (Value& c : out.coeffs_) c = field_.mul(c, scale);
  return out;
}

FieldElement Poly::evaluate(const FieldElement& at) const {
  if (!(at.field() == field_)) throw DomainError(Errc::field_mismatch, "evaluation point");
  Value acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at.index()), coeffs_[i]);
  return {field_, acc};
}

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) {
    throw DomainError(Errc::field_mismatch, a.field().describe() + " vs " + b.field().describe());
  }
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  const Field& f = a.field_;
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b);
  const Field& f = a.field_;
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = a.field_;
  std::vector<Value> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(f, std::move(out));
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw DomainError(Errc::division_by_zero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Value> rem = a.coefficients();
  std::vector<Value> quot(rem.size() - b.coefficients().size() + 1, 0);
  const Value lead_inv = f.inv(b.leading());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Value q = f.mul(rem[i], lead_inv);
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(q, b.coeff(j)));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divmod(a, m).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly poly_powmod(const Poly& f, std::uint64_t e, const Poly& m) {
  Poly base = poly_mod(f, m);
  Poly result = poly_mod(Poly::constant(m.field(), 1), m);
  while (e > 0) {
    if (e & 1) result = poly_mod(result * base, m);
    e >>= 1;
    if (e > 0) base = poly_mod(base * base, m);
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw DomainError(Errc::constant_polynomial, "irreducibility of a constant");
  const Poly g = f.monic();
  const auto n = static_cast<unsigned>(g.degree());
  if (n == 1) return true;
  const std::uint64_t q = g.field().cardinality();
  const Poly x = Poly::x(g.field());
  // frobenius[i] = x^{q^i} mod g
  std::vector<Poly> frobenius{x};
  for (unsigned i = 1; i <= n; ++i) frobenius.push_back(poly_powmod(frobenius.back(), q, g));
  if (!(frobenius[n] == x)) return false;
  for (std::uint64_t t : prime_factors(n)) {
    if (poly_gcd(g, frobenius[n / t] - x).degree() != 0) return false;
  }
  return true;
}

std::uint64_t order_of_polynomial(const Poly& f) {
  if (f.degree() < 1) throw DomainError(Errc::constant_polynomial, "order of a constant");
  if (f.coeff(0) == 0) throw DomainError(Errc::zero_constant_term, to_string(f) + " has f(0) = 0");
  if (!is_irreducible(f)) throw DomainError(Errc::reducible_polynomial, to_string(f));
  const Poly g = f.monic();
  const std::uint64_t size =
      checked_pow(g.field().cardinality(), static_cast<std::uint64_t>(g.degree()), kDeskScaleCap);
  if (size == 0) throw DomainError(Errc::cap_exceeded, "order of " + to_string(f));
  const Poly one = Poly::constant(g.field(), 1);
  const Poly x = Poly::x(g.field());
  std::uint64_t e = size - 1;
  for (std::uint64_t r : prime_factors(size - 1)) {
    while (e % r == 0 && poly_powmod(x, e / r, g) == one) e /= r;
  }
  return e;
}

bool is_primitive(const Poly& f) {
  const std::uint64_t e = order_of_polynomial(f);
  return e + 1 == checked_pow(f.field().cardinality(), static_cast<std::uint64_t>(f.degree()));
}

std::vector<Poly> list_irreducibles(const Field& field, unsigned degree) {
  if (degree == 0) throw DomainError(Errc::constant_polynomial, "degree 0");
  const std::uint64_t q = field.cardinality();
  const std::uint64_t count = checked_pow(q, degree, kDeskScaleCap);
  if (count == 0) throw DomainError(Errc::cap_exceeded, "list_irreducibles");
  std::vector<Poly> out;
  std::vector<Value> c(degree + 1, 0);
  c[degree] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t rest = t;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = static_cast<Value>(rest % q);
      rest /= q;
    }
    Poly f(field, c);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad number '" + std::string(s) + "' in polynomial '" + std::string(whole) + "'");
  }
  return v;
}

Value parse_coefficient(std::string_view s, const Field& field, std::string_view whole) {
  std::uint64_t v;
  if (!s.empty() && s.front() == '[') {
    if (s.size() < 3 || s.back() != ']') {
      throw ParseError("bad coefficient '" + std::string(s) + "' in '" + std::string(whole) + "'");
    }
    v = parse_number(s.substr(1, s.size() - 2), whole);
  } else {
    v = parse_number(s, whole);
  }
  if (v >= field.cardinality()) {
    throw ParseError("coefficient " + std::to_string(v) + " not in " + field.describe());
  }
  return static_cast<Value>(v);
}

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Value> coeffs;
  std::string_view rest = s;
  while (true) {
    const std::size_t plus = rest.find('+');
    std::string_view term = rest.substr(0, plus);
    if (term.empty()) throw ParseError("empty term in '" + s + "'");

    Value c = 1;
    std::size_t deg = 0;
    const std::size_t xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      c = parse_coefficient(term, field, s);
    } else {
      if (xpos > 0) {
        if (xpos < 2 || term[xpos - 1] != '*') throw ParseError("expected '*' before x in '" + s + "'");
        c = parse_coefficient(term.substr(0, xpos - 1), field, s);
      }
      std::string_view tail = term.substr(xpos + 1);
      if (tail.empty()) {
        deg = 1;
      } else if (tail.front() == '^') {
        deg = parse_number(tail.substr(1), s);
        if (deg > 4096) throw ParseError("degree too large in '" + s + "'");
      } else {
        throw ParseError("unexpected '" + std::string(tail) + "' in '" + s + "'");
      }
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] = field.add(coeffs[deg], c);

    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return Poly(field, std::move(coeffs));
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const bool bracketed = !f.field().is_prime_field();
  auto coef = [&](Value c) {
    return bracketed ? "[" + std::to_string(c) + "]" : std::to_string(c);
  };
  std::string out;
  for (std::size_t i = f.coefficients().size(); i-- > 0;) {
    const Value c = f.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += coef(c);
      continue;
    }
    if (c != 1) out += coef(c) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace orbitcodes
