#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbitcodes/poly.hpp"

using namespace orbitcodes;

namespace {

const Field kZ2 = Field::prime(2);
const Field kZ3 = Field::prime(3);

Poly z2(const char* t) { return parse_poly(t, kZ2); }

oracle::Vec to_vec(const Poly& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

Poly from_vec(const oracle::Vec& v, const Field& f) { return Poly(f, {v.begin(), v.end()}); }

template <typename F>
void require_errc(Errc code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const DomainError& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(to_string(z2("x^6+x+1")) == "x^6+x+1");
  CHECK(to_string(z2("1+x+x^6")) == "x^6+x+1");
  CHECK(to_string(z2("x+x")) == "0");
  CHECK(to_string(parse_poly("2*x^2+1", kZ3)) == "2*x^2+1");
  CHECK(z2("x^3+x").degree() == 3);
  CHECK(Poly(kZ2).degree() == -1);
  const Field f4 = Field::extend(kZ2, z2("x^2+x+1"));
  const Poly g = parse_poly("[2]*x+[1]", f4);
  CHECK(to_string(g) == "[2]*x+[1]");
  CHECK(parse_poly(to_string(g), f4) == g);
  CHECK_THROWS_AS(z2("x^"), ParseError);
  CHECK_THROWS_AS(z2("y+1"), ParseError);
  CHECK_THROWS_AS(z2("3*x"), ParseError);
}

TEST_CASE("parse/print round-trip over random polynomials") {
  const Field f4 = Field::extend(kZ2, z2("x^2+x+1"));
  std::mt19937 rng(11);
  for (const Field& f : {kZ2, kZ3, f4}) {
    std::uniform_int_distribution<Value> c(0, static_cast<Value>(f.cardinality() - 1));
    for (int i = 0; i < 200; ++i) {
      std::vector<Value> v(rng() % 8);
      for (auto& x : v) x = c(rng);
      const Poly p(f, v);
      CHECK(parse_poly(to_string(p), f) == p);
    }
  }
}

TEST_CASE("ring arithmetic against the oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(0, 2);
  for (int i = 0; i < 300; ++i) {
    oracle::Vec a(rng() % 7), b(1 + rng() % 5);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    b.back() = 1 + static_cast<int>(rng() % 2);
    const Poly pa = from_vec(a, kZ3), pb = from_vec(b, kZ3);
    CHECK(to_vec(pa * pb) == oracle::mul(oracle::trim(a), b, 3));
    const auto [quo, r] = poly_divmod(pa, pb);
    CHECK(to_vec(r) == oracle::rem(a, b, 3));
    CHECK(quo * pb + r == pa);
    CHECK(poly_add(pa, pb) - pb == pa);
  }
  require_errc(Errc::division_by_zero, [] { poly_mod(z2("x"), Poly(kZ2)); });
}

TEST_CASE("gcd and powmod") {
  CHECK(poly_gcd(z2("x^2+1"), z2("x^3+1")) == z2("x+1"));
  CHECK(poly_gcd(z2("x^4+x+1"), z2("x^2+x+1")) == z2("1"));
  CHECK(poly_powmod(z2("x"), 9, z2("x^6+x+1")) == z2("x^4+x^3"));
  CHECK(poly_powmod(z2("x"), 63, z2("x^6+x+1")) == z2("1"));
  CHECK(poly_powmod(z2("x+1"), 0, z2("x^2+x+1")) == z2("1"));
  CHECK(z2("x^2+x+1").evaluate(kZ2.one()) == kZ2.one());
}

TEST_CASE("irreducibility agrees with trial division") {
  for (int p : {2, 3}) {
    const Field f = Field::prime(static_cast<std::uint32_t>(p));
    for (int d = 1; d <= (p == 2 ? 8 : 5); ++d)
      for (const auto& v : oracle::monics(p, d)) REQUIRE(is_irreducible(from_vec(v, f)) == oracle::irreducible(v, p));
  }
  CHECK(is_irreducible(z2("x^2+x+1")));
  CHECK(is_irreducible(z2("x^4+x^3+1")));
  CHECK_FALSE(is_irreducible(z2("x^4+x^2+1")));
}

TEST_CASE("irreducible counts follow the necklace formula") {
  const Field f4 = Field::extend(kZ2, z2("x^2+x+1"));
  for (unsigned n = 1; n <= 10; ++n)
    CHECK(static_cast<long long>(list_irreducibles(kZ2, n).size()) == oracle::irreducible_count(2, static_cast<int>(n)));
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(list_irreducibles(kZ3, n).size()) == oracle::irreducible_count(3, static_cast<int>(n)));
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(static_cast<long long>(list_irreducibles(f4, n).size()) == oracle::irreducible_count(4, static_cast<int>(n)));
}

TEST_CASE("degree 2 and 4 irreducibles over Z_2") {
  const auto two = list_irreducibles(kZ2, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == z2("x^2+x+1"));
  std::vector<std::string> four;
  for (const Poly& f : list_irreducibles(kZ2, 4)) four.push_back(to_string(f));
  std::sort(four.begin(), four.end());
  CHECK(four == std::vector<std::string>{"x^4+x+1", "x^4+x^3+1", "x^4+x^3+x^2+x+1"});
}

TEST_CASE("orders") {
  CHECK(order_of_polynomial(z2("x^4+x^3+x^2+x+1")) == 5);
  CHECK(order_of_polynomial(z2("x^4+x+1")) == 15);
  CHECK(order_of_polynomial(z2("x^4+x^3+1")) == 15);
  CHECK(order_of_polynomial(z2("x^6+x+1")) == 63);
  CHECK(is_primitive(z2("x^6+x+1")));
  CHECK_FALSE(is_primitive(z2("x^4+x^3+x^2+x+1")));
  CHECK(is_primitive(z2("x^4+x^3+1")));
  for (int p : {2, 3})
    for (int d = 1; d <= (p == 2 ? 8 : 4); ++d) {
      const Field f = Field::prime(static_cast<std::uint32_t>(p));
      for (const Poly& g : list_irreducibles(f, static_cast<unsigned>(d))) {
        if (g.coeff(0) == 0) continue;
        REQUIRE(order_of_polynomial(g) == oracle::order(to_vec(g), p));
      }
    }
  require_errc(Errc::zero_constant_term, [] { order_of_polynomial(z2("x^3+x")); });
  require_errc(Errc::reducible_polynomial, [] { order_of_polynomial(z2("x^2+1")); });
}
