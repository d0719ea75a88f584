#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbitcodes/fieldmap.hpp"

using namespace orbitcodes;

namespace {

const Field kZ2 = Field::prime(2);

Poly z2(const char* t) { return parse_poly(t, kZ2); }
Subspace s2(const char* rows) { return Subspace::from_rows(parse_inline_rows(rows, kZ2)); }

template <typename F>
void require_errc(Errc code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const DomainError& e) {
    CHECK(e.code() == code);
  }
}

std::vector<Value> vec(const char* digits) {
  std::vector<Value> v;
  for (const char* c = digits; *c; ++c) v.push_back(static_cast<Value>(*c - '0'));
  return v;
}

// phi(v P) = phi(v) alpha for every vector.
void check_diagram(const Poly& p) {
  if (p.coeff(0) == 0) return;
  const ExtensionContext ctx(p);
  const Mat c = companion_matrix(p);
  const std::size_t n = ctx.degree();
  const Field& f = ctx.base();
  for (Value x = 0; x < ctx.extension().cardinality(); ++x) {
    const std::vector<Value> v = ctx.extension().digits(x);
    const Mat row(f, 1, n, v);
    const Mat moved = row * c;
    REQUIRE(phi(moved.row(0), ctx) == phi(v, ctx) * ctx.alpha());
    REQUIRE(phi_inv(phi(v, ctx), ctx) == v);
  }
}

}  // namespace

TEST_CASE("phi and dlog in F_64") {
  const ExtensionContext ctx(z2("x^6+x+1"));
  CHECK(ctx.primitive());
  CHECK(ctx.order() == 63);
  CHECK(ctx.gamma() == ctx.alpha());
  CHECK(phi(vec("000110"), ctx) == ctx.alpha().pow(9));
  CHECK(phi(vec("100000"), ctx) == ctx.extension().one());
  CHECK(dlog(ctx.extension().one(), ctx) == 0);
  CHECK(dlog(phi(vec("000110"), ctx), ctx) == 9);
  // alpha^21 and alpha^26, computed by stepping x -> x * alpha from 1.
  FieldElement cur = ctx.extension().one();
  for (int i = 0; i < 21; ++i) cur = cur * ctx.alpha();
  CHECK(phi_inv(cur, ctx) == vec("110111"));
  CHECK(dlog(phi(vec("110111"), ctx), ctx) == 21);
  CHECK(dlog(phi(vec("111000"), ctx), ctx) == 26);
  std::set<std::uint64_t> logs;
  for (Value x = 1; x < 64; ++x) {
    const auto l = ctx.log_of(x);
    CHECK(l < 63);
    CHECK(ctx.exp_of(l) == x);
    logs.insert(l);
  }
  CHECK(logs.size() == 63);
  require_errc(Errc::division_by_zero, [&] { dlog(ctx.extension().zero(), ctx); });
  require_errc(Errc::dimension_mismatch, [&] { phi(vec("10"), ctx); });
  require_errc(Errc::field_mismatch, [&] { dlog(kZ2.one(), ctx); });
}

TEST_CASE("dlog table matches stepping for every degree-6 primitive") {
  for (const Poly& p : list_irreducibles(kZ2, 6)) {
    if (!is_primitive(p)) continue;
    const ExtensionContext ctx(p);
    FieldElement cur = ctx.extension().one();
    for (std::uint64_t i = 0; i < 63; ++i) {
      REQUIRE(dlog(cur, ctx) == i);
      cur = cur * ctx.alpha();
    }
  }
}

TEST_CASE("phi commutes with the companion action") {
  for (unsigned d = 1; d <= 10; ++d)
    for (const Poly& p : list_irreducibles(kZ2, d)) check_diagram(p);
  for (unsigned d = 1; d <= 6; ++d)
    for (const Poly& p : list_irreducibles(Field::prime(3), d)) check_diagram(p);
  const Field f4 = Field::extend(kZ2, z2("x^2+x+1"));
  for (unsigned d = 1; d <= 3; ++d)
    for (const Poly& p : list_irreducibles(f4, d)) check_diagram(p);
}

TEST_CASE("exponent profiles") {
  const ExtensionContext ctx(z2("x^6+x+1"));
  CHECK(exponent_profile(s2("100000"), ctx).exponents == std::vector<std::uint64_t>{0});
  // The 2-dimensional row space below contains 1, alpha + alpha^2 and their sum.
  const auto p = exponent_profile(s2("100000;011000"), ctx);
  CHECK(p.dimension == 2);
  CHECK(p.exponents == std::vector<std::uint64_t>{0, dlog(phi(vec("011000"), ctx), ctx), dlog(phi(vec("111000"), ctx), ctx)});
  CHECK(p.exponents == std::vector<std::uint64_t>{0, 7, 26});
  for (const Subspace& u : enumerate_grassmannian(kZ2, 3, 6)) {
    const auto e = exponent_profile(u, ctx).exponents;
    REQUIRE(e.size() == 7);
    REQUIRE(std::set<std::uint64_t>(e.begin(), e.end()).size() == 7);
  }
  require_errc(Errc::not_primitive, [] {
    const ExtensionContext np(z2("x^4+x^3+x^2+x+1"));
    exponent_profile(s2("1000"), np);
  });
  require_errc(Errc::zero_subspace, [&] { exponent_profile(Subspace::from_rows(Mat(kZ2, 1, 6)), ctx); });
  require_errc(Errc::dimension_mismatch, [&] { exponent_profile(s2("1000"), ctx); });
}

TEST_CASE("subfield spans have arithmetic-progression profiles") {
  for (const Field& f : {kZ2, Field::prime(3)}) {
    for (unsigned n = 2; n <= (f.cardinality() == 2 ? 8u : 4u); ++n) {
      const auto irr = list_irreducibles(f, n);
      const auto prim = std::find_if(irr.begin(), irr.end(), [](const Poly& p) { return is_primitive(p); });
      const ExtensionContext ctx(*prim);
      for (unsigned k = 1; k <= n; ++k) {
        if (n % k) continue;
        const std::uint64_t qk = checked_pow(f.cardinality(), k);
        const std::uint64_t c = ctx.group_order() / (qk - 1);
        Mat rows(f, k, n);
        for (unsigned i = 0; i < k; ++i) {
          const auto v = ctx.extension().digits(ctx.exp_of(i * c));
          for (unsigned j = 0; j < n; ++j) rows.set(i, j, v[j]);
        }
        std::vector<std::uint64_t> want;
        for (std::uint64_t i = 0; i + 1 < qk; ++i) want.push_back(i * c);
        CHECK(exponent_profile(Subspace::from_rows(rows), ctx).exponents == want);
      }
    }
  }
}

TEST_CASE("beta translates of a subfield are subspaces") {
  const ExtensionContext ctx(z2("x^6+x+1"));
  for (unsigned k : {2u, 3u}) {
    const std::uint64_t c = 63 / ((1u << k) - 1);
    for (Value beta = 1; beta < 64; ++beta) {
      std::vector<unsigned> masks;
      for (std::uint64_t i = 0; i + 1 < (1u << k); ++i) {
        const Value x = ctx.extension().mul(beta, ctx.exp_of(i * c));
        unsigned m = 0;
        for (Value d : ctx.extension().digits(x)) m = m << 1 | d;
        masks.push_back(m);
      }
      // q^k - 1 nonzero vectors closed under addition span exactly k dimensions.
      CHECK(oracle::gf2_rank(masks) == static_cast<int>(k));
      std::set<unsigned> set(masks.begin(), masks.end());
      for (unsigned a : masks)
        for (unsigned b : masks)
          if (a != b) CHECK(set.count(a ^ b) == 1);
    }
  }
}

TEST_CASE("orbit partition of a non-primitive context") {
  const ExtensionContext ctx(z2("x^4+x^3+x^2+x+1"));
  CHECK_FALSE(ctx.primitive());
  CHECK(ctx.order() == 5);
  CHECK(ctx.orbit_count() == 3);
  const auto part = orbit_partition(ctx, s2("1000;0011"));
  REQUIRE(part.orbits.size() == 3);
  // Representatives 1, alpha + 1 and alpha^2 + 1.
  CHECK(part.orbits[0].representative == 1);
  CHECK(part.orbits[1].representative == 3);
  CHECK(part.orbits[2].representative == 5);
  std::uint64_t members = 0;
  for (const Orbit& o : part.orbits) {
    CHECK(o.size == 5);
    CHECK(o.members == 1);
    members += o.members;
  }
  CHECK(members == 3);
  // Every nonzero element is representative * alpha^b.
  for (Value x = 1; x < 16; ++x) {
    const Value rep = part.orbits[ctx.orbit_of(x)].representative;
    CHECK((FieldElement(ctx.extension(), rep) * ctx.alpha().pow(static_cast<std::int64_t>(ctx.orbit_exponent_of(x)))).index() == x);
  }
  const auto whole = orbit_partition(ExtensionContext(z2("x^6+x+1")));
  REQUIRE(whole.orbits.size() == 1);
  CHECK(whole.orbits[0].size == 63);
}

TEST_CASE("orbit partitions for every degree-6 irreducible") {
  for (const Poly& p : list_irreducibles(kZ2, 6)) {
    const ExtensionContext ctx(p);
    const auto part = orbit_partition(ctx, s2("100000;010000;001000"));
    CHECK(part.orbits.size() * ctx.order() == 63);
    std::uint64_t members = 0;
    std::set<std::uint64_t> classes;
    for (const Orbit& o : part.orbits) {
      CHECK(o.size == ctx.order());
      members += o.members;
      classes.insert(ctx.log_of(o.representative) % part.orbits.size());
      CHECK(o.exponents.size() == o.members);
    }
    CHECK(members == 7);
    CHECK(classes.size() == part.orbits.size());
    CHECK(ctx.gamma().pow(63) == ctx.extension().one());
  }
}
