#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "orbitcodes/matrix.hpp"
#include "orbitcodes/subspace.hpp"

using namespace orbitcodes;

namespace {

const Field kZ2 = Field::prime(2);
const Field kZ3 = Field::prime(3);

Poly z2(const char* t) { return parse_poly(t, kZ2); }
Mat m2(const char* rows) { return parse_inline_rows(rows, kZ2); }
Subspace s2(const char* rows) { return Subspace::from_rows(m2(rows)); }

Mat random_invertible(const Field& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Value> c(0, static_cast<Value>(f.cardinality() - 1));
  Mat m(f, n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, c(rng));
  } while (!is_invertible(m));
  return m;
}

unsigned mask(std::span<const Value> row) {
  unsigned x = 0;
  for (Value v : row) x = x << 1 | v;
  return x;
}

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

TEST_CASE("rref examples") {
  const Echelon e = rref(m2("100000;000110;111100"));
  CHECK(format_matrix(e.matrix) == "100000\n011010\n000110\n");
  CHECK(e.rank == 3);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1, 3});
  CHECK(rref(Mat::identity(kZ2, 3)).matrix == Mat::identity(kZ2, 3));
  const Echelon z = rref(Mat(kZ2, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.matrix == Mat(kZ2, 2, 4));
  CHECK(format_matrix(s2("100000;111000").basis()) == "100000\n011000\n");
  CHECK(s2("11;11").dimension() == 1);
}

TEST_CASE("rank agrees with bit-mask elimination") {
  std::mt19937 rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
    Mat m(kZ2, r, c);
    std::vector<unsigned> masks;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
      masks.push_back(mask(m.row(i)));
    }
    REQUIRE(rank(m) == static_cast<std::size_t>(oracle::gf2_rank(masks)));
  }
}

TEST_CASE("row space is invariant under left multiplication") {
  std::mt19937 rng(9);
  for (const Field& f : {kZ2, kZ3}) {
    std::uniform_int_distribution<Value> c(0, static_cast<Value>(f.cardinality() - 1));
    for (int t = 0; t < 20; ++t) {
      Mat u(f, 3, 6);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) u.set(i, j, c(rng));
      const Mat tmat = random_invertible(f, 3, rng);
      CHECK(Subspace::from_rows(tmat * u) == Subspace::from_rows(u));
    }
  }
}

TEST_CASE("inverse and powers") {
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Mat a = random_invertible(kZ3, 4, rng);
    CHECK(a * mat_inv(a) == Mat::identity(kZ3, 4));
    CHECK(mat_pow(a, 5) == a * a * a * a * a);
  }
  require_errc(Errc::singular_matrix, [] { mat_inv(m2("11;11")); });
  require_errc(Errc::not_square, [] { mat_inv(m2("110;011")); });
  require_errc(Errc::dimension_mismatch, [] { m2("11;01") * m2("1;1;1"); });
}

TEST_CASE("grassmannian enumeration") {
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {1, 4}, {3, 6}, {2, 5}}) {
    const auto all = enumerate_grassmannian(kZ2, k, n);
    CHECK(all.size() == grassmannian_size(2, k, n));
    CHECK(std::set<Subspace>(all.begin(), all.end()).size() == all.size());
    for (const Subspace& u : all) CHECK(u.dimension() == k);
  }
  CHECK(grassmannian_size(2, 2, 4) == 35);
  CHECK(grassmannian_size(3, 2, 4) == 130);
  CHECK(enumerate_grassmannian(kZ3, 2, 4).size() == 130);
  // Independent count: distinct row spaces among all 2x4 binary matrices of rank 2.
  std::set<std::vector<long long>> spans;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      if (oracle::gf2_rank({a, b}) != 2) continue;
      oracle::Matrix rows(2, oracle::Vec(4));
      for (int j = 0; j < 4; ++j) {
        rows[0][j] = a >> j & 1;
        rows[1][j] = b >> j & 1;
      }
      spans.insert(oracle::span(rows, 2));
    }
  CHECK(spans.size() == 35);
}

TEST_CASE("subspace metric on G(2,4)") {
  const auto g = enumerate_grassmannian(kZ2, 2, 4);
  std::vector<oracle::PointSet> pts;
  for (const Subspace& u : g) {
    oracle::Matrix rows;
    for (std::size_t i = 0; i < 2; ++i) rows.emplace_back(u.basis().row(i).begin(), u.basis().row(i).end());
    pts.push_back(oracle::span(rows, 2));
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const unsigned d = subspace_distance(g[i], g[j]);
      REQUIRE(d == subspace_distance(g[j], g[i]));
      REQUIRE((d == 0) == (i == j));
      REQUIRE(d == 2 * (2 - intersection_dim(g[i], g[j])));
      REQUIRE(intersection_dim(g[i], g[j]) == static_cast<std::size_t>(oracle::intersection_dim(pts[i], pts[j], 2)));
      for (std::size_t l = 0; l < g.size(); ++l)
        REQUIRE(d <= subspace_distance(g[i], g[l]) + subspace_distance(g[l], g[j]));
    }
  CHECK(subspace_distance(s2("1000;0100"), s2("1000;0010")) == 2);
  CHECK(intersection_dim(s2("1000;0100"), s2("1000;0010")) == 1);
  require_errc(Errc::dimension_mismatch, [] { subspace_distance(s2("100"), s2("1000")); });
}

TEST_CASE("distance is invariant under the group action") {
  std::mt19937 rng(4);
  const auto g = enumerate_grassmannian(kZ2, 2, 5);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int t = 0; t < 50; ++t) {
    const Mat a = random_invertible(kZ2, 5, rng);
    const Subspace& u = g[pick(rng)];
    const Subspace& v = g[pick(rng)];
    CHECK(subspace_distance(subspace_apply(u, a), subspace_apply(v, a)) == subspace_distance(u, v));
    CHECK(subspace_apply(subspace_apply(u, a), mat_inv(a)) == u);
  }
  CHECK(subspace_apply(g[3], Mat::identity(kZ2, 5)) == g[3]);
  require_errc(Errc::singular_matrix, [&] { subspace_apply(g[0], Mat(kZ2, 5, 5)); });
}

TEST_CASE("companion matrix and characteristic polynomial") {
  CHECK(format_matrix(companion_matrix(z2("x^2+x+1"))) == "01\n11\n");
  CHECK(char_poly(companion_matrix(z2("x^4+x+1"))) == z2("x^4+x+1"));
  CHECK(char_poly(Mat::identity(kZ2, 2)) == z2("x^2+1"));
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<Value> c(0, 2);
    Mat g(kZ3, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g.set(i, j, c(rng));
    const Poly chi = char_poly(g);
    CHECK(chi.degree() == 4);
    CHECK(chi.is_monic());
    const Mat s = random_invertible(kZ3, 4, rng);
    CHECK(char_poly(s * g * mat_inv(s)) == chi);
    // Cayley-Hamilton.
    Mat acc(kZ3, 4, 4);
    Mat power = Mat::identity(kZ3, 4);
    for (int i = 0; i <= chi.degree(); ++i) {
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t col = 0; col < 4; ++col)
          acc.set(r, col, kZ3.add(acc.at(r, col), kZ3.mul(chi.coeff(static_cast<std::size_t>(i)), power.at(r, col))));
      power = power * g;
    }
    CHECK(acc == Mat(kZ3, 4, 4));
  }
  require_errc(Errc::not_square, [] { char_poly(m2("110;011")); });
}

TEST_CASE("companion matrix matches the oracle layout") {
  for (const Poly& f : list_irreducibles(kZ3, 3)) {
    const oracle::Matrix want = oracle::companion({f.coefficients().begin(), f.coefficients().end()}, 3);
    const Mat c = companion_matrix(f);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(static_cast<int>(c.at(i, j)) == want[i][j]);
  }
}

TEST_CASE("matrix order") {
  CHECK(matrix_order(companion_matrix(z2("x^4+x^3+x^2+x+1"))) == 5);
  CHECK(matrix_order(companion_matrix(z2("x^6+x+1"))) == 63);
  CHECK(matrix_order(Mat::identity(kZ2, 3)) == 1);
  for (unsigned d = 1; d <= 6; ++d)
    for (const Poly& f : list_irreducibles(kZ2, d)) {
      if (f.coeff(0) == 0) continue;
      CHECK(matrix_order(companion_matrix(f)) == order_of_polynomial(f));
    }
  for (unsigned d = 1; d <= 3; ++d)
    for (const Poly& f : list_irreducibles(kZ3, d)) {
      if (f.coeff(0) == 0) continue;
      CHECK(matrix_order(companion_matrix(f)) == order_of_polynomial(f));
    }
  for (const Poly& f : list_irreducibles(kZ2, 4)) {
    const Mat g = companion_matrix(f);
    const std::uint64_t m = matrix_order(g);
    for (std::uint64_t l = 1; l < m; ++l) CHECK(matrix_order(mat_pow(g, l)) == m / std::gcd(l, m));
  }
  require_errc(Errc::singular_matrix, [] { matrix_order(m2("11;11")); });
  require_errc(Errc::cap_exceeded, [] { matrix_order(companion_matrix(z2("x^6+x+1")), 10); });
}

TEST_CASE("irreducible matrices and similarity") {
  CHECK(is_irreducible_matrix(companion_matrix(z2("x^2+x+1"))));
  CHECK(is_irreducible_matrix(companion_matrix(z2("x^4+x^3+1"))));
  CHECK_FALSE(is_irreducible_matrix(Mat::identity(kZ2, 2)));
  const Mat c = companion_matrix(z2("x^4+x+1"));
  CHECK(to_companion_similarity(c) == Mat::identity(kZ2, 4));
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    const Mat s0 = random_invertible(kZ2, 4, rng);
    const Mat g = s0 * c * mat_inv(s0);
    const Mat s = to_companion_similarity(g);
    CHECK(s * g * mat_inv(s) == c);
  }
  require_errc(Errc::reducible_matrix, [] { to_companion_similarity(Mat::identity(kZ2, 2)); });
  CHECK(groups_conjugate(z2("x^4+x+1"), z2("x^4+x^3+1")));
  CHECK_FALSE(groups_conjugate(z2("x^4+x+1"), z2("x^4+x^3+x^2+x+1")));
  CHECK(groups_conjugate(z2("x^4+x+1"), z2("x^4+x+1")));
  require_errc(Errc::degree_mismatch, [] { groups_conjugate(z2("x^4+x+1"), z2("x^2+x+1")); });
  require_errc(Errc::reducible_polynomial, [] { groups_conjugate(z2("x^4+x+1"), z2("x^4+1")); });
}

TEST_CASE("matrix text format") {
  const Mat m = parse_matrix("101\n011\n", kZ2);
  CHECK(format_matrix(m) == "101\n011\n");
  CHECK(parse_inline_rows("12,20", kZ3) == parse_matrix("12\n20\n", kZ3));
  CHECK(parse_matrices("10\n01\n\n11\n00\n", kZ2).size() == 2);
  CHECK_THROWS_AS(parse_matrix("10\n1\n", kZ2), ParseError);
  CHECK_THROWS_AS(parse_matrix("12\n", kZ2), ParseError);
}
