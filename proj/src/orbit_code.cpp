#include "orbitcodes/orbit_code.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace orbitcodes {

OrbitCode::OrbitCode(Mat generator, Subspace start, std::vector<Subspace> codewords,
                     std::uint64_t generator_order)
    : generator_(std::move(generator)),
      start_(std::move(start)),
      codewords_(std::move(codewords)),
      generator_order_(generator_order) {}

OrbitCode generate_orbit(const Subspace& u, const Mat& generator) {
  if (u.dimension() == 0) throw DomainError(Errc::zero_subspace, "orbit of the zero subspace");
  if (!generator.is_square() || generator.rows() != u.ambient()) {
    throw DomainError(Errc::dimension_mismatch, "generator must be n x n");
  }
  if (!(generator.field() == u.field())) throw DomainError(Errc::field_mismatch, "generate_orbit");
  const std::uint64_t order = matrix_order(generator);  // rejects singular generators

  std::vector<Subspace> words{u};
  Subspace cur = detail::apply_unchecked(u, generator);
  while (!(cur == u)) {
    if (words.size() >= order) throw DomainError(Errc::internal_defect, "orbit longer than ord(P)");
    words.push_back(cur);
    cur = detail::apply_unchecked(cur, generator);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return OrbitCode(generator, u, std::move(words), order);
}

unsigned min_distance_brute(const OrbitCode& code) { return min_distance_brute(code.codewords()); }

unsigned min_distance_orbit(const OrbitCode& code) {
  if (code.size() < 2) throw DomainError(Errc::singleton_code, "distance of a single codeword");
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const Subspace& c : code.codewords()) {
    if (c == code.start()) continue;
    best = std::min(best, subspace_distance(code.start(), c));
  }
  return best;
}

Subspace build_spread_start(std::size_t k, const ExtensionContext& ctx) {
  if (!ctx.primitive()) {
    throw DomainError(Errc::not_primitive, to_string(ctx.modulus()) + " is not primitive");
  }
  const std::size_t n = ctx.degree();
  if (k == 0 || n % k != 0) {
    throw DomainError(Errc::not_divisible, std::to_string(k) + " does not divide " + std::to_string(n));
  }
  const std::uint64_t c = ctx.group_order() / (checked_pow(ctx.base().cardinality(), k) - 1);
  Mat rows(ctx.base(), k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = ctx.extension().digits(ctx.exp_of(i * c));
    for (std::size_t j = 0; j < n; ++j) rows.set(i, j, v[j]);
  }
  return Subspace::from_rows(rows);
}

Subspace build_spread_start(std::size_t k, std::size_t n, const Poly& p) {
  if (p.degree() != static_cast<int>(n)) {
    throw DomainError(Errc::degree_mismatch, to_string(p) + " does not have degree " + std::to_string(n));
  }
  return build_spread_start(k, ExtensionContext(p));
}

bool check_sidon_condition(const ExponentProfile& profile, std::uint64_t modulus) {
  if (modulus == 0) throw DomainError(Errc::division_by_zero, "modulus 0");
  std::set<std::uint64_t> seen;
  const auto& b = profile.exponents;
  for (std::size_t l = 0; l < b.size(); ++l) {
    for (std::size_t m = 0; m < b.size(); ++m) {
      if (l == m) continue;
      const std::uint64_t a = (b[m] % modulus + modulus - b[l] % modulus) % modulus;
      if (!seen.insert(a).second) return false;
    }
  }
  return true;
}

std::pair<Subspace, Mat> conjugate_code(const Subspace& u, const Mat& g, const Mat& s) {
  if (!is_invertible(s)) throw DomainError(Errc::singular_matrix, "conjugating matrix");
  if (!is_irreducible_matrix(g)) throw DomainError(Errc::reducible_matrix, "generator");
  const Mat s_inv = mat_inv(s);
  return {subspace_apply(u, s), s_inv * g * s};
}

}  // namespace orbitcodes
