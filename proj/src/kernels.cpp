// Brute-force kernels: OpenMP versions and the serial references they are
// tested and benchmarked against.

#include <algorithm>
#include <limits>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes {

unsigned min_distance_brute_serial(std::span<const Subspace> codewords) {
  if (codewords.size() < 2) throw DomainError(Errc::singleton_code, "distance of a single codeword");
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      best = std::min(best, subspace_distance(codewords[i], codewords[j]));
    }
  }
  return best;
}

unsigned min_distance_brute(std::span<const Subspace> codewords) {
  if (codewords.size() < 2) throw DomainError(Errc::singleton_code, "distance of a single codeword");
  const auto count = static_cast<std::ptrdiff_t>(codewords.size());
  unsigned best = std::numeric_limits<unsigned>::max();
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    for (std::ptrdiff_t j = i + 1; j < count; ++j) {
      best = std::min(best, subspace_distance(codewords[static_cast<std::size_t>(i)],
                                              codewords[static_cast<std::size_t>(j)]));
    }
  }
  return best;
}

namespace {

void require_sidon_search(const ExtensionContext& ctx, std::size_t k) {
  if (!ctx.primitive()) throw DomainError(Errc::not_primitive, "Sidon search needs a primitive context");
  if (k == 0 || k > ctx.degree()) throw DomainError(Errc::dimension_mismatch, "Sidon search dimension");
}

}  // namespace

std::optional<Subspace> find_sidon_start_serial(const ExtensionContext& ctx, std::size_t k) {
  require_sidon_search(ctx, k);
  for (const Subspace& u : enumerate_grassmannian(ctx.base(), k, ctx.degree())) {
    if (check_sidon_condition(exponent_profile(u, ctx), ctx.group_order())) return u;
  }
  return std::nullopt;
}

std::optional<Subspace> find_sidon_start(const ExtensionContext& ctx, std::size_t k) {
  require_sidon_search(ctx, k);
  const auto all = enumerate_grassmannian(ctx.base(), k, ctx.degree());
  const auto count = static_cast<std::ptrdiff_t>(all.size());
  std::ptrdiff_t first = count;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (i >= first) continue;
    const Subspace& u = all[static_cast<std::size_t>(i)];
    if (check_sidon_condition(exponent_profile(u, ctx), ctx.group_order())) first = std::min(first, i);
  }
  if (first == count) return std::nullopt;
  return all[static_cast<std::size_t>(first)];
}

}  // namespace orbitcodes
