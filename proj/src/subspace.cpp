#include "orbitcodes/subspace.hpp"

#include <algorithm>

namespace orbitcodes {

Subspace Subspace::from_rows(const Mat& rows) {
  Echelon e = rref(rows);
  std::vector<Value> data(e.matrix.entries().begin(),
                          e.matrix.entries().begin() + static_cast<std::ptrdiff_t>(e.rank * rows.cols()));
  return Subspace(Mat(rows.field(), e.rank, rows.cols(), std::move(data)));
}

std::vector<std::vector<Value>> Subspace::nonzero_vectors() const {
  const Field& f = field();
  const std::uint64_t q = f.cardinality();
  const std::size_t k = dimension();
  const std::uint64_t total = checked_pow(q, k, kDeskScaleCap);
  if (total == 0) throw DomainError(Errc::cap_exceeded, "subspace too large to enumerate");
  std::vector<std::vector<Value>> out;
  out.reserve(total - 1);
  for (std::uint64_t t = 1; t < total; ++t) {
    std::vector<Value> v(ambient(), 0);
    std::uint64_t rest = t;
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = static_cast<Value>(rest % q);
      rest /= q;
      if (c == 0) continue;
      for (std::size_t j = 0; j < ambient(); ++j) v[j] = f.add(v[j], f.mul(c, basis_.at(i, j)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  const auto& x = a.basis_.entries();
  const auto& y = b.basis_.entries();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

namespace {
void require_compatible(const Subspace& u, const Subspace& v) {
  if (!(u.field() == v.field())) throw DomainError(Errc::field_mismatch, "subspaces over different fields");
  if (u.ambient() != v.ambient()) {
    throw DomainError(Errc::dimension_mismatch, "ambient " + std::to_string(u.ambient()) + " vs " +
                                                    std::to_string(v.ambient()));
  }
}
}  // namespace

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return u.dimension() + v.dimension() - rank(stack(u.basis(), v.basis()));
}

unsigned subspace_distance(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const std::size_t r = rank(stack(u.basis(), v.basis()));
  return static_cast<unsigned>(2 * r - u.dimension() - v.dimension());
}

Subspace detail::apply_unchecked(const Subspace& u, const Mat& a) {
  if (u.dimension() == 0) return u;
  return Subspace::from_rows(u.basis() * a);
}

Subspace subspace_apply(const Subspace& u, const Mat& a) {
  if (!a.is_square() || a.rows() != u.ambient()) {
    throw DomainError(Errc::dimension_mismatch, "subspace_apply needs an n x n matrix");
  }
  if (!(a.field() == u.field())) throw DomainError(Errc::field_mismatch, "subspace_apply");
  if (!is_invertible(a)) throw DomainError(Errc::singular_matrix, "subspace_apply");
  return detail::apply_unchecked(u, a);
}

std::uint64_t grassmannian_size(std::uint64_t q, std::size_t k, std::size_t n) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * (checked_pow(q, n - i) - 1) / (checked_pow(q, i + 1) - 1);
  }
  return result;
}

std::vector<Subspace> enumerate_grassmannian(const Field& field, std::size_t k, std::size_t n) {
  if (k > n) throw DomainError(Errc::dimension_mismatch, "k > n");
  const std::uint64_t q = field.cardinality();
  const std::uint64_t count = grassmannian_size(q, k, n);
  if (count == 0 || count > kDeskScaleCap) throw DomainError(Errc::cap_exceeded, "Grassmannian too large");
  std::vector<Subspace> out;
  out.reserve(count);
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(r, c);
      }
    }
    const std::uint64_t fills = checked_pow(q, free.size());
    for (std::uint64_t t = 0; t < fills; ++t) {
      Mat m(field, k, n);
      for (std::size_t r = 0; r < k; ++r) m.set(r, pivots[r], 1);
      std::uint64_t rest = t;
      for (auto [r, c] : free) {
        m.set(r, c, static_cast<Value>(rest % q));
        rest /= q;
      }
      out.push_back(Subspace::from_rows(m));
    }
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace orbitcodes
