#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "orbitcodes/matrix.hpp"

namespace orbitcodes {

/// A subspace of F_q^n held as its reduced row echelon basis, so equality of
/// subspaces is equality of canonical matrices.
class Subspace {
 public:
  /// Row space of `rows`; rank-deficient input gives a lower dimension.
  static Subspace from_rows(const Mat& rows);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dimension() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  /// The q^k - 1 nonzero vectors, as combinations sum t_i * row_i for
  /// t = 1, ..., q^k - 1 read with row 0 as the least significant digit.
  std::vector<std::vector<Value>> nonzero_vectors() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Lexicographic on (dimension, entries); used for sorted code export.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;
};

inline Subspace subspace_from_rows(const Mat& rows) { return Subspace::from_rows(rows); }

std::size_t intersection_dim(const Subspace& u, const Subspace& v);
/// dim u + dim v - 2 dim(u ∩ v), which is 2 rank[U;V] - 2k for equal dimension k.
unsigned subspace_distance(const Subspace& u, const Subspace& v);

/// rs(U A) for invertible n x n A.
Subspace subspace_apply(const Subspace& u, const Mat& a);

/// Every k-dimensional subspace of F_q^n. Order: pivot sets in lexicographic
/// order, then free entries counted with the first free position least
/// significant.
std::vector<Subspace> enumerate_grassmannian(const Field& field, std::size_t k, std::size_t n);

/// Gaussian binomial [n choose k]_q.
std::uint64_t grassmannian_size(std::uint64_t q, std::size_t k, std::size_t n);

namespace detail {
/// subspace_apply without the invertibility check.
Subspace apply_unchecked(const Subspace& u, const Mat& a);
}

}  // namespace orbitcodes
