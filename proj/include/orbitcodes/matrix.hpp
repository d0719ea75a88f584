#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcodes/gfq.hpp"
#include "orbitcodes/poly.hpp"

namespace orbitcodes {

/// Dense row-major matrix over a Field. A matrix with zero rows is allowed so
/// that the zero subspace has a canonical form.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);
  Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static Mat identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Value at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Value v);
  std::span<const Value> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Value> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Value>& entries() const { return data_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> data_;
};

Mat mat_mul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }
/// Throws singular_matrix when `a` is not invertible.
Mat mat_inv(const Mat& a);
Mat mat_pow(const Mat& a, std::uint64_t e);
/// Rows of `a` followed by rows of `b`.
Mat stack(const Mat& a, const Mat& b);

struct Echelon {
  Mat matrix;  // unique reduced row echelon form, zero rows last
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
bool is_invertible(const Mat& m);

/// Companion matrix with ones on the superdiagonal and (-c_0, ..., -c_{n-1})
/// in the last row, acting on row vectors.
Mat companion_matrix(const Poly& f);

/// Berkowitz's division-free characteristic polynomial det(xI - g).
Poly char_poly(const Mat& g);

/// Least m >= 1 with g^m = I, by repeated multiplication up to `cap`.
std::uint64_t matrix_order(const Mat& g, std::uint64_t cap = kDeskScaleCap);

bool is_irreducible_matrix(const Mat& g);

/// S with rows v, vg, ..., vg^{n-1} for the first nonzero v (in enumeration
/// order) that is a cyclic vector, so that S g S^{-1} = companion(char_poly(g)).
Mat to_companion_similarity(const Mat& g);

/// Whether the cyclic groups of companion(f1) and companion(f2) are conjugate
/// in GL_n, i.e. whether f1 and f2 have the same order.
bool groups_conjugate(const Poly& f1, const Poly& f2);

/// Element index written as one character: 0-9 then a-z.
char digit_char(Value v);
Value digit_value(char c, const Field& field);

/// One row per line, rows as contiguous digit strings.
std::string format_matrix(const Mat& m);
Mat parse_matrix(std::string_view text, const Field& field);
/// Blocks separated by blank lines.
std::vector<Mat> parse_matrices(std::string_view text, const Field& field);
/// Rows separated by ';', ',' or '/' on a single line, e.g. "1000;0011".
Mat parse_inline_rows(std::string_view text, const Field& field);

}  // namespace orbitcodes
