#include "orbitcodes/matrix.hpp"

#include <algorithm>
#include <cctype>

namespace orbitcodes {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DomainError(Errc::dimension_mismatch, "matrix entry count");
  }
  for (Value v : data_) {
    if (!field_.contains(v)) throw DomainError(Errc::index_out_of_range, "matrix entry");
  }
}

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void Mat::set(std::size_t r, std::size_t c, Value v) {
  if (!field_.contains(v)) throw DomainError(Errc::index_out_of_range, "matrix entry");
  data_[r * cols_ + c] = v;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw DomainError(Errc::field_mismatch, "mat_mul");
  if (a.cols() != b.rows()) throw DomainError(Errc::dimension_mismatch, "mat_mul");
  const Field& f = a.field();
  std::vector<Value> out(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Value s = a.at(i, l);
      if (s == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Value& dst = out[i * b.cols() + j];
        dst = f.add(dst, f.mul(s, b.at(l, j)));
      }
    }
  }
  return Mat(f, a.rows(), b.cols(), std::move(out));
}

Mat mat_pow(const Mat& a, std::uint64_t e) {
  if (!a.is_square()) throw DomainError(Errc::not_square, "mat_pow");
  Mat result = Mat::identity(a.field(), a.rows());
  Mat base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Mat stack(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw DomainError(Errc::field_mismatch, "stack");
  if (a.cols() != b.cols()) throw DomainError(Errc::dimension_mismatch, "stack");
  std::vector<Value> out = a.entries();
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return Mat(a.field(), a.rows() + b.rows(), a.cols(), std::move(out));
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce_in_place(const Field& f, std::vector<Value>& d, std::size_t rows,
                                         std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && d[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap_ranges(d.begin() + static_cast<std::ptrdiff_t>(p * cols),
                       d.begin() + static_cast<std::ptrdiff_t>((p + 1) * cols),
                       d.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const Value scale = f.inv(d[r * cols + c]);
    if (scale != 1) {
      for (std::size_t j = c; j < cols; ++j) d[r * cols + j] = f.mul(d[r * cols + j], scale);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Value factor = d[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        d[i * cols + j] = f.sub(d[i * cols + j], f.mul(factor, d[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon rref(const Mat& m) {
  std::vector<Value> d = m.entries();
  auto pivots = reduce_in_place(m.field(), d, m.rows(), m.cols());
  const std::size_t r = pivots.size();
  return {Mat(m.field(), m.rows(), m.cols(), std::move(d)), r, std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat mat_inv(const Mat& a) {
  if (!a.is_square()) throw DomainError(Errc::not_square, "mat_inv");
  const std::size_t n = a.rows();
  const Field& f = a.field();
  std::vector<Value> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = a.at(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  auto pivots = reduce_in_place(f, aug, n, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw DomainError(Errc::singular_matrix, "mat_inv");
  }
  Mat out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug[i * 2 * n + n + j]);
  }
  return out;
}

Mat companion_matrix(const Poly& f) {
  if (f.degree() < 1) throw DomainError(Errc::constant_polynomial, "companion_matrix");
  if (!f.is_monic()) throw DomainError(Errc::non_monic_modulus, to_string(f) + " is not monic");
  const auto n = static_cast<std::size_t>(f.degree());
  const Field& field = f.field();
  Mat m(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  for (std::size_t j = 0; j < n; ++j) m.set(n - 1, j, field.neg(f.coeff(j)));
  return m;
}

Poly char_poly(const Mat& g) {
  if (!g.is_square()) throw DomainError(Errc::not_square, "char_poly");
  const Field& f = g.field();
  const std::size_t n = g.rows();
  // Coefficients of the leading principal minors' characteristic
  // polynomials, highest degree first.
  std::vector<Value> vect{1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Value> t(r + 2, 0);
    t[0] = 1;
    t[1] = f.neg(g.at(r, r));
    std::vector<Value> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = g.at(i, r);
    for (std::size_t j = 0; j < r; ++j) {
      Value dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot = f.add(dot, f.mul(g.at(r, i), x[i]));
      t[j + 2] = f.neg(dot);
      std::vector<Value> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < r; ++l) next[i] = f.add(next[i], f.mul(g.at(i, l), x[l]));
      }
      x = std::move(next);
    }
    std::vector<Value> out(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        out[i] = f.add(out[i], f.mul(t[i - j], vect[j]));
      }
    }
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return Poly(f, std::move(vect));
}

std::uint64_t matrix_order(const Mat& g, std::uint64_t cap) {
  if (!g.is_square()) throw DomainError(Errc::not_square, "matrix_order");
  if (!is_invertible(g)) throw DomainError(Errc::singular_matrix, "matrix_order");
  const Mat id = Mat::identity(g.field(), g.rows());
  Mat power = g;
  std::uint64_t m = 1;
  while (!(power == id)) {
    if (++m > cap) throw DomainError(Errc::cap_exceeded, "matrix order above cap");
    power = power * g;
  }
  return m;
}

bool is_irreducible_matrix(const Mat& g) {
  if (!g.is_square()) throw DomainError(Errc::not_square, "is_irreducible_matrix");
  if (!is_invertible(g)) throw DomainError(Errc::singular_matrix, "is_irreducible_matrix");
  return is_irreducible(char_poly(g));
}

Mat to_companion_similarity(const Mat& g) {
  if (!is_irreducible_matrix(g)) throw DomainError(Errc::reducible_matrix, "no companion similarity");
  const Field& f = g.field();
  const std::size_t n = g.rows();
  const std::uint64_t q = f.cardinality();
  const std::uint64_t total = checked_pow(q, n, kDeskScaleCap);
  if (total == 0) throw DomainError(Errc::cap_exceeded, "cyclic vector search");
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Mat s(f, n, n);
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < n; ++j) {
      s.set(0, j, static_cast<Value>(rest % q));
      rest /= q;
    }
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Value acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc = f.add(acc, f.mul(s.at(i - 1, l), g.at(l, j)));
        s.set(i, j, acc);
      }
    }
    if (rank(s) == n) return s;
  }
  throw DomainError(Errc::internal_defect, "irreducible matrix without cyclic vector");
}

bool groups_conjugate(const Poly& f1, const Poly& f2) {
  if (!(f1.field() == f2.field())) throw DomainError(Errc::field_mismatch, "groups_conjugate");
  if (f1.degree() != f2.degree()) throw DomainError(Errc::degree_mismatch, "groups_conjugate");
  return order_of_polynomial(f1) == order_of_polynomial(f2);
}

char digit_char(Value v) {
  if (v < 10) return static_cast<char>('0' + v);
  if (v < 36) return static_cast<char>('a' + (v - 10));
  throw DomainError(Errc::index_out_of_range, "digit text format supports fields up to 36 elements");
}

Value digit_value(char c, const Field& field) {
  Value v;
  if (c >= '0' && c <= '9') {
    v = static_cast<Value>(c - '0');
  } else if (c >= 'a' && c <= 'z') {
    v = static_cast<Value>(c - 'a' + 10);
  } else {
    throw ParseError(std::string("bad digit '") + c + "'");
  }
  if (!field.contains(v)) throw ParseError(std::string("digit '") + c + "' not in " + field.describe());
  return v;
}

std::string format_matrix(const Mat& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Value v : m.row(r)) out += digit_char(v);
    out += '\n';
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Mat rows_to_matrix(const std::vector<std::string>& rows, const Field& field) {
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Value> data;
  for (const auto& row : rows) {
    if (row.size() != cols) throw ParseError("ragged matrix rows");
    for (char c : row) data.push_back(digit_value(c, field));
  }
  return Mat(field, rows.size(), cols, std::move(data));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    out.push_back(trim(text.substr(start, nl - start)));
    start = nl + 1;
  }
  return out;
}

}  // namespace

std::vector<Mat> parse_matrices(std::string_view text, const Field& field) {
  std::vector<Mat> out;
  std::vector<std::string> block;
  for (const auto& line : lines_of(text)) {
    if (line.empty()) {
      if (!block.empty()) out.push_back(rows_to_matrix(block, field));
      block.clear();
    } else {
      block.push_back(line);
    }
  }
  if (!block.empty()) out.push_back(rows_to_matrix(block, field));
  return out;
}

Mat parse_matrix(std::string_view text, const Field& field) {
  auto blocks = parse_matrices(text, field);
  if (blocks.size() != 1) {
    throw ParseError("expected one matrix, found " + std::to_string(blocks.size()) + " blocks");
  }
  return std::move(blocks.front());
}

Mat parse_inline_rows(std::string_view text, const Field& field) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == ';' || c == ',' || c == '/') {
      rows.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(trim(cur));
  return rows_to_matrix(rows, field);
}

}  // namespace orbitcodes
