#include <algorithm>
#include <sstream>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes {

std::string export_code(std::span<const Subspace> codewords) {
  if (codewords.empty()) throw DomainError(Errc::dimension_mismatch, "cannot export an empty code");
  std::vector<Subspace> sorted(codewords.begin(), codewords.end());
  std::sort(sorted.begin(), sorted.end());
  const Subspace& first = sorted.front();
  std::string out = std::to_string(first.field().cardinality()) + " " + std::to_string(first.ambient()) +
                    " " + std::to_string(first.dimension()) + " " + std::to_string(sorted.size()) + "\n";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Subspace& c = sorted[i];
    if (c.ambient() != first.ambient() || c.dimension() != first.dimension() ||
        !(c.field() == first.field())) {
      throw DomainError(Errc::dimension_mismatch, "codewords of mixed shape");
    }
    if (i > 0) out += '\n';
    out += format_matrix(c.basis());
  }
  return out;
}

std::string export_code(const OrbitCode& code) { return export_code(code.codewords()); }

CodeFile parse_code_header(std::string_view text) {
  const std::size_t nl = text.find('\n');
  std::istringstream is{std::string(text.substr(0, nl))};
  CodeFile out;
  long long q = -1, n = -1, k = -1, size = -1;
  std::string extra;
  if (!(is >> q >> n >> k >> size) || (is >> extra) || q < 2 || n < 1 || k < 0 || size < 0) {
    throw ParseError("code header must be 'q n k size'");
  }
  out.q = static_cast<std::uint64_t>(q);
  out.n = static_cast<std::size_t>(n);
  out.k = static_cast<std::size_t>(k);
  out.codewords.reserve(static_cast<std::size_t>(size));
  return out;
}

CodeFile parse_code(std::string_view text, const Field& field) {
  CodeFile out = parse_code_header(text);
  if (field.cardinality() != out.q) {
    throw DomainError(Errc::field_mismatch, "code file is over a field of size " + std::to_string(out.q));
  }
  const std::size_t expected = out.codewords.capacity();
  const std::size_t nl = text.find('\n');
  const std::string_view body = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  for (const Mat& m : parse_matrices(body, field)) {
    if (m.rows() != out.k || m.cols() != out.n) throw ParseError("codeword block has wrong shape");
    Subspace s = Subspace::from_rows(m);
    if (s.dimension() != out.k) throw ParseError("codeword block is rank deficient");
    out.codewords.push_back(std::move(s));
  }
  if (out.codewords.size() != expected) {
    throw ParseError("header announces " + std::to_string(expected) + " codewords, found " +
                     std::to_string(out.codewords.size()));
  }
  return out;
}

}  // namespace orbitcodes
