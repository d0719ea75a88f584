#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitcodes/fieldmap.hpp"
#include "orbitcodes/subspace.hpp"

namespace orbitcodes {

/// The orbit {U P^i} of a starting subspace under the cyclic group <P>.
class OrbitCode {
 public:
  OrbitCode(Mat generator, Subspace start, std::vector<Subspace> codewords,
            std::uint64_t generator_order);

  const Mat& generator() const { return generator_; }
  const Subspace& start() const { return start_; }
  /// Distinct codewords in ascending order.
  const std::vector<Subspace>& codewords() const { return codewords_; }
  std::uint64_t generator_order() const { return generator_order_; }
  std::size_t size() const { return codewords_.size(); }
  std::size_t dimension() const { return start_.dimension(); }

 private:
  Mat generator_;
  Subspace start_;
  std::vector<Subspace> codewords_;
  std::uint64_t generator_order_;
};

OrbitCode generate_orbit(const Subspace& u, const Mat& generator);

/// Minimum distance over all unordered pairs. This is the OpenMP kernel; the
/// serial variant is the reference it is tested against.
unsigned min_distance_brute(std::span<const Subspace> codewords);
unsigned min_distance_brute_serial(std::span<const Subspace> codewords);
unsigned min_distance_brute(const OrbitCode& code);

/// Minimum distance from the starting point to the other codewords.
unsigned min_distance_orbit(const OrbitCode& code);

/// Row space of φ^{-1}(α^{ic}), i < k, with c = (q^n - 1)/(q^k - 1). Its orbit
/// under the companion matrix of the modulus is a spread.
Subspace build_spread_start(std::size_t k, const ExtensionContext& ctx);
Subspace build_spread_start(std::size_t k, std::size_t n, const Poly& p);

/// True iff all ordered pairwise differences of the exponents are distinct
/// modulo `modulus`.
bool check_sidon_condition(const ExponentProfile& profile, std::uint64_t modulus);

/// First k-dimensional subspace, in Grassmannian enumeration order, whose
/// exponent profile satisfies the Sidon condition. Parallel scan with a
/// deterministic first-index reduction; the serial variant is the reference.
std::optional<Subspace> find_sidon_start(const ExtensionContext& ctx, std::size_t k);
std::optional<Subspace> find_sidon_start_serial(const ExtensionContext& ctx, std::size_t k);

/// Multiset of differences b_m - b_l (l != m) over Z_modulus.
struct DifferenceMultiset {
  std::uint64_t modulus = 0;
  std::map<std::uint64_t, std::uint64_t> multiplicity;

  std::uint64_t at(std::uint64_t a) const;
  std::uint64_t total() const;
  void merge(const DifferenceMultiset& other);

  friend bool operator==(const DifferenceMultiset&, const DifferenceMultiset&) = default;
};

DifferenceMultiset difference_multiset(std::span<const std::uint64_t> exponents, std::uint64_t modulus);

enum class AnalysisMode { primitive, non_primitive };

/// Cardinality and minimum distance of the orbit of U under the companion
/// matrix of an irreducible modulus, predicted from exponent differences.
struct AnalysisReport {
  AnalysisMode mode = AnalysisMode::primitive;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t generator_order = 0;
  std::uint64_t group_order = 0;
  /// Discrete logs of U's nonzero vectors (primitive mode only).
  std::vector<std::uint64_t> exponent_profile;
  /// Orbit membership m_i and within-orbit exponents; a single orbit in
  /// primitive mode.
  std::vector<Orbit> orbits;
  /// D_i, one per orbit, modulo generator_order.
  std::vector<DifferenceMultiset> orbit_differences;
  /// D, the sum of all D_i.
  DifferenceMultiset differences;
  /// Nonzero residues h with m(h) = q^k - 1, i.e. U P^h = U.
  std::vector<std::uint64_t> stabilizer_shifts;
  std::uint64_t predicted_cardinality = 0;
  /// Largest m(a) over residues outside the stabilizer.
  std::uint64_t max_multiplicity = 0;
  /// d_max = log_q(max_multiplicity + 1).
  unsigned intersection_exponent = 0;
  /// 2k - 2 d_max; empty when the code has a single codeword.
  std::optional<unsigned> predicted_distance;
  bool spread = false;
  /// Every nonzero vector of U lies in its own orbit.
  bool distinct_orbits = false;
  bool degenerate = false;
  std::optional<std::uint64_t> verified_cardinality;
  std::optional<unsigned> verified_distance;

  bool verified() const { return verified_cardinality.has_value(); }
  bool agrees() const;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

const char* to_string(AnalysisMode mode);

AnalysisReport predict_primitive(const Subspace& u, const ExtensionContext& ctx);
AnalysisReport analyze_nonprimitive(const Subspace& u, const ExtensionContext& ctx);
/// Dispatches on the primitivity of the context.
AnalysisReport analyze(const Subspace& u, const ExtensionContext& ctx);
/// Runs the brute-force oracle and fills the verified fields.
void verify_report(AnalysisReport& report, const Subspace& u, const ExtensionContext& ctx);

/// (U S, S^{-1} G S).
std::pair<Subspace, Mat> conjugate_code(const Subspace& u, const Mat& g, const Mat& s);

/// Code export: header "q n k size", then one block of k digit rows per
/// codeword in ascending order, blocks separated by a blank line.
std::string export_code(std::span<const Subspace> codewords);
std::string export_code(const OrbitCode& code);

struct CodeFile {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Subspace> codewords;
};

/// `field` must have q elements. Blocks are re-canonicalised on read.
CodeFile parse_code(std::string_view text, const Field& field);
/// Reads just the header fields.
CodeFile parse_code_header(std::string_view text);

}  // namespace orbitcodes
