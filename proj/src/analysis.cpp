#include <algorithm>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes {

std::uint64_t DifferenceMultiset::at(std::uint64_t a) const {
  auto it = multiplicity.find(a);
  return it == multiplicity.end() ? 0 : it->second;
}

std::uint64_t DifferenceMultiset::total() const {
  std::uint64_t sum = 0;
  for (const auto& [a, m] : multiplicity) sum += m;
  return sum;
}

void DifferenceMultiset::merge(const DifferenceMultiset& other) {
  if (modulus != other.modulus) throw DomainError(Errc::dimension_mismatch, "difference multiset modulus");
  for (const auto& [a, m] : other.multiplicity) multiplicity[a] += m;
}

DifferenceMultiset difference_multiset(std::span<const std::uint64_t> exponents, std::uint64_t modulus) {
  if (modulus == 0) throw DomainError(Errc::division_by_zero, "modulus 0");
  DifferenceMultiset d{modulus, {}};
  for (std::size_t l = 0; l < exponents.size(); ++l) {
    for (std::size_t m = 0; m < exponents.size(); ++m) {
      if (l == m) continue;
      ++d.multiplicity[(exponents[m] % modulus + modulus - exponents[l] % modulus) % modulus];
    }
  }
  return d;
}

bool AnalysisReport::agrees() const {
  return verified() && *verified_cardinality == predicted_cardinality &&
         verified_distance == predicted_distance;
}

const char* to_string(AnalysisMode mode) {
  return mode == AnalysisMode::primitive ? "primitive" : "non-primitive";
}

namespace {

void require_start(const Subspace& u, const ExtensionContext& ctx) {
  if (!(u.field() == ctx.base())) throw DomainError(Errc::field_mismatch, "start subspace field");
  if (u.ambient() != ctx.degree()) throw DomainError(Errc::dimension_mismatch, "start subspace ambient");
  if (u.dimension() == 0) throw DomainError(Errc::zero_subspace, "zero start subspace");
}

// U P^h meets U in exactly m(h) nonzero vectors, where m counts the merged
// within-orbit differences modulo ord(P). Full multiplicity q^k - 1 means
// U P^h = U; those shifts form the stabilizer, and the least of them is the
// number of distinct codewords. The remaining residues give the distances.
AnalysisReport analyze_classes(AnalysisMode mode, const Subspace& u, const ExtensionContext& ctx,
                               std::vector<Orbit> orbits, std::uint64_t order) {
  AnalysisReport r;
  r.mode = mode;
  r.q = ctx.base().cardinality();
  r.n = ctx.degree();
  r.k = u.dimension();
  r.generator_order = order;
  r.group_order = ctx.group_order();
  r.differences = DifferenceMultiset{order, {}};
  for (const Orbit& o : orbits) {
    r.orbit_differences.push_back(difference_multiset(o.exponents, order));
    r.differences.merge(r.orbit_differences.back());
  }
  r.orbits = std::move(orbits);

  const std::uint64_t full = checked_pow(r.q, r.k) - 1;
  for (const auto& [a, m] : r.differences.multiplicity) {
    if (m == full) r.stabilizer_shifts.push_back(a);
  }
  r.predicted_cardinality = r.stabilizer_shifts.empty() ? order : r.stabilizer_shifts.front();
  r.degenerate = r.predicted_cardinality == 1;

  for (const auto& [a, m] : r.differences.multiplicity) {
    if (a % r.predicted_cardinality != 0) r.max_multiplicity = std::max(r.max_multiplicity, m);
  }
  if (!r.degenerate) {
    const int d = exact_log(r.q, r.max_multiplicity + 1);
    if (d < 0 || static_cast<std::size_t>(d) >= r.k) {
      throw DomainError(Errc::internal_defect, "multiplicity " + std::to_string(r.max_multiplicity) +
                                                   " + 1 is not a power of q below q^k");
    }
    r.intersection_exponent = static_cast<unsigned>(d);
    r.predicted_distance = static_cast<unsigned>(2 * r.k - 2 * r.intersection_exponent);
  }
  r.distinct_orbits = std::all_of(r.orbits.begin(), r.orbits.end(),
                                  [](const Orbit& o) { return o.members <= 1; });
  if (!r.degenerate && r.n % r.k == 0) {
    const std::uint64_t spread_size = r.group_order / full;
    r.spread = r.predicted_cardinality == spread_size && *r.predicted_distance == 2 * r.k;
  }
  return r;
}

}  // namespace

AnalysisReport predict_primitive(const Subspace& u, const ExtensionContext& ctx) {
  if (!ctx.primitive()) {
    throw DomainError(Errc::not_primitive, to_string(ctx.modulus()) + " is not primitive");
  }
  require_start(u, ctx);
  ExponentProfile profile = exponent_profile(u, ctx);
  std::vector<Orbit> orbits{{1, ctx.group_order(), profile.exponents.size(), profile.exponents}};
  AnalysisReport r =
      analyze_classes(AnalysisMode::primitive, u, ctx, std::move(orbits), ctx.group_order());
  r.exponent_profile = std::move(profile.exponents);
  return r;
}

AnalysisReport analyze_nonprimitive(const Subspace& u, const ExtensionContext& ctx) {
  if (ctx.primitive()) {
    throw DomainError(Errc::primitive_context, "use predict_primitive for " + to_string(ctx.modulus()));
  }
  require_start(u, ctx);
  OrbitPartition partition = orbit_partition(ctx, u);
  return analyze_classes(AnalysisMode::non_primitive, u, ctx, std::move(partition.orbits), ctx.order());
}

AnalysisReport analyze(const Subspace& u, const ExtensionContext& ctx) {
  return ctx.primitive() ? predict_primitive(u, ctx) : analyze_nonprimitive(u, ctx);
}

void verify_report(AnalysisReport& report, const Subspace& u, const ExtensionContext& ctx) {
  const OrbitCode code = generate_orbit(u, companion_matrix(ctx.modulus()));
  report.verified_cardinality = code.size();
  report.verified_distance.reset();
  if (code.size() >= 2) report.verified_distance = min_distance_brute(code);
}

}  // namespace orbitcodes
