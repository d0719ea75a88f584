#include "selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes::cli {

namespace {

const Field kZ2 = Field::prime(2);

Poly z2(const char* text) { return parse_poly(text, kZ2); }

Subspace rows(const char* text) { return Subspace::from_rows(parse_inline_rows(text, kZ2)); }

std::string canonical(const Subspace& u) {
  std::string s = format_matrix(u.basis());
  std::replace(s.begin(), s.end(), '\n', ';');
  if (!s.empty()) s.pop_back();
  return s;
}

template <typename A, typename B>
std::string expected(const A& got, const B& want) {
  std::ostringstream os;
  os << "got " << got << ", expected " << want;
  return os.str();
}

struct Check {
  std::string name;
  std::function<CheckResult()> run;
};

CheckResult eq_check(const std::string& name, const std::string& got, const std::string& want) {
  return {name, got == want, expected(got, want)};
}

template <typename T>
CheckResult eq_check(const std::string& name, T got, T want) {
  return {name, got == want, expected(got, want)};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<Check> battery() {
  std::vector<Check> c;
  const char* sextic = "x^6+x+1";
  const char* p1 = "x^4+x+1";
  const char* p2 = "x^4+x^3+1";
  const char* p3 = "x^4+x^3+x^2+x+1";

  c.push_back({"F_2[x]/(x^6+x+1) has 64 elements", [=] {
                 return eq_check<std::uint64_t>("F_2[x]/(x^6+x+1) has 64 elements",
                                                ExtensionContext(z2(sextic)).extension().cardinality(), 64);
               }});
  c.push_back({"alpha^63 = 1 in F_64", [=] {
                 return eq_check<Value>("alpha^63 = 1 in F_64",
                                        ExtensionContext(z2(sextic)).alpha().pow(63).index(), 1);
               }});
  c.push_back({"x^9 mod x^6+x+1", [=] {
                 return eq_check("x^9 mod x^6+x+1",
                                 to_string(poly_powmod(z2("x"), 9, z2(sextic))), std::string("x^4+x^3"));
               }});
  for (const char* f : {"x^2+x+1", p2}) {
    std::string name = std::string(f) + " irreducible";
    c.push_back({name, [=] { return eq_check(name, is_irreducible(z2(f)), true); }});
  }
  for (auto [f, e] : std::vector<std::pair<const char*, std::uint64_t>>{{p3, 5}, {p1, 15}, {p2, 15}, {sextic, 63}}) {
    std::string name = std::string("ord(") + f + ")";
    c.push_back({name, [=] { return eq_check(name, order_of_polynomial(z2(f)), e); }});
  }
  for (auto [f, want] : std::vector<std::pair<const char*, bool>>{{sextic, true}, {p3, false}, {p2, true}}) {
    std::string name = std::string(f) + (want ? " primitive" : " not primitive");
    c.push_back({name, [=] { return eq_check(name, is_primitive(z2(f)), want); }});
  }
  c.push_back({"companion(x^2+x+1)", [] {
                 return eq_check("companion(x^2+x+1)", format_matrix(companion_matrix(z2("x^2+x+1"))),
                                 std::string("01\n11\n"));
               }});
  c.push_back({"irreducibles of degree 2", [] {
                 std::string got;
                 for (const Poly& f : list_irreducibles(kZ2, 2)) got += to_string(f) + " ";
                 return eq_check("irreducibles of degree 2", got, std::string("x^2+x+1 "));
               }});
  c.push_back({"irreducibles of degree 4", [=] {
                 std::vector<std::string> got;
                 for (const Poly& f : list_irreducibles(kZ2, 4)) got.push_back(to_string(f));
                 std::sort(got.begin(), got.end());
                 std::vector<std::string> want{p1, p2, p3};
                 std::sort(want.begin(), want.end());
                 return CheckResult{"irreducibles of degree 4", got == want, std::to_string(got.size()) + " found"};
               }});
  c.push_back({"rref(100000;000110;111100)", [] {
                 const Echelon e = rref(parse_inline_rows("100000;000110;111100", kZ2));
                 return eq_check("rref(100000;000110;111100)",
                                 format_matrix(e.matrix) + std::to_string(e.rank),
                                 std::string("100000\n011010\n000110\n3"));
               }});
  c.push_back({"canonical rs(100000;111000)", [] {
                 return eq_check("canonical rs(100000;111000)", canonical(rows("100000;111000")),
                                 std::string("100000;011000"));
               }});
  for (auto [f, e] : std::vector<std::pair<const char*, std::uint64_t>>{{p3, 5}, {sextic, 63}}) {
    std::string name = std::string("order of companion(") + f + ")";
    c.push_back({name, [=] { return eq_check(name, matrix_order(companion_matrix(z2(f))), e); }});
  }
  for (const char* f : {"x^2+x+1", p2}) {
    std::string name = std::string("companion(") + f + ") irreducible";
    c.push_back({name, [=] { return eq_check(name, is_irreducible_matrix(companion_matrix(z2(f))), true); }});
  }
  c.push_back({"<P1> and <P2> conjugate", [=] {
                 return eq_check("<P1> and <P2> conjugate", groups_conjugate(z2(p1), z2(p2)), true);
               }});
  c.push_back({"<P1> and <P3> not conjugate", [=] {
                 return eq_check("<P1> and <P3> not conjugate", groups_conjugate(z2(p1), z2(p3)), false);
               }});
  c.push_back({"phi(000110) = alpha^9", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const std::vector<Value> v{0, 0, 0, 1, 1, 0};
                 return eq_check("phi(000110) = alpha^9", phi(v, ctx) == ctx.alpha().pow(9), true);
               }});
  c.push_back({"phi(100000) = 1", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const std::vector<Value> v{1, 0, 0, 0, 0, 0};
                 return eq_check<Value>("phi(100000) = 1", phi(v, ctx).index(), 1);
               }});
  // The value of alpha^21 is often misquoted as alpha^2+alpha+1, which is alpha^26.
  for (auto [e, want] : std::vector<std::pair<const char*, std::uint64_t>>{
           {"x^5+x^4+x^3+x+1", 21}, {"x^4+x^3", 9}, {"x^2+x+1", 26}}) {
    std::string name = std::string("dlog(") + e + ") in F_64";
    c.push_back({name, [=] {
                   const ExtensionContext ctx(z2(sextic));
                   const auto x = ctx.extension().from_digits(z2(e).coefficients());
                   return eq_check(name, ctx.log_of(x), want);
                 }});
  }
  c.push_back({"spread start k=3", [=] {
                 return eq_check("spread start k=3", canonical(build_spread_start(3, 6, z2(sextic))),
                                 std::string("100000;011010;000110"));
               }});
  c.push_back({"spread start k=2", [=] {
                 return eq_check("spread start k=2", canonical(build_spread_start(2, 6, z2(sextic))),
                                 std::string("100000;010111"));
               }});
  c.push_back({"k=2 spread start exponents", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 return eq_check("k=2 spread start exponents",
                                 join(exponent_profile(build_spread_start(2, ctx), ctx).exponents),
                                 std::string("0,21,42"));
               }});
  for (std::size_t k : {3u, 2u}) {
    const std::uint64_t card = k == 3 ? 9 : 21;
    const unsigned dist = static_cast<unsigned>(2 * k);
    std::string name = "k=" + std::to_string(k) + " spread code";
    c.push_back({name, [=] {
                   const ExtensionContext ctx(z2(sextic));
                   const Subspace u = build_spread_start(k, ctx);
                   AnalysisReport r = predict_primitive(u, ctx);
                   verify_report(r, u, ctx);
                   std::ostringstream got;
                   got << *r.verified_cardinality << "/" << r.verified_distance.value_or(0) << "/"
                       << r.predicted_cardinality << "/" << r.predicted_distance.value_or(0) << "/" << r.spread;
                   std::ostringstream want;
                   want << card << "/" << dist << "/" << card << "/" << dist << "/1";
                   return eq_check(name, got.str(), want.str());
                 }});
  }
  c.push_back({"k=3 spread codewords meet trivially", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const OrbitCode code = generate_orbit(build_spread_start(3, ctx), companion_matrix(ctx.modulus()));
                 const auto& w = code.codewords();
                 return eq_check("k=3 spread codewords meet trivially",
                                 std::to_string(intersection_dim(w[0], w[1])) + "/" +
                                     std::to_string(subspace_distance(w[0], w[1])),
                                 std::string("0/6"));
               }});
  c.push_back({"k=2 spread stabilizer", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const AnalysisReport r = predict_primitive(build_spread_start(2, ctx), ctx);
                 return eq_check("k=2 spread stabilizer",
                                 join(r.stabilizer_shifts) + "/" + std::to_string(r.max_multiplicity),
                                 std::string("21,42/0"));
               }});
  c.push_back({"F_16 mod x^4+x^3+x^2+x+1 has 3 orbits of 5", [=] {
                 const OrbitPartition part = orbit_partition(ExtensionContext(z2(p3)));
                 bool ok = part.orbits.size() == 3;
                 for (const Orbit& o : part.orbits) ok = ok && o.size == 5;
                 return CheckResult{"F_16 mod x^4+x^3+x^2+x+1 has 3 orbits of 5", ok,
                                    std::to_string(part.orbits.size()) + " orbits"};
               }});
  c.push_back({"non-primitive example", [=] {
                 const ExtensionContext ctx(z2(p3));
                 const Subspace u = rows("1000;0011");
                 AnalysisReport r = analyze(u, ctx);
                 verify_report(r, u, ctx);
                 std::string m;
                 for (const Orbit& o : r.orbits) m += std::to_string(o.members);
                 std::ostringstream got;
                 got << m << "/" << r.differences.total() << "/" << r.predicted_cardinality << "/"
                     << r.predicted_distance.value_or(0) << "/" << r.spread << "/" << r.agrees();
                 return eq_check("non-primitive example", got.str(), std::string("111/0/5/4/1/1"));
               }});
  c.push_back({"non-primitive example export has 5 blocks", [=] {
                 const ExtensionContext ctx(z2(p3));
                 const std::string text =
                     export_code(generate_orbit(rows("1000;0011"), companion_matrix(ctx.modulus())));
                 const CodeFile f = parse_code(text, kZ2);
                 return eq_check<std::size_t>("non-primitive example export has 5 blocks", f.codewords.size(), 5);
               }});
  c.push_back({"k=3 spread export distance", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const std::string text =
                     export_code(generate_orbit(build_spread_start(3, ctx), companion_matrix(ctx.modulus())));
                 return eq_check("k=3 spread export distance", min_distance_brute(parse_code(text, kZ2).codewords), 6u);
               }});
  c.push_back({"first Sidon subspace of G(3,6)", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const auto u = find_sidon_start(ctx, 3);
                 if (!u) return CheckResult{"first Sidon subspace of G(3,6)", false, "none found"};
                 AnalysisReport r = predict_primitive(*u, ctx);
                 verify_report(r, *u, ctx);
                 std::ostringstream got;
                 got << r.max_multiplicity << "/" << *r.verified_cardinality << "/" << r.verified_distance.value_or(0)
                     << "/" << r.agrees();
                 return eq_check("first Sidon subspace of G(3,6)", got.str(), std::string("1/63/4/1"));
               }});
  c.push_back({"conjugated k=3 spread", [=] {
                 const ExtensionContext ctx(z2(sextic));
                 const Mat g = companion_matrix(ctx.modulus());
                 const Subspace u = build_spread_start(3, ctx);
                 std::mt19937_64 rng(2024);
                 std::uniform_int_distribution<Value> bit(0, 1);
                 Mat s(kZ2, 6, 6);
                 do {
                   for (std::size_t i = 0; i < 6; ++i)
                     for (std::size_t j = 0; j < 6; ++j) s.set(i, j, bit(rng));
                 } while (!is_invertible(s));
                 const auto [us, gs] = conjugate_code(u, g, s);
                 const OrbitCode code = generate_orbit(us, gs);
                 return eq_check("conjugated k=3 spread",
                                 std::to_string(code.size()) + "/" + std::to_string(min_distance_brute(code)),
                                 std::string("9/6"));
               }});
  return c;
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  for (const Check& c : battery()) {
    try {
      out.push_back(c.run());
    } catch (const std::exception& e) {
      out.push_back({c.name, false, e.what()});
    }
  }
  return out;
}

}  // namespace orbitcodes::cli
