#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitcodes/orbit_code.hpp"
#include "orbitcodes/version.hpp"
#include "report.hpp"
#include "selfcheck.hpp"

namespace orbitcodes::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::uint64_t q = 2;
  std::optional<std::string> base_modulus;
  std::string poly;
  std::string poly2;
  std::string modulus;
  std::int64_t exponent = 0;
  std::optional<std::size_t> n;
  std::size_t k = 0;
  std::optional<std::string> rows;
  std::string input;
  std::optional<std::string> out_path;
  bool verify = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f || !(f << content)) throw IoError("cannot write '" + path + "'");
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string element_text(const ExtensionContext& ctx, Value v) {
  return to_string(Poly(ctx.base(), ctx.extension().digits(v)));
}

std::string vector_text(std::span<const Value> v) {
  std::string s;
  for (Value d : v) s += digit_char(d);
  return s;
}

Mat load_matrix(const Options& o, const Field& f) {
  if (o.rows && !o.input.empty()) throw CLI::ValidationError("give either a matrix file or --rows, not both");
  if (o.rows) return parse_inline_rows(*o.rows, f);
  if (o.input.empty()) throw CLI::ValidationError("a matrix file or --rows is required");
  return parse_matrix(read_input(o.input), f);
}

Subspace load_start(const Options& o, const Field& f) {
  const Mat rows = load_matrix(o, f);
  Subspace u = Subspace::from_rows(rows);
  if (u.dimension() == 0) throw DomainError(Errc::zero_subspace, "start rows have rank 0");
  if (u.dimension() != rows.rows()) {
    throw DomainError(Errc::dimension_mismatch, "start rows are rank deficient (rank " +
                                                    std::to_string(u.dimension()) + " of " +
                                                    std::to_string(rows.rows()) + ")");
  }
  return u;
}

ExtensionContext load_context(const Options& o, const Field& f) {
  Poly p = parse_poly(o.poly, f);
  if (o.n && static_cast<int>(*o.n) != p.degree()) {
    throw DomainError(Errc::degree_mismatch,
                      "-n " + std::to_string(*o.n) + " but " + o.poly + " has degree " + std::to_string(p.degree()));
  }
  return ExtensionContext(p);
}

ReportDocument make_document(const Options& o, const Field& f, const Subspace& u, AnalysisReport r) {
  ReportDocument doc;
  doc.tool_version = kVersion;
  doc.q = f.cardinality();
  doc.p = f.characteristic();
  if (!f.is_prime_field()) doc.base_modulus = to_string(f.modulus());
  doc.polynomial = to_string(parse_poly(o.poly, f));
  for (std::size_t i = 0; i < u.dimension(); ++i) doc.start.push_back(vector_text(u.basis().row(i)));
  doc.oracle_run = r.verified();
  doc.analysis = std::move(r);
  return doc;
}

int cmd_poly(const std::string& action, const Options& o, std::ostream& out) {
  const Field f = base_field(o.q, o.base_modulus);
  if (action == "list") {
    if (!o.n) throw CLI::ValidationError("poly list needs -n");
    for (const Poly& g : list_irreducibles(f, static_cast<unsigned>(*o.n))) out << to_string(g) << "\n";
    return kExitOk;
  }
  const Poly p = parse_poly(o.poly, f);
  if (action == "irreducible") {
    out << yes_no(is_irreducible(p)) << "\n";
  } else if (action == "order") {
    out << order_of_polynomial(p) << "\n";
  } else if (action == "primitive") {
    out << yes_no(is_primitive(p)) << "\n";
  } else if (action == "powmod") {
    if (o.exponent < 0) throw CLI::ValidationError("exponent must be non-negative");
    out << to_string(poly_powmod(p, static_cast<std::uint64_t>(o.exponent), parse_poly(o.modulus, f)))
        << "\n";
  } else if (action == "companion") {
    out << format_matrix(companion_matrix(p));
  } else if (action == "conjugate") {
    out << yes_no(groups_conjugate(p, parse_poly(o.poly2, f))) << "\n";
  }
  return kExitOk;
}

int cmd_field(const std::string& action, const Options& o, std::ostream& out) {
  const Field f = base_field(o.q, o.base_modulus);
  const ExtensionContext ctx = load_context(o, f);
  if (action == "info") {
    out << "cardinality " << ctx.extension().cardinality() << "\n"
        << "order " << ctx.order() << "\n"
        << "primitive " << yes_no(ctx.primitive()) << "\n"
        << "orbits " << ctx.orbit_count() << "\n";
  } else if (action == "pow") {
    const Value v = ctx.alpha().pow(o.exponent).index();
    out << "polynomial " << element_text(ctx, v) << "\n"
        << "vector " << vector_text(ctx.extension().digits(v)) << "\n";
  } else if (action == "dlog") {
    const Poly e = parse_poly(o.poly2, f);
    const Value v = ctx.extension().from_digits(e.coefficients());
    out << ctx.log_of(v) << "\n";
  } else if (action == "orbits") {
    std::optional<Subspace> u;
    if (o.rows || !o.input.empty()) u = load_start(o, f);
    const OrbitPartition part = orbit_partition(ctx, u);
    out << "orbits " << part.orbits.size() << "\n";
    for (std::size_t i = 0; i < part.orbits.size(); ++i) {
      const Orbit& orb = part.orbits[i];
      out << "orbit " << i << " representative " << element_text(ctx, orb.representative) << " size "
          << orb.size;
      if (u) {
        out << " members " << orb.members << " exponents";
        for (auto b : orb.exponents) out << " " << b;
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_matrix(const std::string& action, const Options& o, std::ostream& out) {
  const Field f = base_field(o.q, o.base_modulus);
  const Mat m = load_matrix(o, f);
  if (action == "rref") {
    const Echelon e = rref(m);
    out << format_matrix(e.matrix) << "rank " << e.rank << "\n";
  } else if (action == "order") {
    out << matrix_order(m) << "\n";
  } else if (action == "charpoly") {
    out << to_string(char_poly(m)) << "\n";
  } else if (action == "irreducible") {
    out << yes_no(is_irreducible_matrix(m)) << "\n";
  }
  return kExitOk;
}

int cmd_spread(const Options& o, std::ostream& out) {
  const Field f = base_field(o.q, o.base_modulus);
  const ExtensionContext ctx = load_context(o, f);
  const Subspace u = build_spread_start(o.k, ctx);
  AnalysisReport r = predict_primitive(u, ctx);
  const OrbitCode code = generate_orbit(u, companion_matrix(ctx.modulus()));
  if (o.out_path) write_output(*o.out_path, export_code(code));
  if (o.verify) {
    verify_report(r, u, ctx);
    out << "cardinality " << *r.verified_cardinality << "\n";
    if (r.verified_distance) out << "distance " << *r.verified_distance << "\n";
    out << "spread " << yes_no(r.spread) << "\n"
        << "agrees " << yes_no(r.agrees()) << "\n";
    return r.agrees() ? kExitOk : kExitMismatch;
  }
  out << "cardinality " << r.predicted_cardinality << "\n";
  if (r.predicted_distance) out << "distance " << *r.predicted_distance << "\n";
  out << "spread " << yes_no(r.spread) << "\n";
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Field f = base_field(o.q, o.base_modulus);
  const ExtensionContext ctx = load_context(o, f);
  const Subspace u = load_start(o, f);
  AnalysisReport r = analyze(u, ctx);
  if (o.verify) verify_report(r, u, ctx);
  const bool ok = !o.verify || r.agrees();
  const std::string text = serialize(make_document(o, f, u, std::move(r)));
  if (o.out_path) {
    write_output(*o.out_path, text);
  } else {
    out << text;
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const Field f = base_field(o.q, o.base_modulus);
  const ExtensionContext ctx = load_context(o, f);
  const Subspace u = load_start(o, f);
  const std::string text = export_code(generate_orbit(u, companion_matrix(ctx.modulus())));
  if (o.out_path) {
    write_output(*o.out_path, text);
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const std::string text = read_input(o.input);
  const CodeFile header = parse_code_header(text);
  const CodeFile code = parse_code(text, base_field(header.q, o.base_modulus));
  out << min_distance_brute(code.codewords) << "\n";
  return kExitOk;
}

int cmd_selfcheck(std::ostream& out) {
  std::size_t failed = 0;
  const auto results = run_selfcheck();
  for (const CheckResult& c : results) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      out << ": " << c.detail;
      ++failed;
    }
    out << "\n";
  }
  out << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

Field base_field(std::uint64_t q, const std::optional<std::string>& base_modulus) {
  if (q < 2) throw DomainError(Errc::not_prime, "q must be a prime power");
  const auto primes = prime_factors(q);
  if (primes.size() != 1) throw DomainError(Errc::not_prime, std::to_string(q) + " is not a prime power");
  const auto p = static_cast<std::uint32_t>(primes.front());
  const Field zp = Field::prime(p);
  const int r = exact_log(p, q);
  if (r == 1) {
    if (base_modulus) throw CLI::ValidationError("--base-modulus only applies to non-prime q");
    return zp;
  }
  if (base_modulus) {
    const Poly m = parse_poly(*base_modulus, zp);
    if (m.degree() != r) {
      throw DomainError(Errc::degree_mismatch, "base modulus must have degree " + std::to_string(r));
    }
    return Field::extend(zp, m);
  }
  return Field::extend(zp, list_irreducibles(zp, static_cast<unsigned>(r)).front());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible cyclic orbit codes in the finite Grassmannian", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto field_flags = [&](CLI::App* c) {
    c->add_option("-q", o.q, "Base field size (prime or prime power)")->required();
    c->add_option("--base-modulus", o.base_modulus, "Modulus over Z_p defining F_q when q = p^r");
  };
  auto start_flags = [&](CLI::App* c) {
    c->add_option("start", o.input, "Matrix file ('-' for stdin)");
    c->add_option("--rows", o.rows, "Inline rows, e.g. 1000;0011");
  };

  std::vector<std::pair<CLI::App*, std::string>> poly_cmds, field_cmds, matrix_cmds;

  CLI::App* poly = app.add_subcommand("poly", "Polynomial predicates and arithmetic");
  poly->require_subcommand(1);
  for (const char* name : {"irreducible", "order", "primitive", "companion"}) {
    CLI::App* c = poly->add_subcommand(name);
    field_flags(c);
    c->add_option("polynomial", o.poly)->required();
    poly_cmds.emplace_back(c, name);
  }
  {
    CLI::App* c = poly->add_subcommand("list", "Monic irreducibles of degree n");
    field_flags(c);
    c->add_option("-n", o.n)->required();
    poly_cmds.emplace_back(c, "list");
    c = poly->add_subcommand("powmod", "f^e mod m");
    field_flags(c);
    c->add_option("polynomial", o.poly)->required();
    c->add_option("exponent", o.exponent)->required();
    c->add_option("modulus", o.modulus)->required();
    poly_cmds.emplace_back(c, "powmod");
    c = poly->add_subcommand("conjugate", "Whether two companion groups are conjugate");
    field_flags(c);
    c->add_option("polynomial", o.poly)->required();
    c->add_option("other", o.poly2)->required();
    poly_cmds.emplace_back(c, "conjugate");
  }

  CLI::App* field = app.add_subcommand("field", "Extension field F_q[x]/(p)");
  field->require_subcommand(1);
  for (const char* name : {"info", "pow", "dlog", "orbits"}) {
    CLI::App* c = field->add_subcommand(name);
    field_flags(c);
    c->add_option("-p", o.poly, "Irreducible modulus")->required();
    c->add_option("-n", o.n);
    if (std::string(name) == "pow") c->add_option("exponent", o.exponent)->required();
    if (std::string(name) == "dlog") c->add_option("element", o.poly2, "Element as a polynomial in x")->required();
    if (std::string(name) == "orbits") start_flags(c);
    field_cmds.emplace_back(c, name);
  }

  CLI::App* matrix = app.add_subcommand("matrix", "Matrix operations");
  matrix->require_subcommand(1);
  for (const char* name : {"rref", "order", "charpoly", "irreducible"}) {
    CLI::App* c = matrix->add_subcommand(name);
    field_flags(c);
    start_flags(c);
    matrix_cmds.emplace_back(c, name);
  }

  CLI::App* spread = app.add_subcommand("spread", "Spread code from a primitive polynomial");
  field_flags(spread);
  spread->add_option("-n", o.n);
  spread->add_option("-k", o.k)->required();
  spread->add_option("-p", o.poly)->required();
  spread->add_option("--out", o.out_path, "Write the code export here");
  spread->add_flag("--verify", o.verify, "Check against the brute-force oracle");

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Predict cardinality and distance");
  field_flags(analyze_cmd);
  analyze_cmd->add_option("-p", o.poly)->required();
  analyze_cmd->add_option("-n", o.n);
  start_flags(analyze_cmd);
  analyze_cmd->add_option("--out", o.out_path, "Write the report here instead of stdout");
  analyze_cmd->add_flag("--verify", o.verify, "Also run the brute-force oracle");

  CLI::App* orbit = app.add_subcommand("orbit", "Export the orbit code");
  field_flags(orbit);
  orbit->add_option("-p", o.poly)->required();
  orbit->add_option("-n", o.n);
  start_flags(orbit);
  orbit->add_option("--out", o.out_path);

  CLI::App* distance = app.add_subcommand("distance", "Minimum distance of an exported code");
  distance->add_option("code", o.input, "Code file ('-' for stdin)")->required();
  distance->add_option("--base-modulus", o.base_modulus);

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the reference example battery");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto& [c, name] : poly_cmds) {
      if (c->parsed()) return cmd_poly(name, o, out);
    }
    for (auto& [c, name] : field_cmds) {
      if (c->parsed()) return cmd_field(name, o, out);
    }
    for (auto& [c, name] : matrix_cmds) {
      if (c->parsed()) return cmd_matrix(name, o, out);
    }
    if (spread->parsed()) return cmd_spread(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (distance->parsed()) return cmd_distance(o, out);
    if (selfcheck->parsed()) return cmd_selfcheck(out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace orbitcodes::cli
