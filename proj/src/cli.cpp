#include "tdpoly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tdpoly/audit.hpp"
#include "tdpoly/characterization.hpp"
#include "tdpoly/families.hpp"
#include "tdpoly/graph_io.hpp"
#include "tdpoly/oracle.hpp"
#include "tdpoly/recurrences.hpp"
#include "tdpoly/reduction.hpp"

namespace tdpoly {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string family;
  std::size_t n = 1;
  std::size_t q = 4;
  std::string fidelity = "derived";
  std::size_t guard = kDefaultEnumerationGuard;
  unsigned threads = 1;

  void attach(CLI::App& cmd, bool with_input) {
    if (with_input) cmd.add_option("--input", input, "Edge-list file ('-' for stdin)");
    cmd.add_option("--family", family, "Family name");
    cmd.add_option("--n", n, "Family size parameter");
    cmd.add_option("--q", q, "Cycle length for the f family");
    cmd.add_option("--fidelity", fidelity, "Formula fidelity: printed|derived")
        ->check(CLI::IsMember({"printed", "derived"}));
    cmd.add_option("--guard", guard, "Enumeration guard (max order)");
    cmd.add_option("--threads", threads, "Enumeration threads (0 = all cores)");
  }

  EnumerationOptions oracle() const { return {guard, threads}; }

  std::optional<FamilySpec> spec() const {
    if (family.empty()) return std::nullopt;
    auto f = parse_family(family);
    if (!f) throw UsageError("unknown family '" + family + "'");
    return FamilySpec{*f, n, q, std::nullopt, *parse_fidelity(fidelity)};
  }

  Graph graph() const {
    const bool has_file = !input.empty();
    const bool has_family = !family.empty();
    if (has_file == has_family) throw UsageError("give exactly one of --input FILE or --family NAME --n K");
    if (has_family) return generate(*spec());
    if (input == "-") return read_edge_list(std::cin);
    std::ifstream in(input);
    if (!in) throw UsageError("cannot open '" + input + "'");
    return read_edge_list(in);
  }
};

void print_polynomial(std::ostream& out, const Polynomial& p) {
  out << to_dense_string(p) << '\n' << to_human_string(p) << '\n';
}

struct MethodChoice {
  std::string method;
  std::size_t ceiling = 20;
};

Polynomial compute(const InputOptions& in, const MethodChoice& m, std::ostream* trace_out) {
  auto method = m.method;
  if (method == "auto") method = in.family.empty() ? "oracle" : "formula";
  if (method == "formula") {
    auto spec = in.spec();
    if (!spec || !in.input.empty()) throw UsageError("--method formula needs --family and no --input");
    auto p = dt_formula(*spec);
    if (!p) throw UsageError("no formula for family '" + in.family + "' with these parameters");
    return *p;
  }
  auto g = in.graph();
  if (method == "reduction") {
    ReductionOptions ro;
    ro.ceiling = m.ceiling;
    ro.oracle = in.oracle();
    auto r = dt_via_reduction(g, ro);
    if (trace_out) *trace_out << r.trace.render();
    return r.polynomial;
  }
  return dt_polynomial(g, in.oracle());
}

void emit_report(std::ostream& out, const AuditReport& report, const std::string& format) {
  if (format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_table(report);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total domination polynomials: enumeration, reduction identities, family formulas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  InputOptions gen_in;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Write a family instance as an edge list");
  gen_in.attach(*gen, false);
  gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

  InputOptions dt_in;
  MethodChoice dt_method{"oracle"};
  bool dt_trace = false;
  auto* dt = app.add_subcommand("dt", "Compute D_t(G, x)");
  dt_in.attach(*dt, true);
  dt->add_option("--method", dt_method.method, "oracle|reduction|formula")
      ->check(CLI::IsMember({"oracle", "reduction", "formula"}));
  dt->add_option("--ceiling", dt_method.ceiling, "Order ceiling for --method reduction");
  dt->add_flag("--trace", dt_trace, "Print the reduction trace");

  InputOptions gamma_in;
  auto* gamma = app.add_subcommand("gamma", "Total domination number");
  gamma_in.attach(*gamma, true);

  InputOptions roots_in;
  MethodChoice roots_method{"auto"};
  auto* roots = app.add_subcommand("roots", "Integer roots of D_t and the {-3,-2,-1,0} check");
  roots_in.attach(*roots, true);
  roots->add_option("--method", roots_method.method, "auto|oracle|reduction|formula")
      ->check(CLI::IsMember({"auto", "oracle", "reduction", "formula"}));

  InputOptions rec_in;
  auto* rec = app.add_subcommand("recognize-h3", "Decompose G as H(3)");
  rec_in.attach(*rec, true);

  std::size_t id_samples = 100;
  std::size_t id_max_order = 6;
  std::uint64_t id_seed = 42;
  std::string id_format = "table";
  EnumerationOptions id_oracle;
  auto* ids = app.add_subcommand("identities", "Randomized check of the decomposition identities");
  ids->add_option("--samples", id_samples);
  ids->add_option("--max-order", id_max_order)->check(CLI::Range(2, 16));
  ids->add_option("--seed", id_seed);
  ids->add_option("--format", id_format)->check(CLI::IsMember({"json", "table"}));
  ids->add_option("--guard", id_oracle.guard);

  std::string audit_family_name;
  std::size_t audit_q = 4;
  std::size_t audit_min = 1;
  std::size_t audit_max = 3;
  std::string audit_fidelity = "both";
  std::string audit_format = "table";
  EnumerationOptions audit_oracle;
  auto* aud = app.add_subcommand("audit", "Compare a family's formula against enumeration");
  aud->add_option("--family", audit_family_name)->required();
  aud->add_option("--q", audit_q);
  aud->add_option("--min", audit_min);
  aud->add_option("--max", audit_max);
  aud->add_option("--fidelity", audit_fidelity)->check(CLI::IsMember({"both", "printed", "derived"}));
  aud->add_option("--format", audit_format)->check(CLI::IsMember({"json", "table"}));
  aud->add_option("--guard", audit_oracle.guard);
  aud->add_option("--threads", audit_oracle.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_in.family.empty()) throw UsageError("gen needs --family");
      auto g = gen_in.graph();
      if (gen_output.empty()) {
        write_edge_list(out, g);
      } else {
        std::ofstream file(gen_output);
        if (!file) throw UsageError("cannot write '" + gen_output + "'");
        write_edge_list(file, g);
      }
      return kExitOk;
    }
    if (dt->parsed()) {
      std::ostringstream trace;
      auto p = compute(dt_in, dt_method, dt_trace ? &trace : nullptr);
      print_polynomial(out, p);
      out << trace.str();
      return kExitOk;
    }
    if (gamma->parsed()) {
      try {
        out << gamma_t(gamma_in.graph(), gamma_in.oracle()) << '\n';
      } catch (const NoTotalDominatingSet&) {
        out << "no total dominating set\n";
      }
      return kExitOk;
    }
    if (roots->parsed()) {
      auto p = compute(roots_in, roots_method, nullptr);
      out << "polynomial: " << to_human_string(p) << '\n';
      if (p.is_zero()) {
        out << "integer roots: all (zero polynomial)\n";
        return kExitOk;
      }
      auto verdict = conjecture_membership(p);
      out << "integer roots:";
      for (const auto& r : verdict.roots) out << ' ' << r;
      out << '\n';
      if (verdict.within) {
        out << "conjecture: within {-3,-2,-1,0}\n";
        return kExitOk;
      }
      out << "conjecture: violated by";
      for (const auto& r : verdict.violators) out << ' ' << r;
      out << '\n';
      return kExitDiscrepancy;
    }
    if (rec->parsed()) {
      auto g = rec_in.graph();
      auto found = recognize_h3(g);
      if (!found) {
        out << "not H(3)\n";
        return kExitOk;
      }
      out << "H(3) with H of order " << found->base.order() << '\n';
      out << "H edges:";
      for (auto [a, b] : found->base.edges()) out << ' ' << a << '-' << b;
      out << '\n';
      for (std::size_t i = 0; i < found->base_vertices.size(); ++i) {
        out << "H vertex " << i << " = " << found->base_vertices[i] << ": path " << found->base_vertices[i]
            << '-' << found->paths[i].first << '-' << found->paths[i].second << '\n';
      }
      return kExitOk;
    }
    if (ids->parsed()) {
      auto report = audit_identities(id_samples, id_max_order, id_seed, id_oracle);
      emit_report(out, report, id_format);
      return report.has_mismatches() ? kExitDiscrepancy : kExitOk;
    }
    if (aud->parsed()) {
      auto family = parse_family(audit_family_name);
      if (!family) throw UsageError("unknown family '" + audit_family_name + "'");
      auto selection = audit_fidelity == "printed"   ? FidelitySelection::printed
                       : audit_fidelity == "derived" ? FidelitySelection::derived
                                                     : FidelitySelection::both;
      auto report = audit_family(*family, audit_q, audit_min, audit_max, selection, audit_oracle);
      emit_report(out, report, audit_format);
      return report.has_mismatches() ? kExitDiscrepancy : kExitOk;
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tdpoly
