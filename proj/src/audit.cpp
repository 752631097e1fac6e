#include "tdpoly/audit.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "tdpoly/random_graph.hpp"
#include "tdpoly/recurrences.hpp"
#include "tdpoly/reduction.hpp"

#ifndef TDPOLY_VERSION
#define TDPOLY_VERSION "0.0.0"
#endif

namespace tdpoly {

namespace {

nlohmann::json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

AuditRecord skipped_record(std::string subject, std::size_t n, std::string fidelity, const std::string& why) {
  AuditRecord r;
  r.subject = std::move(subject);
  r.n = n;
  r.fidelity = std::move(fidelity);
  r.skipped = true;
  r.note = why;
  return r;
}

std::vector<Fidelity> selected(Family family, FidelitySelection selection) {
  if (!has_fidelity_variants(family)) return {Fidelity::printed};
  switch (selection) {
    case FidelitySelection::printed:
      return {Fidelity::printed};
    case FidelitySelection::derived:
      return {Fidelity::derived};
    case FidelitySelection::both:
      break;
  }
  return {Fidelity::printed, Fidelity::derived};
}

AuditReport empty_report(const EnumerationOptions& oracle) {
  AuditReport report;
  report.tool_version = tool_version();
  report.enumeration_guard = oracle.guard;
  return report;
}

}  // namespace

std::string tool_version() { return TDPOLY_VERSION; }

AuditRecord make_record(std::string subject, std::size_t n, std::string fidelity, Polynomial paper,
                        Polynomial oracle, Graph graph) {
  AuditRecord r;
  r.subject = std::move(subject);
  r.n = n;
  r.fidelity = std::move(fidelity);
  r.equal = paper == oracle;
  if (!r.equal) {
    const auto top = std::max(paper.coefficients().size(), oracle.coefficients().size());
    for (std::size_t i = 0; i < top; ++i) {
      if (paper.coefficient(i) != oracle.coefficient(i)) {
        r.first_mismatch_degree = i;
        r.mismatch_coefficients = std::pair{paper.coefficient(i), oracle.coefficient(i)};
        break;
      }
    }
  }
  r.paper = std::move(paper);
  r.oracle = std::move(oracle);
  r.graph = std::move(graph);
  return r;
}

AuditSummary AuditReport::summary() const {
  AuditSummary s;
  for (const auto& r : records) {
    if (r.skipped) {
      ++s.skipped;
      continue;
    }
    ++s.checked;
    if (r.equal) {
      ++s.matched;
    } else {
      ++s.mismatched;
    }
  }
  return s;
}

AuditReport audit_family(Family family, std::size_t q, std::size_t n_min, std::size_t n_max,
                         FidelitySelection fidelities, const EnumerationOptions& oracle) {
  auto report = empty_report(oracle);
  const auto name = std::string(family_name(family));
  for (std::size_t n = std::max(n_min, min_n(family)); n <= n_max; ++n) {
    FamilySpec spec{family, n, q, std::nullopt, Fidelity::derived};
    const auto graph = generate(spec);
    std::optional<Polynomial> truth;
    std::string skip_reason;
    try {
      truth = dt_polynomial(graph, oracle);
    } catch (const GuardExceeded& e) {
      skip_reason = e.what();
    }
    for (auto fid : selected(family, fidelities)) {
      spec.fidelity = fid;
      const auto fid_name = std::string(fidelity_name(fid));
      std::optional<Polynomial> formula;
      try {
        formula = dt_formula(spec);
      } catch (const FamilyError& e) {
        report.records.push_back(skipped_record(name, n, fid_name, e.what()));
        continue;
      }
      if (!formula) {
        report.records.push_back(skipped_record(name, n, fid_name, "no formula for this family"));
      } else if (!truth) {
        report.records.push_back(skipped_record(name, n, fid_name, skip_reason));
      } else {
        report.records.push_back(make_record(name, n, fid_name, *formula, *truth, graph));
      }
      if (family == Family::friendship) report.records.back().q = q;
    }
  }
  return report;
}

AuditReport audit_h3_random(std::size_t count, std::size_t min_order, std::size_t max_order,
                            std::uint64_t seed, const EnumerationOptions& oracle) {
  auto report = empty_report(oracle);
  GraphSampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto h = sampler.any(min_order, max_order);
    auto g = h3_of(h);
    std::ostringstream note;
    note << "sample " << i << ", H edges:";
    for (auto [a, b] : h.edges()) note << ' ' << a << '-' << b;
    try {
      auto truth = dt_polynomial(g, oracle);
      report.records.push_back(make_record("h3", h.order(), "printed", dt_closed_h3(h.order()), truth, g));
    } catch (const GuardExceeded& e) {
      report.records.push_back(skipped_record("h3", h.order(), "printed", e.what()));
    }
    report.records.back().note = note.str();
  }
  return report;
}

AuditReport audit_identities(std::size_t sample_count, std::size_t max_order, std::uint64_t seed,
                             const EnumerationOptions& oracle) {
  auto report = empty_report(oracle);
  GraphSampler sampler(seed);
  for (std::size_t sample = 0; sample < sample_count; ++sample) {
    const auto g = sampler.isolated_free(2, max_order);
    const auto order = static_cast<Vertex>(g.order());

    auto record = [&](IdentityPart part, Vertex u, std::optional<Vertex> v) {
      auto subject = "identity-" + std::string(to_string(part));
      try {
        auto check = check_identity(g, part, u, v, oracle);
        auto r = make_record(subject, sample, "printed", check.rhs, check.lhs, g);
        r.u = u;
        r.v = v;
        report.records.push_back(std::move(r));
      } catch (const GuardExceeded& e) {
        report.records.push_back(skipped_record(subject, sample, "printed", e.what()));
      }
    };

    for (Vertex u = 0; u < order; ++u) record(IdentityPart::i, u, std::nullopt);
    for (auto part : {IdentityPart::ii, IdentityPart::iii, IdentityPart::iv}) {
      for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = 0; v < order; ++v) {
          if (identity_applies(g, part, u, v)) record(part, u, v);
        }
      }
    }
  }
  return report;
}

nlohmann::json to_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(integer_json(c));
  return arr;
}

nlohmann::json to_json(const AuditRecord& r) {
  nlohmann::json j;
  j["subject"] = r.subject;
  j["n"] = r.n;
  j["q"] = r.q ? nlohmann::json(*r.q) : nlohmann::json(nullptr);
  j["fidelity"] = r.fidelity;
  j["skipped"] = r.skipped;
  j["paper"] = to_json(r.paper);
  j["oracle"] = to_json(r.oracle);
  j["equal"] = r.equal;
  j["first_mismatch_degree"] =
      r.first_mismatch_degree ? nlohmann::json(*r.first_mismatch_degree) : nlohmann::json(nullptr);
  if (r.mismatch_coefficients) {
    j["mismatch_coefficients"] = {{"paper", integer_json(r.mismatch_coefficients->first)},
                                  {"oracle", integer_json(r.mismatch_coefficients->second)}};
  } else {
    j["mismatch_coefficients"] = nullptr;
  }
  auto edges = nlohmann::json::array();
  for (auto [a, b] : r.graph.edges()) edges.push_back({a, b});
  j["graph"] = {{"order", r.graph.order()}, {"edges", edges}};
  j["u"] = r.u ? nlohmann::json(*r.u) : nlohmann::json(nullptr);
  j["v"] = r.v ? nlohmann::json(*r.v) : nlohmann::json(nullptr);
  j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json j;
  auto records = nlohmann::json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  const auto s = report.summary();
  j["records"] = std::move(records);
  j["summary"] = {{"checked", s.checked}, {"matched", s.matched}, {"mismatched", s.mismatched},
                  {"skipped", s.skipped}};
  j["tool_version"] = report.tool_version;
  j["guards"] = {{"enumeration", report.enumeration_guard}};
  return j;
}

std::string render_table(const AuditReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "subject" << std::setw(5) << "n" << std::setw(9) << "fidelity"
      << std::setw(10) << "status" << "detail\n";
  for (const auto& r : report.records) {
    out << std::setw(14) << r.subject << std::setw(5) << r.n << std::setw(9) << r.fidelity;
    if (r.skipped) {
      out << std::setw(10) << "skipped" << r.note;
    } else if (r.equal) {
      out << std::setw(10) << "match" << to_human_string(r.oracle);
    } else {
      out << std::setw(10) << "MISMATCH" << "degree " << *r.first_mismatch_degree << ": paper "
          << r.mismatch_coefficients->first << ", oracle " << r.mismatch_coefficients->second;
    }
    if (r.u) {
      out << "  (u=" << *r.u;
      if (r.v) out << ",v=" << *r.v;
      out << ')';
    }
    out << '\n';
  }
  const auto s = report.summary();
  out << "checked " << s.checked << ", matched " << s.matched << ", mismatched " << s.mismatched
      << ", skipped " << s.skipped << '\n';
  return out.str();
}

}  // namespace tdpoly
