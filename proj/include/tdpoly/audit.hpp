#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tdpoly/families.hpp"
#include "tdpoly/graph.hpp"
#include "tdpoly/oracle.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {

/// One formula-vs-enumeration comparison. For identity audits the "paper"
/// side is the identity's right-hand side and the pivots are filled in.
struct AuditRecord {
  std::string subject;
  std::size_t n = 0;
  std::optional<std::size_t> q;
  std::string fidelity;
  Polynomial paper;
  Polynomial oracle;
  bool equal = false;
  bool skipped = false;
  std::optional<std::size_t> first_mismatch_degree;
  /// (paper, oracle) coefficients at first_mismatch_degree.
  std::optional<std::pair<Integer, Integer>> mismatch_coefficients;
  Graph graph;
  std::optional<Vertex> u;
  std::optional<Vertex> v;
  std::string note;
};

/// Fills in equal / first_mismatch_degree / mismatch_coefficients.
AuditRecord make_record(std::string subject, std::size_t n, std::string fidelity, Polynomial paper,
                        Polynomial oracle, Graph graph);

struct AuditSummary {
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t skipped = 0;
};

struct AuditReport {
  std::vector<AuditRecord> records;
  std::string tool_version;
  std::size_t enumeration_guard = kDefaultEnumerationGuard;

  /// Derived from the records, so it cannot drift from them.
  AuditSummary summary() const;
  bool has_mismatches() const { return summary().mismatched > 0; }
};

enum class FidelitySelection { both, printed, derived };

std::string tool_version();

/// Formula vs enumeration for n in [n_min, n_max]. Records are ordered by n,
/// then printed before derived. Families without fidelity variants yield a
/// single "printed" record per n. Instances above the enumeration guard are
/// recorded as skipped.
AuditReport audit_family(Family family, std::size_t q, std::size_t n_min, std::size_t n_max,
                         FidelitySelection fidelities, const EnumerationOptions& oracle = {});

/// Closed form x^{2n}(x+2)^n vs enumeration of H(3) for `count` seeded
/// random graphs H with order in [min_order, max_order].
AuditReport audit_h3_random(std::size_t count, std::size_t min_order, std::size_t max_order,
                            std::uint64_t seed, const EnumerationOptions& oracle = {});

/// Checks identity (i) at every vertex and (ii)-(iv) at every ordered pair
/// meeting their hypotheses, on `sample_count` seeded isolated-free random
/// graphs of order 2..max_order.
AuditReport audit_identities(std::size_t sample_count, std::size_t max_order, std::uint64_t seed,
                             const EnumerationOptions& oracle = {});

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const AuditRecord& record);
nlohmann::json to_json(const AuditReport& report);
std::string render_table(const AuditReport& report);

}  // namespace tdpoly
