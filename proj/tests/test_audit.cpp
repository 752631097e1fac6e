#include <doctest.h>

#include "tdpoly/audit.hpp"

using namespace tdpoly;

TEST_CASE("barbell audit reports the first mismatch") {
  auto report = audit_family(Family::barbell, 4, 2, 3, FidelitySelection::both);
  REQUIRE(report.records.size() == 2);
  const auto& r3 = report.records[1];
  CHECK(r3.n == 3);
  CHECK(r3.fidelity == "printed");
  CHECK_FALSE(r3.equal);
  CHECK(*r3.first_mismatch_degree == 4);
  CHECK(r3.mismatch_coefficients->first == 15);
  CHECK(r3.mismatch_coefficients->second == 11);
  CHECK(report.has_mismatches());
  CHECK(report.summary().mismatched == 2);
}

TEST_CASE("below-minimum and guarded instances are skipped") {
  auto low = audit_family(Family::barbell, 4, 1, 1, FidelitySelection::both);
  REQUIRE(low.records.size() == 1);
  CHECK(low.records[0].skipped);

  auto guarded = audit_family(Family::para_q, 4, 3, 3, FidelitySelection::derived, {8, 1});
  REQUIRE(guarded.records.size() == 1);
  CHECK(guarded.records[0].skipped);
  CHECK(guarded.summary().skipped == 1);
  CHECK_FALSE(guarded.has_mismatches());
}

TEST_CASE("fidelity selection") {
  auto both = audit_family(Family::para_q1, 4, 0, 2, FidelitySelection::both);
  CHECK(both.records.size() == 6);
  CHECK(both.records[0].fidelity == "printed");
  CHECK(both.records[1].fidelity == "derived");
  auto derived = audit_family(Family::para_q1, 4, 0, 2, FidelitySelection::derived);
  CHECK(derived.records.size() == 3);
  CHECK_FALSE(derived.has_mismatches());
  auto printed = audit_family(Family::para_q1, 4, 1, 1, FidelitySelection::printed);
  CHECK(printed.has_mismatches());
}

TEST_CASE("json report") {
  auto report = audit_family(Family::friendship, 4, 1, 2, FidelitySelection::both);
  auto j = to_json(report);
  CHECK(j["records"].size() == 4);
  CHECK(j["summary"]["checked"] == 4);
  CHECK(j["summary"]["mismatched"] == 1);
  CHECK(j["guards"]["enumeration"] == kDefaultEnumerationGuard);
  CHECK(j["tool_version"] == tool_version());
  const auto& r = j["records"][2];
  CHECK(r["subject"] == "f");
  CHECK(r["q"] == 4);
  CHECK(r["fidelity"] == "printed");
  CHECK(r["equal"] == false);
  CHECK(r["first_mismatch_degree"] == 2);
  CHECK(r["mismatch_coefficients"]["oracle"] == 0);
  CHECK(r["graph"]["order"] == 7);
  CHECK(r["oracle"] == nlohmann::json::array({0, 0, 0, 4, 16, 17, 7, 1}));
  CHECK(j["records"][3]["first_mismatch_degree"].is_null());
}

TEST_CASE("huge coefficients serialize as strings") {
  auto p = pow(Polynomial{1, 1}, 100);
  auto j = to_json(p);
  CHECK(j[0] == 1);
  CHECK(j[50].is_string());
  CHECK(Integer(j[50].get<std::string>()) == p.coefficient(50));
}

TEST_CASE("h3 and identity audits") {
  auto h = audit_h3_random(5, 1, 4, 9);
  CHECK(h.records.size() == 5);
  CHECK_FALSE(h.has_mismatches());
  auto ids = audit_identities(10, 6, 1);
  CHECK_FALSE(ids.has_mismatches());
  CHECK(ids.summary().checked > 10);
  CHECK(ids.records[0].u.has_value());
  CHECK(render_table(ids).find("checked") != std::string::npos);
}
