#pragma once

#include <string>
#include <vector>

#include "wcert/criteria.hpp"

namespace wcert {

/// What a catalog case asserts about one property.
enum class Expectation {
  Certified,
  CertifiedStrict,
  Refuted,
  RecordOnly,  // run and report, assert nothing
};

struct ExpectedProperty {
  Property property;
  Expectation expect;
};

struct CatalogCase {
  std::string label;  // "unit", "ray", "a=0.1", ...
  std::string expression_text;
  DomainSpec domain;
  std::vector<ExpectedProperty> expected;
  bool expect_normalization_failure = false;
};

struct CatalogEntry {
  std::string id;
  std::string provenance;  // which worked example or result the entry pins down
  std::vector<CatalogCase> cases;
};

struct CaseOutcome {
  CatalogCase spec;
  ClassifyResult result;
  bool match = false;
  std::vector<std::string> mismatches;
};

struct EntryOutcome {
  std::string id;
  std::string provenance;
  std::vector<CaseOutcome> cases;
  bool match = false;
};

/// The built-in regression entries (seven of them); gamma parameters use the
/// computed constants xi and x1.
std::vector<CatalogEntry> builtin_catalog();

/// Classify every entry (optionally filtered by id) and compare against the
/// recorded expectations.  Mismatches are reported, never thrown.
std::vector<EntryOutcome> run_catalog(const std::vector<std::string>& filter = {},
                                      const ClassifyConfig& cfg = {});

long count_mismatches(const std::vector<EntryOutcome>& outcomes);

}  // namespace wcert
