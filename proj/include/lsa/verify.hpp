#pragma once

#include "lsa/catalog.hpp"
#include "lsa/fingerprint.hpp"

#include <cstdint>
#include <map>
#include <json.hpp>
#include <string>
#include <vector>

namespace lsa {

struct CheckResult {
  bool pass = true;
  std::string witness;
  /// Soft checks (agreement with claimed table data) produce discrepancies, not failures.
  bool hard = true;
};

struct EntryReport {
  std::string name;
  std::vector<std::string> samples;  // parameter values checked, as text
  std::map<std::string, CheckResult> checks;

  bool pass() const;
};

struct Discrepancy {
  std::string subject;
  std::string description;
  std::string evidence;
};

struct PairEvidence {
  std::string a, b;
  bool differs = false;
  std::string fingerprint_a, fingerprint_b;
};

struct VerificationReport {
  std::vector<EntryReport> entries;  // sorted by name
  std::vector<CheckResult> reconstructions;
  std::vector<std::string> reconstruction_labels;
  std::vector<PairEvidence> distinctness;
  std::vector<Discrepancy> discrepancies;

  std::size_t hard_failures() const;
  bool pass() const { return hard_failures() == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 5;
};

/// All checks for one entry at the given parameter values.
EntryReport verify_entry(const CatalogEntry& entry, const std::vector<Rational>& params);

VerificationReport verify_catalog(const VerifyOptions& opt = {});

nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace lsa
