#ifndef IDEALSPACE_VERIFIER_HPP
#define IDEALSPACE_VERIFIER_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealspace/ideal.hpp"
#include "idealspace/verdict.hpp"

namespace idealspace {

struct CheckInfo {
  std::string_view id;
  std::string_view anchor;
  /// Reproductions of counterexamples report `fails` by design and never
  /// count as theorem failures.
  bool theorem_form;
};

/// T01..T24 in order.
std::span<const CheckInfo> check_registry();
/// Throws UnknownName.
const CheckInfo& find_check(std::string_view id);
/// Whether the check is run for this kind at all.
bool applies(std::string_view id, SpectrumKind kind);

VerdictReport run_check(std::string_view id, const RingPtr& ring, SpectrumKind kind,
                        const Limits& limits = {});

struct SuiteConfig {
  std::vector<std::string> rings;
  std::vector<SpectrumKind> kinds;
  /// Empty means every check.
  std::vector<std::string> checks;
  Limits limits;
  /// 0 leaves the OpenMP default.
  int jobs = 0;
  /// Fill runtime_ms; otherwise it stays 0 so reports are reproducible.
  bool timing = false;
};

/// Z2, Z4, Z6, Z8, Z12, Z36, Z2xZ2xZ2, Z2xZ4, Z6xZ6.
std::vector<std::string> default_suite();

/// Reports ordered by (ring, kind, check). Per-item failures such as caps
/// become `error` reports.
std::vector<VerdictReport> run_suite(const SuiteConfig& cfg);

bool is_theorem_failure(const VerdictReport& r);

/// Ring expressions of a family: "zn:A..B", "fields:A..B" (prime n),
/// "prod:A..B" (ZmxZn with A <= m <= n <= B) or "list:E1;E2;...".
std::vector<std::string> expand_family(std::string_view family);

struct Counterexample {
  std::string ring;
  SpectrumKind kind;
  std::size_t points;
  VerdictReport report;
};

struct SearchResult {
  std::vector<Counterexample> hits;
  std::vector<VerdictReport> errors;
};

/// T03, T05 and T23 look for m.i.p. failures; every other check looks for
/// `fails`. Hits are ordered by point count, then ring label, then kind.
SearchResult search_counterexamples(std::string_view check, std::string_view family,
                                    std::span<const SpectrumKind> kinds, const Limits& limits = {},
                                    int jobs = 0);

}  // namespace idealspace

#endif  // IDEALSPACE_VERIFIER_HPP
