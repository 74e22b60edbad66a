#pragma once

#include <string>
#include <vector>

#include "hedetniemi/counterexample.hpp"
#include "hedetniemi/serialize.hpp"

namespace hedetniemi {

inline constexpr int kCertificateVersion = 1;

/// Self-contained record of a passing verification: parameters, G's hash
/// and counts, the wide coloring, every H vertex with its table, H's edges,
/// the edge-critical subgraph with its witnesses when one was computed, and
/// the search verdicts with their budgets. Tables are strings of color digits.
/// Throws InvalidArgument unless the report passed and carries its instance.
Json emit_certificate(const Report& report);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> failures;
  /// Claims taken on trust (search verdicts), reported alongside.
  std::vector<std::string> trusted;
};

/// Re-verifies every embedded witness without searching: rebuilds G and
/// compares the hash, checks wideness of gamma, re-derives each table from
/// its label, checks distinctness, recomputes H's edges and compares them
/// exactly, checks for loops, rescans the product coloring and the critical
/// subgraph's edge witnesses.
CertificateCheck check_certificate(const Json& cert);

}  // namespace hedetniemi
