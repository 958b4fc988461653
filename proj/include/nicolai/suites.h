#pragma once

// Exact verification suites driven by `nicolai verify`.

#include <filesystem>
#include <string>
#include <vector>

#include "nicolai/model.h"

namespace nicolai {

struct CheckResult {
  std::string identity;
  std::string scope;
  bool passed;
  std::string detail;
};

/// Sum of the explicit per-site Hamiltonian terms matching the supercharge
/// Q[first..last]: diagonal terms for every index, hopping terms between
/// consecutive indices.
OperatorSum explicit_hamiltonian(int first, int last);

/// Superalgebra identities for interval (0, n), both edge modes where defined.
std::vector<CheckResult> verify_algebra_suite(int n);
/// Hidden charges: every f in the union over sub-intervals of (0, n).
std::vector<CheckResult> verify_charges_suite(int n);
/// Classical open-edge SUSY vectors versus Upsilon-hat(0, n), exhaustively.
std::vector<CheckResult> verify_classification_suite(int n);
/// Transcribed tables reproduced by enumeration, as sets.
std::vector<CheckResult> verify_fixtures_suite(const std::filesystem::path& dir);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace nicolai
