#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/hit_quotient.hpp"

namespace hitcalc {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct SuiteOptions {
  // Directory holding the published admissible-monomial lists.
  std::string data_dir;
  std::function<void(const CheckResult&)> on_check;
};

/// Runs "quick", "paper" or "extended". Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(std::string_view suite, HitEngine& engine, const SuiteOptions& options = {});

/// Reads one exponent tuple per line; blank lines and '#' comments are skipped.
std::vector<Monomial> read_monomial_list(const std::string& path);

struct PublishedList {
  std::string file;
  std::uint64_t degree;
  WeightVector weight;
  SupportPart part;
};

/// The admissible-monomial tables shipped under tests/data.
const std::vector<PublishedList>& published_lists();

/// The six published sums spanning the symmetric-group invariants of the
/// degree 14 component of weight (2,2,2), as 1-based indices into
/// deg14_w222.txt.
std::vector<std::vector<std::size_t>> symmetric_invariant_sums_deg14();

/// The GL5-invariant element of that component as printed (index 115 twice).
std::vector<std::size_t> printed_zeta_indices();

}  // namespace hitcalc
