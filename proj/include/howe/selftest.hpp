#pragma once

#include <optional>
#include <string>
#include <vector>

#include "howe/kudla.hpp"
#include "howe/segments.hpp"

namespace howe {

// Enumeration bounds for the selftest suites. Each suite additionally caps
// its parameters at the ranges its statement is pinned to, so larger bounds
// never weaken a suite, only extend it.
struct SelftestBounds {
  long long max_n = 3;   // largest group size enumerated
  Rat window = Rat(2);   // coordinates range over [-window, window], step 1/2
  long long max_gap = 2; // largest m - n
  int jobs = 1;          // worker threads for the enumeration suites
};

// Test fixture: corrupt one stored xi-table entry so the reconstruction
// suite must fail and name the offending factor.
struct XiCorruption {
  long long n = 0, m = 0, t = 0, i = 0;
  Side side = Side::left;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  long long cases = 0;
  long long failures = 0;
  std::string first_counterexample;  // empty when passed
  std::string notes;                 // informational counts
  double seconds = 0.0;
};

std::vector<SuiteResult> run_selftest(const SelftestBounds& bounds,
                                      const XiCorruption* corrupt = nullptr);

std::string format_suite_line(const SuiteResult& r, int index, int total);

}  // namespace howe
