#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ratwitt {

// One deterministic fixture per acceptance criterion, shared by the
// acceptance binary and `ratwitt demo`.
struct FixtureReport {
  std::string name;
  int criterion = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per checked group
  double seconds = 0;
};

struct FixtureInfo {
  std::string name;
  int criterion;
  std::string title;
  FixtureReport (*run)();
};

const std::vector<FixtureInfo>& fixtures();
// Throws std::out_of_range for an unknown name.
FixtureReport run_fixture(std::string_view name);
// "[PASS] 4 kronecker-roundtrip: ..." followed by indented details.
std::string format_fixture_report(const FixtureReport& r, bool with_details = true);

}  // namespace ratwitt
