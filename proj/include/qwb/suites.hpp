#ifndef QWB_SUITES_HPP
#define QWB_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qwb/presheaf.hpp"

namespace qwb {

struct LawResult {
  std::string law;
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;  // full witness dump of the first failing input
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;
  bool sampled = false;  // some law ran on generated witnesses, not exhaustively
  double seconds = 0;
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& l : laws)
      if (l.failed) return false;
    return true;
  }
};

struct SuiteOptions {
  std::uint64_t cap = kDefaultCap;
  int max_size = -1;    // override the default universe bound where meaningful
  bool sampled = false; // force sampled mode on the heavy laws
  unsigned seed = 0;    // seed for sampled mode
  std::string quantale; // override the default quantale where meaningful
};

/// The acceptance suites, in criterion order.
std::vector<std::string> suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

/// text: aligned human-readable block; machine: one `suite law checked failed`
/// line per law.
std::string format_report(const SuiteReport& r, bool machine);

}  // namespace qwb

#endif
