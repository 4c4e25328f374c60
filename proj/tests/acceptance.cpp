// Acceptance gate: runs every law suite and prints one verdict line per
// criterion. Exit status is nonzero iff any law fails.
#include <chrono>
#include <cstdio>

#include "qwb/suites.hpp"

int main() {
  const std::vector<std::string> names = qwb::suite_names();
  bool all_ok = true;
  for (size_t i = 0; i < names.size(); ++i) {
    qwb::SuiteReport r;
    bool ok = false;
    std::string note;
    try {
      r = qwb::run_suite(names[i], {});
      ok = r.ok();
      long long checked = 0;
      for (const auto& l : r.laws) checked += l.checked;
      note = std::to_string(checked) + " checks, " + std::to_string(r.seconds) + "s" +
             (r.sampled ? ", sampled" : "");
      if (!ok)
        for (const auto& l : r.laws)
          if (l.failed) {
            note += "; FIRST FAILURE in " + l.law + ":\n" + l.first_failure;
            break;
          }
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu %-13s %s (%s)\n", i + 1, names[i].c_str(),
                ok ? "PASS" : "FAIL", note.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
