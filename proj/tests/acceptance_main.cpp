// Acceptance battery: one pass/fail line per criterion, exit status is the
// conjunction. Identical to `degmat suite`, packaged as a ctest target.

#include <cstdio>
#include <cstring>

#include "degmat/acceptance.hpp"

int main(int argc, char** argv) {
  degmat::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) opts.jobs = std::atoi(argv[++i]);
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      for (const char* p = argv[++i]; *p;) {
        opts.only.insert(std::atoi(p));
        while (*p && *p != ',') ++p;
        if (*p == ',') ++p;
      }
    }
  }
  opts.on_result = [](const degmat::CriterionResult& r) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
    if (!r.note.empty()) std::printf("       note: %s\n", r.note.c_str());
    std::fflush(stdout);
  };
  auto results = degmat::run_acceptance(opts);
  bool ok = degmat::all_passed(results);
  std::printf("%s: %zu criteria\n", ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              results.size());
  return ok ? 0 : 1;
}
