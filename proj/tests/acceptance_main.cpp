// Acceptance gate: one line per criterion, exit 0 only when every criterion
// holds at its pinned tolerance.
#include <cstdio>
#include <cstring>

#include "hermsym/verify.hpp"

int main(int argc, char** argv) {
  hermsym::VerifyOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::atoll(argv[++i]);
  }
  std::vector<hermsym::CheckResult> results = hermsym::acceptance_criteria(opt);
  bool all = true;
  for (const hermsym::CheckResult& r : results) {
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return all ? 0 : 1;
}
