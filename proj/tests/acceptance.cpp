#include <cstdio>
#include <cstdlib>
#include <string>

#include "symdiam/verify.hpp"

using namespace symdiam;

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  auto one = acceptance_report(seed, 1);
  auto eight = acceptance_report(seed, 8);
  int failed = 0;
  for (const auto& c : one["criteria"]) {
    bool ok = c["passed"].get<bool>();
    failed += !ok;
    std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", c["id"].get<int>(), c["title"].get<std::string>().c_str());
    if (!ok) std::printf("      %s\n", c["details"].dump().c_str());
  }
  bool same = one.dump(2) == eight.dump(2);
  failed += !same;
  std::printf("%s  12  determinism across worker counts (1 vs 8)\n", same ? "PASS" : "FAIL");
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed ? 1 : 0;
}
