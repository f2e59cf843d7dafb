// Standalone property suite.  Optional argument: RNG seed.

#include <cstdio>
#include <string>

#include "properties.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  bool ok = true;
  for (const auto& r : bw::props::all(seed)) {
    std::printf("[%s] %s\n", r.pass ? "PASS" : "FAIL", r.summary().c_str());
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
