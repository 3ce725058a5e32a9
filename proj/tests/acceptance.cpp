// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "geodom/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = geodom::acceptance::kDefaultSeed;
    if (argc > 1) seed = std::stoull(argv[1]);
    auto report = geodom::acceptance::run_all(seed);
    for (const auto& r : report.results)
        std::printf("%s criterion %d (%s): %s [%.1f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    return report.all_pass() ? EXIT_SUCCESS : EXIT_FAILURE;
}
