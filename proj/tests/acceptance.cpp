// Acceptance gate: one line per criterion, all exact identities. The binary
// exits nonzero if any criterion fails, but always runs the whole list.

#include <chrono>
#include <cstdio>
#include <string>

#include "verify_suites.hpp"

namespace {

int g_failed = 0;
int g_number = 0;

void criterion(const std::string& label, const verify::SuiteResult& r) {
    ++g_number;
    if (r.failures == 0) {
        std::printf("[PASS] %2d. %s (%ld cases)\n", g_number, label.c_str(), r.cases);
    } else {
        std::printf("[FAIL] %2d. %s (%ld of %ld cases failed)\n", g_number, label.c_str(),
                    r.failures, r.cases);
        ++g_failed;
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    const std::uint64_t seed = 1;
    auto t0 = std::chrono::steady_clock::now();

    criterion("Dedekind reciprocity, all coprime pairs up to 200", verify::reciprocity(200));
    criterion("3*signature - trace equals the arithmetic bracket",
              verify::kirby_melvin(10000, seed));
    criterion("signature recursions match the diagonalization oracle",
              verify::signature_recursions(10000, seed));
    criterion("inverse corner formulas match the full inverse",
              verify::inverse_corners(10000, seed));
    criterion("SL2(Z) factorization round trip and convention",
              verify::sl2_roundtrip(10000, seed));
    criterion("diagram space dimensions and the one-color class list",
              verify::diagram_dims());
    criterion("wheel exponential differential identity", verify::d_omega());
    criterion("symbolic splice reproduces the closed Casson-Walker formula",
              verify::fujita_consistency(200, seed));
    criterion("symbolic splice reproduces the closed degree-4 formula",
              verify::lambda2_consistency(200, seed));
    criterion("standard splice: additivity and the pairing defect",
              verify::standard_splice_identities());
    criterion("lens spaces by closed form and by the engine", verify::lens_family(50));
    criterion("kappa: three evaluation routes and the null-framed form",
              verify::kappa_threeway(500, seed));
    criterion("rational surgery is independent of the auxiliary choice",
              verify::surgery_independence(100, seed));

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%d/%d criteria passed in %.1f s\n", g_number - g_failed, g_number,
                dt / 1000.0);
    return g_failed == 0 ? 0 : 1;
}
