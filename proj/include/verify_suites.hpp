#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-contained property suites over the whole library. Each suite runs a
// family of exact identities and reports how many cases were checked and how
// many failed; a suite never throws on a mathematical failure, it counts it.
// All randomness comes from a seeded mt19937_64, so equal seeds give equal
// runs on every platform.
namespace verify {

struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    bool passed() const { return failures == 0; }
};

// Dedekind reciprocity over every coprime pair 1 <= p <= q <= bound, in all
// four sign combinations; the positive base case is evaluated by the naive
// sum and cross-checked against the logarithmic-descent evaluation.
SuiteResult reciprocity(int bound = 200);

// Signature recursions (right-recursion and left-peel) against the
// congruence-diagonalization oracle; roughly a tenth of the cases are forced
// to be singular.
SuiteResult signature_recursions(long cases = 10000, std::uint64_t seed = 1);

// Inverse corner formulas against the fully inverted matrix, and the
// "singular exactly when the corner denominator vanishes" dichotomy.
SuiteResult inverse_corners(long cases = 10000, std::uint64_t seed = 1);

// The 3*signature - trace identity against the arithmetic bracket, on an
// exhaustive small corpus (length <= 6, |entries| <= 3) plus random longer
// chains.
SuiteResult kirby_melvin(long random_cases = 10000, std::uint64_t seed = 1);

// decompose/recompose round trips and the fixed-convention factorization.
SuiteResult sl2_roundtrip(long cases = 10000, std::uint64_t seed = 1);

// Graded dimensions of the closed diagram space and the one-color class list.
SuiteResult diagram_dims();

// The Gaussian differential identity on the wheel exponential, for several
// rational strut coefficients.
SuiteResult d_omega();

// The symbolic splice evaluation against the closed Casson-Walker formula.
SuiteResult fujita_consistency(long cases = 200, std::uint64_t seed = 1);

// The symbolic splice evaluation against the closed degree-4 formula, on the
// same corpus shape as fujita_consistency.
SuiteResult lambda2_consistency(long cases = 200, std::uint64_t seed = 1);

// Agreement of the three kappa evaluation routes on random framed gluings,
// plus the closed null-framing expression.
SuiteResult kappa_threeway(long cases = 500, std::uint64_t seed = 1);

// Additivity of lambda_w and the (1/8) * d1'' * d2'' defect of lambda2 under
// the standard splice, swept over record values.
SuiteResult standard_splice_identities();

// Lens space invariants by closed form and by the symbolic engine, for
// 1 <= r <= max_r and a sample of legal s.
SuiteResult lens_family(int max_r = 50);

// Independence of rational surgery from the auxiliary matrix completion.
SuiteResult surgery_independence(long cases = 100, std::uint64_t seed = 1);

// Runs the suites named by `selector` ("all" or one of: reciprocity,
// signatures, kirby-melvin, sl2-roundtrip, diagram-dims, d-omega,
// fujita-consistency, lambda2-consistency, kappa-threeway) at their default
// sizes. Unknown selectors raise ValidationError.
std::vector<SuiteResult> run_suites(const std::string& selector, std::uint64_t seed = 1);

}  // namespace verify
