#pragma once

// Splicing two framed knot exteriors along their boundary tori and computing
// the low-degree part of the resulting manifold's invariant.
//
// The gluing is encoded by the integer matrix (p r; q s) with ps - qr = 1.
// Knots enter either as closed-form records (null-homologous, preferred
// parallel) or as raw truncated diagram elements (arbitrary framing).
//
// Two evaluation pathways exist on purpose and are checked against each
// other: closed rational formulas (casson_walker, lambda2_splice, lens) and
// the symbolic pipeline through the diagram algebra (splice_lmo_truncated,
// splice_lmo_general).

#include <optional>
#include <utility>
#include <vector>

#include "diagrams.hpp"
#include "rational.hpp"
#include "sl2z.hpp"
#include "tridiag.hpp"

namespace splice {

using exact::Int;
using exact::Rat;

// Self-linking number u/v of a framed knot, in lowest terms with v > 0.
// Construction normalizes; a zero denominator is rejected.
struct FramingFraction {
    Int u{0};
    Int v{1};

    FramingFraction() = default;
    FramingFraction(Int u_, Int v_);

    Rat value() const { return Rat(u, v); }
    bool is_null() const { return u == 0 && v == 1; }
};

// Low-degree input data for one spliced knot: the ambient manifold's two
// invariants, the Conway coefficients a2, a4 of the knot, the coefficient of
// the two-legged theta in its invariant, and its framing.
struct KnotRecord {
    Rat ambient_lambda_w{0};
    Rat ambient_lambda2{0};
    Rat a2{0};
    Rat a4{0};
    Rat v_coeff{0};
    FramingFraction framing{};
};

// The gluing homeomorphism in homology: acts as the matrix (p r; q s),
// determinant ps - qr = 1 (validated).
struct GluingMatrix {
    Int p, q, r, s;

    GluingMatrix(Int p_, Int q_, Int r_, Int s_);
    sl2z::Mat2Z mat() const { return {p, r, q, s}; }
};

struct SpliceResult {
    Rat lambda_w{0};
    Rat lambda2{0};
    std::optional<diagrams::Element> raw;  // the truncated manifold invariant
};

// Leg colors used for the two knots throughout this module.
inline constexpr int kColor1 = 0;
inline constexpr int kColor2 = 1;

// Process-wide cache of quotient spaces (building one is expensive).
const diagrams::SpaceBasis& shared_basis(int ncolors, int cap);

// lambda = q u1 u2 + r v1 v2 + s u2 v1 + p v2 u1. The splice is a rational
// homology sphere iff lambda != 0.
std::pair<bool, Rat> is_qhs(const GluingMatrix& g, const FramingFraction& f1,
                            const FramingFraction& f2);

// Surgery presentation of the splice: coefficients a_1..a_n of the chain of
// Hopf links, with g = S G(a_n) ... G(a_1), plus the parity of n (the two
// clasp pictures differ by it).
struct HopfChain {
    std::vector<Int> chain;
    int parity;  // n mod 2
};
HopfChain hopf_chain(const GluingMatrix& g);

// Diagonal (u1/v1, a_1, ..., a_n, u2/v2) of the surgery linking matrix; the
// off-diagonal entries are all 1. Its associated 2x2 matrix has bottom-left
// entry lambda/(v1 v2).
tridiag::Tridiagonal linking_matrix(const GluingMatrix& g, const FramingFraction& f1,
                                    const FramingFraction& f2);

// The exponent entering the general splice formula. Computed by three
// independent routes (branch formula in tau_1, its tau_2 variant, and
// 3*signature - trace of the linking matrix) which are asserted to agree.
Rat kappa(const GluingMatrix& g, const FramingFraction& f1, const FramingFraction& f2);

// Closed formula for the degree-2 invariant of the splice. Requires r != 0
// and null framings on both records.
Rat casson_walker(const GluingMatrix& g, const KnotRecord& k1, const KnotRecord& k2);

// Closed formula for the degree-4 invariant of the splice (same domain).
Rat lambda2_splice(const GluingMatrix& g, const KnotRecord& k1, const KnotRecord& k2);

// The truncated wheeled invariant of a null-homologous knot with preferred
// parallel, expanded from its record over the given space (cap >= 4); its
// legs carry the given color.
diagrams::Element wheeled_invariant(const KnotRecord& k, const diagrams::SpaceBasis& b,
                                    int color);

// A strutless element together with the quadratic form holding its strut
// part; struts never enter the quotient space.
struct FramedElement {
    diagrams::Element element;
    diagrams::QuadraticForm form;
};

// Removes a framing of self-linking phi from a strutless element: multiplies
// by exp((phi/48) theta) and records the form -(phi/2)(color, color).
FramedElement unwheel_frame(const diagrams::Element& e, const Rat& phi, int color);

// Reads (lambda_w, lambda2) off a closed element with unit empty-diagram
// coefficient; checks the theta^2 coefficient equals lambda_w^2 / 32.
std::pair<Rat, Rat> extract_invariants(const diagrams::Element& z);

// Symbolic splice of two record knots (null framings, r != 0): evaluates the
// invariant of the glued manifold through the diagram algebra and extracts
// both invariants. 4 <= cap <= 5.
SpliceResult splice_lmo_truncated(const GluingMatrix& g, const KnotRecord& k1,
                                  const KnotRecord& k2, int cap = 5);

// Symbolic splice for arbitrary framings: z1bar, z2bar are the strutless
// unframed wheeled invariants (legs colored kColor1 resp. kColor2) over a
// shared space whose cap must equal the cap argument.
diagrams::Element splice_lmo_general(const GluingMatrix& g, const FramingFraction& f1,
                                     const FramingFraction& f2,
                                     const diagrams::Element& z1bar,
                                     const diagrams::Element& z2bar, int cap = 5);

// Surgery on one record knot with coefficient r/s (both nonzero, coprime):
// splices the unknot onto it with auxiliary (p, q), ps - qr = 1, and asserts
// the result does not depend on that choice.
SpliceResult rational_surgery(const KnotRecord& k, const Int& r, const Int& s);

// The lens space built by r/s-surgery on the unknot (r != 0, gcd(r,s) = 1):
// engine evaluation, asserted against the closed forms
// lambda_w = -S(s/r)/12 and lambda2 = (1/1152)(1/r^2 - 1).
SpliceResult lens(const Int& r, const Int& s);

}  // namespace splice
