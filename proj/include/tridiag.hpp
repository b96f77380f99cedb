#pragma once

// Symmetric tridiagonal matrices with unit off-diagonal,
//
//   L(c_1, ..., c_l) = ( c_1  1            )
//                      ( 1    c_2  1       )
//                      (      ...          )
//                      (           1  c_l  ),
//
// their signatures, the three corner entries of their inverses, and the
// bracket identity tying 3*signature - trace to a Dedekind symbol.
//
// Everything is driven by the associated 2x2 matrix
//
//   A(c_1..c_l) = (0 -1; 1 0) (c_1 -1; 1 0) ... (c_l -1; 1 0) = (a b; g d):
//
//   - L is invertible iff g != 0, and the inverse's corner entries are
//     top-left -a/g, off-corner (-1)^(l+1)/g, bottom-right -d/g;
//   - the signature obeys zeta(c_1..c_l) = zeta(c_1..c_{l-1}) - sgn(g) sgn(d)
//     (and a mirrored left-peel recursion), with zeta(empty) = 0;
//   - for integer entries, 3 zeta - trace = S(a/g) - (a+d)/g when g != 0,
//     else -b/a.

#include "rational.hpp"

#include <utility>
#include <vector>

namespace tridiag {

using exact::Int;
using exact::Rat;

using Tridiagonal = std::vector<Rat>;  // the diagonal entries c_1..c_l

struct Mat2Q {
    Rat a11, a12, a21, a22;
    bool operator==(const Mat2Q& o) const {
        return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
    }
};

struct SingularMatrix : exact::ValidationError {
    SingularMatrix() : exact::ValidationError("matrix is singular") {}
};

inline Mat2Q mul(const Mat2Q& x, const Mat2Q& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

// A(c_1..c_l) as above; l >= 1 required.
Mat2Q associated_mat2(const Tridiagonal& c);

// Signature via the right-peel recursion (the left-peel variant is exposed
// for cross-checking; both equal the congruence-diagonalization oracle).
int signature_recursive(const Tridiagonal& c);
int signature_left_peel(const Tridiagonal& c);

// Ground truth: exact symmetric congruence diagonalization of the full
// matrix. Works for any exact symmetric matrix, singular or not.
int signature_oracle(const std::vector<std::vector<Rat>>& sym);

// Dense representation of L(c) (unit off-diagonal).
std::vector<std::vector<Rat>> dense_matrix(const Tridiagonal& c);

struct InverseCorners {
    Rat top_left;
    Rat off_corner;  // the (1,l) = (l,1) entry
    Rat bottom_right;
};

// Corner entries of L(c)^-1; throws SingularMatrix when L is singular.
InverseCorners inverse_corners(const Tridiagonal& c);

// Full exact inverse by Gauss-Jordan (oracle for inverse_corners); empty
// optional-style contract: throws SingularMatrix when singular.
std::vector<std::vector<Rat>> full_inverse(const std::vector<std::vector<Rat>>& m);

// For integer diagonals: returns the pair (3 zeta - trace, bracket) where
// bracket = S(a/g) - (a+d)/g for g != 0 and -b/a otherwise. The two are
// asserted equal (ConsistencyError otherwise).
std::pair<Rat, Rat> kirby_melvin(const std::vector<Int>& c);

}  // namespace tridiag
