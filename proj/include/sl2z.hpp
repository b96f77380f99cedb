#pragma once

// Integer 2x2 determinant-one matrices and their factorization into the
// one-parameter generators
//
//   generator(a) = ( a -1 )
//                  ( 1  0 )
//
// Every element of SL2(Z) is a finite product of these. decompose() produces
// one such word (words are not unique; only the round trip is contractual).
// splice_factorization(g) returns (a_1, ..., a_n) such that
//
//   g = ( 0 -1 ) ( a_n -1 ) ... ( a_1 -1 )
//       ( 1  0 ) (  1   0 )     (  1   0 )
//
// which is the ordering surgery presentations are read in.

#include "rational.hpp"

#include <vector>

namespace sl2z {

using exact::Int;

struct Mat2Z {
    Int a11, a12, a21, a22;

    Int det() const { return a11 * a22 - a12 * a21; }
    bool operator==(const Mat2Z& o) const {
        return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
    }
};

inline Mat2Z mul(const Mat2Z& x, const Mat2Z& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

inline Mat2Z identity() { return {1, 0, 0, 1}; }

inline Mat2Z generator(const Int& a) { return {a, -1, 1, 0}; }

// Left-to-right product generator(a_1) * generator(a_2) * ... * generator(a_k).
Mat2Z recompose(const std::vector<Int>& word);

// A word (length >= 1) with recompose(word) == m. Throws ValidationError if
// det(m) != 1.
std::vector<Int> decompose(const Mat2Z& m);

// The reading (a_1, ..., a_n) described above; n >= 1.
std::vector<Int> splice_factorization(const Mat2Z& g);

}  // namespace sl2z
