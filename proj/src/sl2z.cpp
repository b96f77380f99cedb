#include "sl2z.hpp"

#include <algorithm>

namespace sl2z {

using exact::floor_div;

Mat2Z recompose(const std::vector<Int>& word) {
    Mat2Z acc = identity();
    for (const Int& a : word) acc = mul(acc, generator(a));
    return acc;
}

std::vector<Int> decompose(const Mat2Z& m) {
    if (m.det() != 1) throw exact::ValidationError("decompose: determinant must be 1");

    // Peel generators off the left: generator(a)^-1 = (0 1 / -1 a), and with
    // a = floor(a11 / a21) the bottom-left entry strictly shrinks (Euclid).
    std::vector<Int> word;
    Mat2Z cur = m;
    while (cur.a21 != 0) {
        Int a = floor_div(cur.a11, cur.a21);
        word.push_back(a);
        cur = mul(Mat2Z{0, 1, -1, a}, cur);
    }

    // cur is now +-(1 b / 0 1). Rewrite with S = generator(0), S^2 = -I:
    //   T^b = S^2 generator(b) S  and  -T^b = generator(b) S.
    Int b = cur.a12 * cur.a11;  // upper entry of the T power
    if (cur.a11 == 1) {
        word.push_back(0);
        word.push_back(0);
    }
    word.push_back(b);
    word.push_back(0);
    return word;
}

std::vector<Int> splice_factorization(const Mat2Z& g) {
    // g = S * generator(a_n) * ... * generator(a_1) with S = generator(0), so
    // decompose S^-1 g = generator(a_n) ... generator(a_1) and reverse.
    const Mat2Z s_inv{0, 1, -1, 0};
    std::vector<Int> word = decompose(mul(s_inv, g));
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace sl2z
