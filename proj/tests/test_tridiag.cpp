#include "tridiag.hpp"

#include <doctest.h>

#include <random>

using exact::Int;
using exact::Rat;
using tridiag::Mat2Q;
using tridiag::Tridiagonal;

namespace {

Tridiagonal random_diag(std::mt19937_64& rng, int max_len, bool allow_zero) {
    int len = 1 + (int)(rng() % max_len);
    Tridiagonal c;
    for (int i = 0; i < len; ++i) {
        long long num = (long long)(rng() % 19) - 9;
        long long den = 1 + (long long)(rng() % 9);
        if (!allow_zero && num == 0) num = 1;
        c.push_back(Rat(num, den));
    }
    return c;
}

}  // namespace

TEST_CASE("associated matrix examples") {
    CHECK(tridiag::associated_mat2({Rat(0)}) == (Mat2Q{-1, 0, 0, -1}));
    CHECK(tridiag::associated_mat2({Rat(1)}) == (Mat2Q{-1, 0, 1, -1}));
    CHECK(tridiag::associated_mat2({Rat(2), Rat(2)}) == (Mat2Q{-2, 1, 3, -2}));
    // Determinant one regardless of the entries.
    Mat2Q a = tridiag::associated_mat2({Rat(3, 2), Rat(-1, 5), Rat(7)});
    CHECK(a.a11 * a.a22 - a.a12 * a.a21 == 1);
}

TEST_CASE("signature examples") {
    CHECK(tridiag::signature_recursive({Rat(0)}) == 0);
    CHECK(tridiag::signature_recursive({Rat(1)}) == 1);
    CHECK(tridiag::signature_recursive({Rat(-3)}) == -1);
    CHECK(tridiag::signature_recursive({Rat(2), Rat(2)}) == 2);
    CHECK(tridiag::signature_recursive({Rat(0), Rat(0)}) == 0);
}

TEST_CASE("both peel directions match the congruence oracle") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 600; ++i) {
        Tridiagonal c = random_diag(rng, 10, true);
        int oracle = tridiag::signature_oracle(tridiag::dense_matrix(c));
        CHECK(tridiag::signature_recursive(c) == oracle);
        CHECK(tridiag::signature_left_peel(c) == oracle);
    }
}

TEST_CASE("congruence oracle on handwritten matrices") {
    // Hyperbolic block.
    CHECK(tridiag::signature_oracle({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == 0);
    // Zero matrix.
    CHECK(tridiag::signature_oracle({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == 0);
    // Diagonal.
    CHECK(tridiag::signature_oracle({{Rat(2), Rat(0)}, {Rat(0), Rat(-5)}}) == 0);
    CHECK(tridiag::signature_oracle({{Rat(1, 2)}}) == 1);
}

TEST_CASE("inverse corners examples") {
    auto c22 = tridiag::inverse_corners({Rat(2), Rat(2)});
    CHECK(c22.top_left == Rat(2, 3));
    CHECK(c22.off_corner == Rat(-1, 3));
    CHECK(c22.bottom_right == Rat(2, 3));

    auto c1 = tridiag::inverse_corners({Rat(1)});
    CHECK(c1.top_left == 1);
    CHECK(c1.off_corner == 1);
    CHECK(c1.bottom_right == 1);

    CHECK_THROWS_AS(tridiag::inverse_corners({Rat(0)}), tridiag::SingularMatrix);
}

TEST_CASE("inverse corners against the full inverse") {
    std::mt19937_64 rng(19);
    int singular_seen = 0;
    for (int i = 0; i < 400; ++i) {
        Tridiagonal c = random_diag(rng, 9, true);
        if (i % 4 == 0) {
            // Force a singular case: appending c = -d/g zeroes the next
            // bottom-left entry whenever g != 0.
            Mat2Q pre = tridiag::associated_mat2(c);
            if (pre.a21 != 0) c.push_back(-pre.a22 / pre.a21);
        }
        Mat2Q a = tridiag::associated_mat2(c);
        auto dense = tridiag::dense_matrix(c);
        if (a.a21 == 0) {
            ++singular_seen;
            CHECK_THROWS_AS(tridiag::inverse_corners(c), tridiag::SingularMatrix);
            CHECK_THROWS_AS(tridiag::full_inverse(dense), tridiag::SingularMatrix);
            continue;
        }
        auto corners = tridiag::inverse_corners(c);
        auto inv = tridiag::full_inverse(dense);
        size_t l = c.size();
        CHECK(corners.top_left == inv[0][0]);
        CHECK(corners.off_corner == inv[0][l - 1]);
        CHECK(corners.bottom_right == inv[l - 1][l - 1]);
    }
    // The sweep must have hit at least one singular case to mean anything.
    CHECK(singular_seen > 0);
}

TEST_CASE("kirby-melvin bracket examples") {
    auto r1 = tridiag::kirby_melvin({Int(1)});
    CHECK(r1.first == 2);
    CHECK(r1.second == 2);
    auto r22 = tridiag::kirby_melvin({Int(2), Int(2)});
    CHECK(r22.first == 2);
    CHECK(r22.second == 2);
    auto r0 = tridiag::kirby_melvin({Int(0)});
    CHECK(r0.first == 0);
    CHECK(r0.second == 0);
}

TEST_CASE("kirby-melvin bracket on random integer words") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 400; ++i) {
        int len = 1 + (int)(rng() % 7);
        std::vector<Int> c;
        for (int j = 0; j < len; ++j) c.push_back(Int((long long)(rng() % 13) - 6));
        auto r = tridiag::kirby_melvin(c);  // throws ConsistencyError on mismatch
        CHECK(r.first == r.second);
    }
}
