#include "sl2z.hpp"

#include <doctest.h>

#include <random>

using exact::Int;
using sl2z::Mat2Z;

namespace {

Mat2Z random_word_product(std::mt19937_64& rng, int max_len, int max_abs,
                          std::vector<Int>* word_out = nullptr) {
    int len = 1 + (int)(rng() % max_len);
    std::vector<Int> word;
    for (int i = 0; i < len; ++i)
        word.push_back(Int((long long)(rng() % (2 * max_abs + 1)) - max_abs));
    if (word_out) *word_out = word;
    return sl2z::recompose(word);
}

}  // namespace

TEST_CASE("generator and small products") {
    Mat2Z s = sl2z::generator(0);
    CHECK(s == (Mat2Z{0, -1, 1, 0}));
    CHECK(sl2z::recompose({0, 0}) == (Mat2Z{-1, 0, 0, -1}));
    CHECK(sl2z::recompose({0, -1, -1}) == (Mat2Z{1, 1, 0, 1}));
    CHECK(sl2z::generator(3).det() == 1);
}

TEST_CASE("decompose round trips on corner cases") {
    std::vector<Mat2Z> cases = {
        sl2z::identity(),
        {-1, 0, 0, -1},
        {0, -1, 1, 0},
        {0, 1, -1, 0},
        {1, 5, 0, 1},
        {1, 0, -7, 1},
        {-1, 3, 0, -1},
        {2, 1, 1, 1},
        {-3, -1, 7, 2},
    };
    for (const Mat2Z& m : cases) {
        auto word = sl2z::decompose(m);
        CHECK(word.size() >= 1);
        CHECK(sl2z::recompose(word) == m);
    }
    CHECK(sl2z::decompose(sl2z::identity()) == std::vector<Int>{0, 0, 0, 0});
}

TEST_CASE("decompose rejects determinant != 1") {
    CHECK_THROWS_AS(sl2z::decompose(Mat2Z{1, 0, 0, -1}), exact::ValidationError);
    CHECK_THROWS_AS(sl2z::decompose(Mat2Z{2, 0, 0, 2}), exact::ValidationError);
}

TEST_CASE("decompose round trips on random words") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Mat2Z m = random_word_product(rng, 10, 5);
        auto word = sl2z::decompose(m);
        CHECK(sl2z::recompose(word) == m);
    }
}

TEST_CASE("splice factorization reads right to left after a fixed left factor") {
    std::mt19937_64 rng(13);
    const Mat2Z s = sl2z::generator(0);
    for (int i = 0; i < 300; ++i) {
        Mat2Z g = random_word_product(rng, 8, 4);
        auto a = sl2z::splice_factorization(g);
        REQUIRE(a.size() >= 1);
        Mat2Z prod = s;
        for (size_t j = a.size(); j-- > 0;) prod = sl2z::mul(prod, sl2z::generator(a[j]));
        CHECK(prod == g);
    }
}
