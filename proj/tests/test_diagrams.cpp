#include "diagrams.hpp"

#include <doctest.h>

#include <set>
#include <string>

using diagrams::Element;
using diagrams::Graph;
using diagrams::SpaceBasis;
using exact::Rat;

namespace {

const SpaceBasis& one_color() {
    static SpaceBasis b = SpaceBasis::build(1, 5);
    return b;
}

const SpaceBasis& two_color() {
    static SpaceBasis b = SpaceBasis::build(2, 5);
    return b;
}

const SpaceBasis& closed4() {
    static SpaceBasis b = SpaceBasis::build(0, 4);
    return b;
}

diagrams::QuadraticForm self_form(int color, const Rat& coef) {
    diagrams::QuadraticForm q;
    q.add(color, color, coef);
    return q;
}

}  // namespace

TEST_CASE("modified bernoulli coefficients") {
    auto b = diagrams::modified_bernoulli(5);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Rat(1, 48));
    CHECK(b[1] == Rat(-1, 5760));
    auto b6 = diagrams::modified_bernoulli(6);
    REQUIRE(b6.size() == 3);
    CHECK(b6[0] == Rat(1, 48));
    CHECK(b6[1] == Rat(-1, 5760));
}

TEST_CASE("canonical forms: basic sanity") {
    const auto& b = one_color();
    Element th = diagrams::theta_element(b);
    REQUIRE(th.terms().size() == 1);

    // Swapping two slots at one vertex is an odd rearrangement.
    Graph tw;
    tw.add_vertex();
    tw.add_vertex();
    tw.connect(0, 0, 1, 0);
    tw.connect(0, 1, 1, 1);
    tw.connect(0, 2, 1, 2);
    CHECK(diagrams::reduce(tw, b) == th * Rat(-1));

    // Rebuilding a canonical representative is exactly idempotent.
    for (int id : b.basis_class_ids()) {
        const auto& cls = b.classes()[id];
        diagrams::Canonical c = diagrams::canonicalize(cls.rep);
        REQUIRE(!c.zero);
        CHECK(c.sign == 1);
        REQUIRE(c.component_keys.size() == 1);
        CHECK(c.component_keys[0] == cls.key);
    }
}

TEST_CASE("degenerate diagrams vanish") {
    const auto& b = one_color();

    // Self loop.
    Graph loop;
    loop.add_vertex();
    loop.add_vertex();
    loop.connect(0, 0, 0, 1);  // loop at vertex 0
    loop.connect(0, 2, 1, 0);
    loop.set_leg(1, 1, 0);
    loop.set_leg(1, 2, 0);
    CHECK(diagrams::reduce(loop, b).is_zero());

    // Two same-colored legs at one vertex.
    Graph caterpillar;
    caterpillar.add_vertex();
    caterpillar.add_vertex();
    caterpillar.connect(0, 0, 1, 0);
    caterpillar.set_leg(0, 1, 0);
    caterpillar.set_leg(0, 2, 0);
    caterpillar.set_leg(1, 1, 0);
    caterpillar.set_leg(1, 2, 0);
    CHECK(diagrams::reduce(caterpillar, b).is_zero());

    // Odd wheels die by antisymmetry.
    CHECK(diagrams::wheel_element(b, 3, 0).is_zero());
    CHECK(diagrams::wheel_element(b, 5, 0).is_zero());

    // Degree above the cap is silently dropped.
    CHECK(diagrams::wheel_element(b, 6, 0).is_zero());
}

TEST_CASE("closed space dimensions through degree four") {
    auto dims = closed4().graded_dimensions();
    REQUIRE(dims.size() == 5);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 1);
    CHECK(dims[3] == 0);
    CHECK(dims[4] == 2);
}

TEST_CASE("single-color strutless basis through degree five") {
    const auto& b = one_color();
    std::set<std::string> names;
    for (int id : b.basis_class_ids()) names.insert(b.classes()[id].name);
    CHECK(names == std::set<std::string>{"theta", "w2[0]", "theta2", "t1[0]", "w4[0]"});

    auto dims = b.graded_dimensions();
    REQUIRE(dims.size() == 6);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 2);
    CHECK(dims[3] == 0);
    CHECK(dims[4] == 6);
    CHECK(dims[5] == 0);
}

TEST_CASE("tetrahedron reduces to half the bubble") {
    const auto& b = one_color();
    CHECK(diagrams::tetrahedron_element(b) ==
          diagrams::theta_bubble_element(b) * Rat(1, 2));
}

TEST_CASE("two-wheel pairing gives twice the bubble") {
    const auto& b = one_color();
    Element w2 = diagrams::wheel_element(b, 2, 0);
    Element got = diagrams::pair_elements(w2, w2, {0});
    CHECK(got == diagrams::theta_bubble_element(b) * Rat(2));
}

TEST_CASE("pairing with mismatched leg counts vanishes") {
    const auto& b = one_color();
    Element th = diagrams::theta_element(b);
    Element w2 = diagrams::wheel_element(b, 2, 0);
    CHECK(diagrams::pair_elements(th, w2, {0}).is_zero());
}

TEST_CASE("gaussian on a two-wheel closes it into theta") {
    const auto& b = one_color();
    Element w2 = diagrams::wheel_element(b, 2, 0);
    for (Rat alpha : {Rat(1), Rat(-2), Rat(3, 7)}) {
        Element got = diagrams::apply_gaussian(self_form(0, alpha / 2), w2);
        Element want = w2 + diagrams::theta_element(b) * alpha;
        CHECK(got == want);
    }
}

TEST_CASE("closing the two-legged theta gives the bubble") {
    const auto& b = one_color();
    Element t1 = diagrams::two_leg_theta_element(b, 0);
    Element got = diagrams::apply_gaussian(self_form(0, Rat(1, 2)), t1);
    CHECK(got == t1 + diagrams::theta_bubble_element(b));
}

TEST_CASE("perfect closures of the four-wheel and the two-wheel square") {
    const auto& b = one_color();
    Element w4 = diagrams::wheel_element(b, 4, 0);
    Element closedw4 = diagrams::apply_gaussian(self_form(0, Rat(1, 2)), w4);
    CHECK(diagrams::coefficient_of(closedw4, diagrams::theta_bubble_element(b)) ==
          Rat(5, 2));

    Element w2 = diagrams::wheel_element(b, 2, 0);
    Element sq = diagrams::product(w2, w2);
    Element closedsq = diagrams::apply_gaussian(self_form(0, Rat(1, 2)), sq);
    Element th = diagrams::theta_element(b);
    CHECK(diagrams::coefficient_of(closedsq, diagrams::product(th, th)) == 1);
    CHECK(diagrams::coefficient_of(closedsq, diagrams::theta_bubble_element(b)) == 2);
}

TEST_CASE("big omega expansion at cap five") {
    const auto& b = one_color();
    Element w2 = diagrams::wheel_element(b, 2, 0);
    Element w4 = diagrams::wheel_element(b, 4, 0);
    Element want = diagrams::unit(b) + w2 * Rat(1, 48) +
                   diagrams::product(w2, w2) * Rat(1, 4608) + w4 * Rat(-1, 5760);
    CHECK(diagrams::omega_big(b, 0) == want);
}

TEST_CASE("small omega and its inverse") {
    const auto& b = one_color();
    Element om = diagrams::omega_small(b);
    Element want = diagrams::unit(b) + diagrams::theta_bubble_element(b) * Rat(1, 1152);
    CHECK(om == want);
    CHECK(diagrams::product(diagrams::omega_small_inverse(b), om) == diagrams::unit(b));
}

TEST_CASE("gaussian exponential identity on big omega") {
    const auto& b = one_color();
    Element om = diagrams::omega_big(b, 0);
    Element th = diagrams::theta_element(b);
    for (Rat alpha : {Rat(1), Rat(-1), Rat(1, 2), Rat(3), Rat(-5, 7)}) {
        Element lhs = diagrams::apply_gaussian(self_form(0, alpha / 2), om);
        Element rhs = diagrams::product(diagrams::exp_element(th * (alpha / 48)), om);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("relabeling scales by one factor per leg") {
    const auto& b = two_color();
    Element w2k1 = diagrams::wheel_element(b, 2, 0);
    Element w2k2 = diagrams::wheel_element(b, 2, 1);
    Rat r(-3, 5);
    CHECK(diagrams::relabel_scale(w2k1, 0, 1, r) == w2k2 * (r * r));
    // Unaffected colors pass through.
    CHECK(diagrams::relabel_scale(w2k2, 0, 1, r) == w2k2);
}

TEST_CASE("two-color space embeds the single-color facts") {
    const auto& b = two_color();
    CHECK(diagrams::tetrahedron_element(b) ==
          diagrams::theta_bubble_element(b) * Rat(1, 2));
    Element w21 = diagrams::wheel_element(b, 2, 1);
    CHECK(diagrams::pair_elements(w21, w21, {1}) ==
          diagrams::theta_bubble_element(b) * Rat(2));
    // Mixed-color wheel legs pair across colors only through shared colors.
    Element w20 = diagrams::wheel_element(b, 2, 0);
    CHECK(diagrams::pair_elements(w20, w21, {1}).is_zero());
}

TEST_CASE("exponential and inverse are mutually consistent") {
    const auto& b = one_color();
    Element th = diagrams::theta_element(b);
    Element e = diagrams::exp_element(th * Rat(1, 3));
    Element w = diagrams::unit(b) + th * Rat(1, 3) +
                diagrams::product(th, th) * Rat(1, 18);
    CHECK(e == w);
    CHECK(diagrams::product(diagrams::inverse_element(e), e) == diagrams::unit(b));
}

TEST_CASE("cap six space agrees through degree five") {
    SpaceBasis b6 = SpaceBasis::build(0, 6);
    auto dims = b6.graded_dimensions();
    REQUIRE(dims.size() == 7);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 1);
    CHECK(dims[3] == 0);
    CHECK(dims[4] == 2);
    CHECK(dims[5] == 0);
    CHECK(dims[6] >= 2);  // at least theta^3 and theta*bubble
}
