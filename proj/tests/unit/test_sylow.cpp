#include <doctest.h>

#include "h3avg/sylow.hpp"

using namespace h3avg;

TEST_CASE("orbit counting") {
    CHECK(orb_count(Perm(4)) == 4);
    CHECK(orb_count(Perm::from_cycles(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(orb_count(Perm::from_cycles(5, {{0, 1, 2, 3, 4}})) == 1);
}

TEST_CASE("a invariant on cyclic groups") {
    CHECK(a_invariant(PermGroup::cyclic(2)).value == 1);
    CHECK(a_invariant(PermGroup::cyclic(3)).value == 2);
    CHECK(a_invariant(PermGroup::cyclic(5)).value == 4);
    // C6 regular: the order-2 element is three 2-cycles, 6-3 = 3
    CHECK(a_invariant(PermGroup::cyclic(6)).value == 3);
    // C10 regular: five 2-cycles, 10-5 = 5
    CHECK(a_invariant(PermGroup::cyclic(10)).value == 5);
    CHECK_THROWS_AS(a_invariant(PermGroup::trivial(3)), std::invalid_argument);
}

TEST_CASE("homogeneous p-cycle witness") {
    auto w3 = homogeneous_p_cycle_witness(PermGroup::cyclic(3));
    CHECK(w3.p == 3);
    CHECK(w3.m == 1);
    CHECK(w3.element.is_product_of_cycles(3, 1));

    auto w6 = homogeneous_p_cycle_witness(PermGroup::cyclic(6));
    CHECK(w6.p == 2);
    CHECK(w6.m == 3);
    CHECK(w6.element.order() == 2);

    auto d4 = wreath_c2(PermGroup::cyclic(2));
    auto wd4 = homogeneous_p_cycle_witness(d4);
    CHECK(wd4.p == 2);
    CHECK(wd4.m == 1);  // a(C2 wr C2) = 1, a coordinate flip
}

TEST_CASE("nilpotency predicate") {
    CHECK(is_nilpotent(PermGroup::cyclic(6)));
    CHECK_FALSE(is_nilpotent(PermGroup::symmetric(3)));
    CHECK(is_nilpotent(wreath_c2(PermGroup::cyclic(2))));   // D4: all 2-elements
    CHECK_FALSE(is_nilpotent(PermGroup::symmetric(4)));
}

TEST_CASE("element p-part") {
    Perm g = Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}});  // order 6
    Perm g2 = element_p_part(g, 2);
    Perm g3 = element_p_part(g, 3);
    CHECK(g2.order() == 2);
    CHECK(g3.order() == 3);
    CHECK(g2 * g3 == g);
    CHECK(g3 * g2 == g);
}

TEST_CASE("sylow decomposition of C6 and C10") {
    auto dec6 = sylow_decompose(PermGroup::cyclic(6));
    REQUIRE(dec6.factors.size() == 2);
    CHECK(dec6.factors[0].p == 2);
    CHECK(dec6.factors[0].group.order() == 2);
    CHECK(dec6.factors[0].group.degree() == 2);
    CHECK(dec6.factors[1].p == 3);
    CHECK(dec6.factors[1].group.order() == 3);
    CHECK(dec6.factors[1].group.degree() == 3);

    auto dec10 = sylow_decompose(PermGroup::cyclic(10));
    REQUIRE(dec10.factors.size() == 2);
    CHECK(dec10.factors[0].p == 2);
    CHECK(dec10.factors[1].p == 5);
    CHECK(dec10.factors[1].group.order() == 5);

    auto dec2 = sylow_decompose(PermGroup::cyclic(2));
    REQUIRE(dec2.factors.size() == 1);
    CHECK(dec2.factors[0].group.order() == 2);

    CHECK_THROWS_AS(sylow_decompose(PermGroup::symmetric(3)), std::invalid_argument);
}

TEST_CASE("p-part decomposition of homogeneous elements") {
    // C6, order-2 element = three 2-cycles: |H'| = 3 divides 3, m_p = 1
    auto c6 = PermGroup::cyclic(6);
    Perm h = Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}).pow(3);
    auto d = p_part_decompose_element(c6, h);
    CHECK(d.h_prime_order == 3);
    CHECK(d.m_p == 1);
    CHECK(d.verified);

    // C3: 3-cycle, |H'| = 1
    auto d3 = p_part_decompose_element(PermGroup::cyclic(3), Perm::from_cycles(3, {{0, 1, 2}}));
    CHECK(d3.h_prime_order == 1);
    CHECK(d3.m_p == 1);

    // C10: order-2 element = five 2-cycles, |H'| = 5
    auto c10 = PermGroup::cyclic(10);
    Perm h10 = Perm::from_cycles(10, {{0,1,2,3,4,5,6,7,8,9}}).pow(5);
    auto d10 = p_part_decompose_element(c10, h10);
    CHECK(d10.h_prime_order == 5);
    CHECK(d10.m_p == 1);

    CHECK_THROWS_AS(p_part_decompose_element(c6, Perm::from_cycles(6, {{0,1,2,3,4,5}})),
                    std::invalid_argument);
}
