#include <doctest.h>

#include "h3avg/perm.hpp"
#include "h3avg/perm_group.hpp"

using namespace h3avg;

TEST_CASE("perm basics") {
    Perm id(4);
    CHECK(id.is_identity());
    CHECK(id.orbit_count() == 4);

    Perm t = Perm::from_cycles(4, {{0, 1}, {2, 3}});
    CHECK(t.orbit_count() == 2);
    CHECK(t.order() == 2);
    CHECK((t * t).is_identity());

    Perm c5 = Perm::parse("(1 2 3 4 5)");
    CHECK(c5.degree() == 5);
    CHECK(c5.orbit_count() == 1);
    CHECK(c5.order() == 5);
    CHECK(c5.to_cycle_string() == "(1 2 3 4 5)");

    Perm from_imgs = Perm::parse("2,3,1");
    CHECK(from_imgs == Perm::from_cycles(3, {{0, 1, 2}}));

    CHECK(c5.pow(5).is_identity());
    CHECK(c5.pow(-1) == c5.inverse());
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("perm composition order") {
    // (p*q)(x) = p(q(x))
    Perm p = Perm::from_cycles(3, {{0, 1}});
    Perm q = Perm::from_cycles(3, {{1, 2}});
    Perm r = p * q;
    CHECK(r[1] == 2);   // q: 1->2, p: 2->2
    CHECK(r[2] == 0);   // q: 2->1, p: 1->0
}

TEST_CASE("group closure and validation") {
    auto c2 = PermGroup::generate({Perm::from_cycles(2, {{0, 1}})});
    CHECK(c2.order() == 2);

    auto c6 = PermGroup::generate({Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    CHECK(c6.order() == 6);
    CHECK(c6.is_transitive());

    // degree mismatch unless embedded explicitly
    CHECK_THROWS_AS(PermGroup::generate({Perm::from_cycles(2, {{0, 1}}),
                                         Perm::from_cycles(5, {{2, 3, 4}})}),
                    std::invalid_argument);

    auto s3 = PermGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.contains(Perm::from_cycles(3, {{0, 2}})));
}

TEST_CASE("wreath product C2 wr H") {
    auto triv = PermGroup::trivial(1);
    auto w1 = wreath_c2(triv);
    CHECK(w1.degree() == 2);
    CHECK(w1.order() == 2);

    auto d4 = wreath_c2(PermGroup::cyclic(2));
    CHECK(d4.degree() == 4);
    CHECK(d4.order() == 8);
    CHECK(d4.is_transitive());
    CHECK(d4.contains(Perm::from_cycles(4, {{0, 1}})));

    auto w3 = wreath_c2(PermGroup::cyclic(3));
    CHECK(w3.degree() == 6);
    CHECK(w3.order() == 24);  // 2^3 * 3

    // 2n > 16: generators only
    auto big = wreath_c2(PermGroup::cyclic(9));
    CHECK(big.degree() == 18);
    CHECK_FALSE(big.has_closure());
    CHECK_THROWS(big.elements());
}

TEST_CASE("wreath preserves the block system") {
    auto g = wreath_c2(PermGroup::cyclic(3));
    for (const auto& e : g.elements()) {
        for (int i = 0; i < 3; ++i) {
            int a = e[2 * i], b = e[2 * i + 1];
            CHECK(a / 2 == b / 2);  // images stay paired
        }
    }
}
