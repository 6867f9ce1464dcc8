#include <doctest.h>

#include <set>

#include "h3avg/enumerate.hpp"
#include "h3avg/sylow.hpp"

using namespace h3avg;

TEST_CASE("sylow subgroups of symmetric groups") {
    CHECK(sylow_subgroup_of_symmetric(2, 1).order() == 2);
    CHECK(sylow_subgroup_of_symmetric(2, 2).order() == 8);     // D4
    CHECK(sylow_subgroup_of_symmetric(2, 3).order() == 128);
    CHECK(sylow_subgroup_of_symmetric(3, 1).order() == 3);
    CHECK(sylow_subgroup_of_symmetric(3, 2).order() == 81);
    CHECK(sylow_subgroup_of_symmetric(2, 2).is_transitive());
    CHECK(sylow_subgroup_of_symmetric(3, 2).is_transitive());
}

TEST_CASE("subgroup lattice sizes of small groups") {
    CHECK(all_subgroups(PermGroup::cyclic(6)).size() == 4);     // 1, C2, C3, C6
    CHECK(all_subgroups(sylow_subgroup_of_symmetric(2, 2)).size() == 10);  // D4
    CHECK(all_subgroups(PermGroup::symmetric(3)).size() == 6);
    CHECK(all_subgroups(PermGroup::symmetric(4)).size() == 30);
}

TEST_CASE("conjugacy search in S_n") {
    // the two regular C4's generated by different 4-cycles are conjugate
    auto a = PermGroup::generate({Perm::from_cycles(4, {{0, 1, 2, 3}})});
    auto b = PermGroup::generate({Perm::from_cycles(4, {{0, 2, 1, 3}})});
    Perm sigma;
    CHECK(are_conjugate_in_sn(a, b, &sigma));
    // verify the witness
    for (const auto& g : a.elements()) {
        std::vector<int> img(4);
        for (int x = 0; x < 4; ++x) img[sigma[x]] = sigma[g[x]];
        CHECK(b.contains(Perm(img)));
    }

    // V4 regular vs C4: same order, not conjugate
    auto v4 = PermGroup::generate({Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                   Perm::from_cycles(4, {{0, 2}, {1, 3}})});
    CHECK_FALSE(are_conjugate_in_sn(a, v4));
}

TEST_CASE("transitive nilpotent enumeration, frozen degrees") {
    CHECK(enumerate_transitive_nilpotent(2).size() == 1);
    CHECK(enumerate_transitive_nilpotent(3).size() == 1);
    CHECK(enumerate_transitive_nilpotent(5).size() == 1);
    CHECK(enumerate_transitive_nilpotent(7).size() == 1);

    // degree 4: C4, V4, D4
    auto deg4 = enumerate_transitive_nilpotent(4);
    REQUIRE(deg4.size() == 3);
    std::multiset<long long> orders;
    for (const auto& g : deg4) orders.insert(g.order());
    CHECK(orders == std::multiset<long long>{4, 4, 8});

    // degree 6: only C6
    auto deg6 = enumerate_transitive_nilpotent(6);
    REQUIRE(deg6.size() == 1);
    CHECK(deg6[0].order() == 6);
    CHECK(deg6[0].is_transitive());
    CHECK(is_nilpotent(deg6[0]));
}

TEST_CASE("degree-4 list cross-checked against a full scan of S4") {
    // independent route: all subgroups of S4, keep transitive 2-groups,
    // dedupe by conjugacy
    auto s4 = PermGroup::symmetric(4);
    const auto& el = s4.elements();
    std::vector<PermGroup> found;
    for (const auto& idx : all_subgroups(s4)) {
        std::vector<Perm> members;
        for (int i : idx) members.push_back(el[i]);
        auto sub = PermGroup::generate(members);
        if (!sub.is_transitive()) continue;
        long long o = sub.order();
        while (o % 2 == 0) o /= 2;
        if (o != 1) continue;
        bool dup = false;
        for (const auto& f : found)
            if (are_conjugate_in_sn(f, sub)) { dup = true; break; }
        if (!dup) found.push_back(std::move(sub));
    }
    auto viaW = enumerate_transitive_nilpotent(4);
    REQUIRE(found.size() == viaW.size());
    for (const auto& f : found) {
        bool matched = false;
        for (const auto& g : viaW)
            if (are_conjugate_in_sn(f, g)) { matched = true; break; }
        CHECK(matched);
    }
}

TEST_CASE("enumerated groups are transitive, nilpotent and pairwise distinct") {
    for (int n : {2, 3, 4, 5, 6, 7}) {
        auto list = enumerate_transitive_nilpotent(n);
        for (const auto& g : list) {
            CHECK(g.is_transitive());
            CHECK(is_nilpotent(g));
            CHECK(g.degree() == n);
        }
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                CHECK_FALSE(are_conjugate_in_sn(list[i], list[j]));
    }
}
