#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "expdio/families.hpp"

using namespace expdio;

namespace {

constexpr EquationId kTripleEquations[] = {EquationId::E1, EquationId::E2, EquationId::E3,
                                           EquationId::E4, EquationId::E5};

std::vector<Triple> box_scan(FamilyId id, std::uint64_t bound) {
    std::vector<Triple> out;
    for (std::uint64_t x = 1; x <= bound; ++x)
        for (std::uint64_t y = 1; y <= bound; ++y)
            for (std::uint64_t z = 1; z <= bound; ++z)
                if (family_contains(id, Triple{x, y, z})) out.push_back({x, y, z});
    return out;
}

}  // namespace

TEST_CASE("family names round-trip and unknown names are rejected") {
    for (EquationId eq : kTripleEquations) {
        for (FamilyId id : families_of(eq)) {
            CHECK(family_from_name(family_name(id)) == id);
            CHECK(family_equation(id) == eq);
        }
    }
    for (FamilyId id : families_of(EquationId::Key2)) {
        CHECK(family_from_name(family_name(id)) == id);
        CHECK(family_equation(id) == EquationId::Key2);
    }
    CHECK_FALSE(family_from_name("T9.S1").has_value());
    CHECK_FALSE(family_from_name("").has_value());
    CHECK_FALSE(family_from_name("t1.s1").has_value());  // names are case-exact
}

TEST_CASE("each equation carries its advertised family count") {
    CHECK(families_of(EquationId::E1).size() == 3);
    CHECK(families_of(EquationId::E2).size() == 5);
    CHECK(families_of(EquationId::E3).size() == 6);
    CHECK(families_of(EquationId::E4).size() == 7);
    CHECK(families_of(EquationId::E5).size() == 3);
    CHECK(families_of(EquationId::Key2).size() == 3);
}

TEST_CASE("family_members matches frozen member lists") {
    CHECK(family_members(FamilyId::T1_S3, 5) ==
          std::vector<Triple>{{2, 2, 2}, {3, 2, 2}, {4, 2, 2}, {5, 2, 2}});
    CHECK(family_members(FamilyId::T5_C, 30) == std::vector<Triple>{{4, 2, 2}, {27, 3, 3}});
    CHECK(family_members(FamilyId::T3_S5, 8) == std::vector<Triple>{{4, 2, 2}, {8, 2, 3}});
    CHECK(family_members(FamilyId::T3_S6, 24) == std::vector<Triple>{{2, 2, 2}});
    CHECK(family_members(FamilyId::T3_S6, 1).empty());
    CHECK(family_members(FamilyId::T4_S6, 4) == std::vector<Triple>{{4, 2, 2}, {4, 2, 3}, {4, 2, 4}});
    CHECK(family_members(FamilyId::T5_B, 24) == std::vector<Triple>{{2, 2, 2}});
    CHECK(family_members(FamilyId::T2_S4, 3).empty());  // needs the coordinate 4 in-box
    CHECK(family_members(FamilyId::T5_A, 3) ==
          std::vector<Triple>{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}});
    CHECK_THROWS_AS(family_members(FamilyId::T1_S1, 0), std::invalid_argument);
}

TEST_CASE("pair families enumerate the diagonal and the swapped pair") {
    CHECK(family_members_pairs(FamilyId::R2_S1, 3) ==
          std::vector<Pair>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(family_members_pairs(FamilyId::R2_S2, 4) == std::vector<Pair>{{4, 2}});
    CHECK(family_members_pairs(FamilyId::R2_S2, 3).empty());
    CHECK(family_members_pairs(FamilyId::R2_S3, 4) == std::vector<Pair>{{2, 4}});
    CHECK_THROWS_AS(family_members_pairs(FamilyId::R2_S1, 0), std::invalid_argument);
}

TEST_CASE("triple and pair family APIs reject each other's ids") {
    CHECK_THROWS_AS(family_members(FamilyId::R2_S1, 5), UnknownFamily);
    CHECK_THROWS_AS(family_members_pairs(FamilyId::T1_S1, 5), UnknownFamily);
    CHECK_THROWS_AS(family_contains(FamilyId::R2_S2, Triple{4, 2, 1}), UnknownFamily);
    CHECK_THROWS_AS(family_contains(FamilyId::T1_S1, Pair{1, 1}), UnknownFamily);
    CHECK_THROWS_AS(family_contains(FamilyId::T1_S1, Triple{0, 1, 1}), std::invalid_argument);
}

TEST_CASE("classify reports exactly the containing families") {
    auto names = [](const std::vector<FamilyId>& ids) {
        std::vector<std::string_view> out;
        for (FamilyId id : ids) out.push_back(family_name(id));
        return out;
    };
    CHECK(names(classify(EquationId::E1, {7, 2, 2})) == std::vector<std::string_view>{"T1.S3"});
    CHECK(names(classify(EquationId::E4, {2, 4, 9})) == std::vector<std::string_view>{"T4.S7"});
    CHECK(classify(EquationId::E5, {3, 3, 3}).empty());
    CHECK(names(classify(EquationId::E3, {8, 2, 3})) == std::vector<std::string_view>{"T3.S5"});
    CHECK(names(classify(EquationId::E3, {2, 2, 2})) ==
          std::vector<std::string_view>{"T3.S6"});
    CHECK(names(classify(EquationId::E3, {4, 2, 2})) ==
          std::vector<std::string_view>{"T3.S5"});
    CHECK(names(classify(EquationId::E1, {1, 3, 1})) ==
          std::vector<std::string_view>{"T1.S1"});
    CHECK(names(classify(EquationId::E2, {5, 3, 3})) == std::vector<std::string_view>{"T2.S3"});
    CHECK(names(classify(EquationId::E5, {16, 2, 4})).empty());  // solution, yet family-free
    CHECK_THROWS_AS(classify(EquationId::Key2, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("union_members matches frozen small boxes") {
    CHECK(union_members(EquationId::E1, 2) ==
          std::vector<Triple>{{1, 1, 1},
                              {1, 1, 2},
                              {1, 2, 1},
                              {1, 2, 2},
                              {2, 1, 1},
                              {2, 2, 1},
                              {2, 2, 2}});
    CHECK(union_members(EquationId::E5, 4) ==
          std::vector<Triple>{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 2, 2}, {4, 2, 2}});
    CHECK_THROWS_AS(union_members(EquationId::Key2, 4), std::invalid_argument);
}

TEST_CASE("key-equation families cover the diagonal plus the swapped pair") {
    CHECK(result2_members(5) ==
          std::vector<Pair>{{1, 1}, {2, 2}, {2, 4}, {3, 3}, {4, 2}, {4, 4}, {5, 5}});
    CHECK(result2_members(1) == std::vector<Pair>{{1, 1}});
}

TEST_CASE("every enumerated member satisfies its family's equation up to bound 24") {
    for (EquationId eq : kTripleEquations) {
        for (FamilyId id : families_of(eq)) {
            for (const Triple& t : family_members(id, 24)) {
                REQUIRE(family_contains(id, t));
                REQUIRE(satisfies(eq, t));
            }
        }
    }
    for (FamilyId id : families_of(EquationId::Key2)) {
        for (const Pair& p : family_members_pairs(id, 24)) {
            REQUIRE(family_contains(id, p));
            REQUIRE(satisfies_pair(p));
        }
    }
}

TEST_CASE("the three x^(y^z) = x^(yz) families are pairwise disjoint in the box") {
    const auto s1 = family_members(FamilyId::T1_S1, 24);
    const auto s2 = family_members(FamilyId::T1_S2, 24);
    const auto s3 = family_members(FamilyId::T1_S3, 24);
    auto intersects = [](const std::vector<Triple>& a, const std::vector<Triple>& b) {
        std::vector<Triple> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        return !common.empty();
    };
    CHECK_FALSE(intersects(s1, s2));
    CHECK_FALSE(intersects(s1, s3));
    CHECK_FALSE(intersects(s2, s3));
}

TEST_CASE("enumerators agree exactly with membership box scans") {
    for (std::uint64_t bound : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(5),
                                std::uint64_t(12), std::uint64_t(24)}) {
        for (EquationId eq : kTripleEquations) {
            for (FamilyId id : families_of(eq)) {
                REQUIRE(family_members(id, bound) == box_scan(id, bound));
            }
        }
    }
}

TEST_CASE("classify is consistent with membership on a sampled box") {
    for (std::uint64_t x = 1; x <= 10; ++x) {
        for (std::uint64_t y = 1; y <= 10; ++y) {
            for (std::uint64_t z = 1; z <= 10; ++z) {
                const Triple t{x, y, z};
                for (EquationId eq : kTripleEquations) {
                    std::vector<FamilyId> expected;
                    for (FamilyId id : families_of(eq)) {
                        if (family_contains(id, t)) expected.push_back(id);
                    }
                    REQUIRE(classify(eq, t) == expected);
                }
            }
        }
    }
}
