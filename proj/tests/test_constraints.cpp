#include <doctest.h>

#include <random>

#include "blockcensus/constraints.hpp"
#include "blockcensus/semilinear.hpp"

using namespace blockcensus;

namespace {

StructureProfile profile_of(const GroupHandle& g) { return structure_profile(enumerate_elements(g)); }

}  // namespace

TEST_SUITE("constraints") {
    TEST_CASE("q-parts") {
        CHECK(q_part(48, 2) == 16);
        CHECK(q_part(48, 3) == 3);
        CHECK(q_part(1, 5) == 1);

        std::mt19937 rng(424242);
        std::uniform_int_distribution<u64> dist(1, 1000000000ull);
        for (int i = 0; i < 300; ++i) {
            const u64 n = dist(rng);
            for (u64 q : {2ull, 3ull, 5ull, 7ull}) {
                const u64 part = q_part(n, q);
                CHECK(n % part == 0);
                CHECK((n / part) % q != 0);
            }
        }
    }

    TEST_CASE("square and odd-power-of-two tests") {
        CHECK(is_square(16));
        CHECK_FALSE(is_square(24));
        CHECK(is_square(0));
        CHECK(is_square(1));
        for (u64 a = 1; a <= 100; ++a) CHECK_FALSE(is_square(2 * a * a));

        CHECK(is_odd_power_of_two(2));
        CHECK(is_odd_power_of_two(8));
        CHECK_FALSE(is_odd_power_of_two(4));
        CHECK_FALSE(is_odd_power_of_two(1));
        CHECK_FALSE(is_odd_power_of_two(12));
    }

    TEST_CASE("two-character constraint on an index") {
        CHECK(higgs_check(8).status == VerdictStatus::consistent);

        const Verdict v12 = higgs_check(12);
        CHECK(v12.status == VerdictStatus::contradiction);
        CHECK(v12.witness == "3-part 3 not a square");

        const Verdict v4 = higgs_check(4);
        CHECK(v4.status == VerdictStatus::contradiction);
        CHECK(v4.witness == "2-part 4 not an odd power of 2");
    }

    TEST_CASE("two-character constraint equals its closed form") {
        // consistent iff n = 2^(2a+1) * (odd square)
        for (u64 n = 1; n <= 20000; ++n) {
            u64 odd = n;
            u32 e = 0;
            while (odd % 2 == 0) {
                odd /= 2;
                ++e;
            }
            const bool closed_form = (e % 2 == 1) && is_square(odd);
            CHECK((higgs_check(n).status == VerdictStatus::consistent) == closed_form);
        }
    }

    TEST_CASE("full ramification constraint") {
        // an index of 4 with no cyclic Sylow subgroup passes
        const GroupHandle v4 = GroupHandle::from_generators(
            5, 2, {make_mat(5, 2, {4, 0, 0, 1}), make_mat(5, 2, {1, 0, 0, 4})});
        const StructureProfile klein = profile_of(v4);
        CHECK(fully_ramified_check(4, &klein).status == VerdictStatus::consistent);

        const Verdict v2 = fully_ramified_check(2);
        CHECK(v2.status == VerdictStatus::contradiction);
        CHECK(v2.witness == "2 not a square");

        // 9 is a square but a cyclic Sylow 3-subgroup still contradicts
        const GroupHandle c9 = GroupHandle::from_generators(19, 1, {make_mat(19, 1, {4})});
        const StructureProfile c9_prof = profile_of(c9);
        REQUIRE(c9_prof.order == 9);
        const Verdict v9 = fully_ramified_check(9, &c9_prof);
        CHECK(v9.status == VerdictStatus::contradiction);
        CHECK(v9.witness.find("cyclic Sylow") != std::string::npos);
    }

    TEST_CASE("p^m - 1 is never a square in the supported range") {
        CHECK(mordell_check(5, 2).status == VerdictStatus::contradiction);
        CHECK(mordell_check(5, 2).witness == "24 not a square");
        CHECK(mordell_check(7, 2).witness == "48 not a square");
        CHECK(mordell_check(5, 4).witness == "624 not a square");
        CHECK_THROWS_AS(mordell_check(5, 1), InvalidParamsError);

        for (u64 p = 5; p <= 100; ++p) {
            if (!is_prime(p)) continue;
            for (u32 m = 2; m <= 6; ++m)
                CHECK(mordell_check(p, m).status == VerdictStatus::contradiction);
        }
    }

    TEST_CASE("classification table, cell by cell") {
        auto tags = [](const ClassificationEntry& e) {
            std::vector<std::string> t;
            for (const auto& g : e.defect_groups) t.push_back(g.tag);
            return t;
        };
        CHECK(tags(classify_kb(1)) == std::vector<std::string>{"C1"});
        CHECK(tags(classify_kb(2)) == std::vector<std::string>{"C2"});
        CHECK(tags(classify_kb(3)) == std::vector<std::string>{"C3"});
        CHECK(tags(classify_kb(4)) == std::vector<std::string>{"C2xC2", "C4", "C5"});
        CHECK(tags(classify_kb(5)) == std::vector<std::string>{"C5", "C7", "D8", "Q8"});
        CHECK(tags(classify_kb(5, 1)) == std::vector<std::string>{"C5", "D8", "Q8"});
        CHECK(tags(classify_kb(5, 2)) == std::vector<std::string>{"C5", "C7", "D8", "Q8"});

        CHECK(classify_kb(4).defect_groups[0].order == 4);
        CHECK(classify_kb(5).defect_groups[1].order == 7);

        CHECK_THROWS_AS(classify_kb(6), OutOfTableError);
        CHECK_THROWS_AS(classify_kb(0), InvalidParamsError);
    }

    TEST_CASE("the five groups of order 8") {
        CHECK(classify_group8(profile_of(realize_small_group(5, 2, 8, GroupFingerprint::q8()))) == "Q8");

        const GroupHandle d8 = GroupHandle::from_generators(
            5, 2, {make_mat(5, 2, {0, 1, 4, 0}), make_mat(5, 2, {1, 0, 0, 4})});
        CHECK(classify_group8(profile_of(d8)) == "D8");

        const GroupHandle c8 = GroupHandle::from_generators(17, 1, {make_mat(17, 1, {2})});
        CHECK(classify_group8(profile_of(c8)) == "abelian-C8");

        const GroupHandle c4c2 = GroupHandle::from_generators(
            5, 2, {make_mat(5, 2, {2, 0, 0, 1}), make_mat(5, 2, {1, 0, 0, 4})});
        CHECK(classify_group8(profile_of(c4c2)) == "abelian-C4xC2");

        const GroupHandle e8 = GroupHandle::from_generators(
            5, 3,
            {make_mat(5, 3, {4, 0, 0, 0, 1, 0, 0, 0, 1}), make_mat(5, 3, {1, 0, 0, 0, 4, 0, 0, 0, 1}),
             make_mat(5, 3, {1, 0, 0, 0, 1, 0, 0, 0, 4})});
        CHECK(classify_group8(profile_of(e8)) == "abelian-C2xC2xC2");

        const GroupHandle c4 = GroupHandle::from_generators(5, 1, {make_mat(5, 1, {2})});
        CHECK_THROWS_AS(classify_group8(profile_of(c4)), InvalidOrderError);
    }

    TEST_CASE("extension whitelist") {
        // all Sylow subgroups cyclic
        CHECK(schur_multiplier_whitelist(profile_of(GroupHandle::from_generators(7, 1, {make_mat(7, 1, {3})}))));
        // quaternion Sylow 2, cyclic Sylow 3
        CHECK(schur_multiplier_whitelist(
            profile_of(realize_small_group(5, 2, 24, GroupFingerprint::sl23()))));
        // Klein four group fails
        const GroupHandle v4 = GroupHandle::from_generators(
            5, 2, {make_mat(5, 2, {4, 0, 0, 1}), make_mat(5, 2, {1, 0, 0, 4})});
        CHECK_FALSE(schur_multiplier_whitelist(profile_of(v4)));
        // dihedral Sylow 2 fails
        const GroupHandle d8 = GroupHandle::from_generators(
            5, 2, {make_mat(5, 2, {0, 1, 4, 0}), make_mat(5, 2, {1, 0, 0, 4})});
        CHECK_FALSE(schur_multiplier_whitelist(profile_of(d8)));
    }

    TEST_CASE("contradictions always carry a witness") {
        CHECK_THROWS_AS(Verdict::bad("x", ""), InvalidParamsError);
    }
}
