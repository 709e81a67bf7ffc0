#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockcensus/semilinear.hpp"

using namespace blockcensus;

namespace {

GroupHandle cyclic_mod(u32 p, u32 gen) {
    return GroupHandle::from_generators(p, 1, {make_mat(p, 1, {gen})});
}

// the fixed D8 copy in GL(2,5): a rotation of order 4 and a reflection
GroupHandle d8_gl25() {
    return GroupHandle::from_generators(5, 2, {make_mat(5, 2, {0, 1, 4, 0}), make_mat(5, 2, {1, 0, 0, 4})});
}

}  // namespace

TEST_SUITE("matgroup") {
    TEST_CASE("orbit decomposition of small cyclic actions") {
        const auto dec5 = orbit_decomposition(cyclic_mod(5, 2), ActionSide::points);
        CHECK(dec5.rank == 2);
        CHECK(dec5.sorted_sizes() == std::vector<u64>{1, 4});

        // oracle: 2 has order 3 mod 7, orbits on nonzero points are
        // {1,2,4} and {3,6,5}
        const auto dec7 = orbit_decomposition(cyclic_mod(7, 2), ActionSide::points);
        CHECK(dec7.rank == 3);
        CHECK(dec7.sorted_sizes() == std::vector<u64>{1, 3, 3});
        REQUIRE(dec7.orbits.size() == 3);
        CHECK(dec7.orbits[0].rep == make_vec(7, {0}));
        CHECK(dec7.orbits[1].rep == make_vec(7, {1}));
        CHECK(dec7.orbits[2].rep == make_vec(7, {3}));
    }

    TEST_CASE("gamma0 of F_25 is transitive on nonzero vectors") {
        const auto dec = orbit_decomposition(gamma_group(5, 2, GammaKind::gamma0), ActionSide::points);
        CHECK(dec.rank == 2);
        CHECK(dec.sorted_sizes() == std::vector<u64>{1, 24});
    }

    TEST_CASE("orbit sizes sum to the domain and the zero orbit is a singleton") {
        for (ActionSide side : {ActionSide::points, ActionSide::dual}) {
            const GroupHandle g = gamma_group(7, 2, GammaKind::full);
            const auto dec = orbit_decomposition(g, side);
            u64 total = 0;
            u32 singletons_at_zero = 0;
            for (const Orbit& o : dec.orbits) {
                total += o.size;
                if (o.size == 1 && vec_to_index(o.rep) == 0) ++singletons_at_zero;
            }
            CHECK(total == 49);
            CHECK(singletons_at_zero == 1);
        }
    }

    TEST_CASE("orbit representatives are lexicographically smallest") {
        const GroupHandle g = GroupHandle::from_generators(
            5, 2, {make_mat(5, 2, {2, 0, 0, 2}), make_mat(5, 2, {0, 1, 1, 0})});
        const auto dec = orbit_decomposition(g, ActionSide::points);
        // recompute each orbit by closure and compare minima
        const auto& images = g.images(ActionSide::points);
        for (const Orbit& o : dec.orbits) {
            std::set<u64> orbit{vec_to_index(o.rep)};
            std::vector<u64> work(orbit.begin(), orbit.end());
            while (!work.empty()) {
                const u64 x = work.back();
                work.pop_back();
                for (const auto& img : images) {
                    if (orbit.insert(img[x]).second) work.push_back(img[x]);
                }
            }
            CHECK(orbit.size() == o.size);
            Vec least = vec_from_index(*orbit.begin(), 5, 2);
            for (u64 i : orbit) {
                const Vec v = vec_from_index(i, 5, 2);
                if (v.coords < least.coords) least = v;
            }
            CHECK(o.rep == least);
        }
    }

    TEST_CASE("group orders through the stabilizer chain") {
        CHECK(group_order(gamma_group(5, 2, GammaKind::full)) == 48);
        CHECK(group_order(cyclic_mod(5, 2)) == 4);
        CHECK(group_order(gamma_group(7, 4, GammaKind::full)) == 4 * 2400);
        CHECK(group_order(gamma_group(7, 4, GammaKind::gamma0)) == 2400);
    }

    TEST_CASE("group order is independent of generator order") {
        const GroupHandle g = gamma_group(5, 2, GammaKind::full);
        std::vector<Mat> reversed(g.generators().rbegin(), g.generators().rend());
        CHECK(group_order(GroupHandle::from_generators(5, 2, reversed)) == 48);
    }

    TEST_CASE("order matches enumeration whenever the cap admits it") {
        for (const GroupHandle& g :
             {gamma_group(5, 2, GammaKind::full), gamma_group(7, 2, GammaKind::gamma0), d8_gl25()}) {
            CHECK(group_order(g) == enumerate_elements(g).size());
        }
    }

    TEST_CASE("enumeration basics and the cap") {
        const GroupHandle trivial = GroupHandle::from_generators(5, 1, {identity_mat(5, 1)});
        const auto elems = enumerate_elements(trivial);
        REQUIRE(elems.size() == 1);
        CHECK(is_identity(elems[0]));

        CHECK(enumerate_elements(cyclic_mod(7, 2)).size() == 3);

        try {
            enumerate_elements(gamma_group(5, 2, GammaKind::full), 10);
            FAIL("cap not enforced");
        } catch (const CapExceededError& e) {
            CHECK(e.order_lower_bound > 10);
            CHECK(e.order_lower_bound <= 48);
        }
    }

    TEST_CASE("class counts") {
        CHECK(class_count(enumerate_elements(cyclic_mod(5, 2))) == 4);  // abelian
        const GroupHandle sl23 = realize_small_group(5, 2, 24, GroupFingerprint::sl23());
        CHECK(class_count(enumerate_elements(sl23)) == 7);
        const GroupHandle q8 = realize_small_group(5, 2, 8, GroupFingerprint::q8());
        CHECK(class_count(enumerate_elements(q8)) == 5);
    }

    TEST_CASE("class count equals order exactly for abelian groups") {
        const auto c6 = enumerate_elements(cyclic_mod(7, 3));
        CHECK(class_count(c6) == c6.size());
        const auto d8 = enumerate_elements(d8_gl25());
        CHECK(class_count(d8) < d8.size());
        CHECK_FALSE(structure_profile(d8).abelian);
    }

    TEST_CASE("non-closed lists are rejected") {
        std::vector<Mat> broken{identity_mat(5, 1), make_mat(5, 1, {2})};  // misses 4, 3
        CHECK_THROWS_AS(class_count(broken), NotClosedError);
        CHECK_THROWS_AS(structure_profile(broken), NotClosedError);
    }

    TEST_CASE("structure profiles of the classic order-8 groups") {
        const auto q8 = structure_profile(enumerate_elements(realize_small_group(5, 2, 8, GroupFingerprint::q8())));
        CHECK(q8.unique_involution);
        CHECK(q8.derived_order == 2);
        CHECK(q8.order_multiset == std::map<u64, u64>{{1, 1}, {2, 1}, {4, 6}});

        const auto d8 = structure_profile(enumerate_elements(d8_gl25()));
        CHECK(d8.order == 8);
        CHECK_FALSE(d8.unique_involution);
        CHECK(d8.order_multiset.at(2) == 5);
        CHECK(d8.derived_order == 2);
    }

    TEST_CASE("SL(2,3) fingerprint: derived subgroup of order 8 with unique involution") {
        const GroupHandle sl23 = realize_small_group(5, 2, 24, GroupFingerprint::sl23());
        const auto prof = structure_profile(enumerate_elements(sl23));
        CHECK(prof.order == 24);
        CHECK(prof.derived_order == 8);
        CHECK(prof.unique_involution);
        CHECK(prof.order_multiset == std::map<u64, u64>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
        CHECK(prof.sylow.at(3).cyclic);
        CHECK_FALSE(prof.sylow.at(2).cyclic);
        u64 counted = 0;
        for (const auto& [ord, n] : prof.order_multiset) counted += n;
        CHECK(counted == prof.order);
    }

    TEST_CASE("realized subgroups are reproducible") {
        const GroupHandle a = realize_small_group(5, 2, 24, GroupFingerprint::sl23());
        REQUIRE(a.generators().size() == 2);
        CHECK(a.generators()[0] == make_mat(5, 2, {0, 1, 4, 0}));
        CHECK(a.generators()[1] == make_mat(5, 2, {1, 1, 2, 3}));

        const GroupHandle b = realize_small_group(5, 2, 8, GroupFingerprint::q8());
        REQUIRE(b.generators().size() == 2);
        CHECK(b.generators()[0] == make_mat(5, 2, {0, 1, 4, 0}));
        CHECK(b.generators()[1] == make_mat(5, 2, {0, 2, 2, 0}));
    }

    TEST_CASE("no subgroup of order 7 in GL(2,5)") {
        CHECK_THROWS_AS(realize_small_group(5, 2, 7, GroupFingerprint::any()), NotFoundError);
    }

    TEST_CASE("normal cyclic subgroup scan") {
        const auto q8 = enumerate_elements(realize_small_group(5, 2, 8, GroupFingerprint::q8()));
        std::vector<u64> q8_orders;
        for (const auto& sub : normal_subgroup_scan(q8)) q8_orders.push_back(sub.size());
        CHECK(q8_orders == std::vector<u64>{1, 2, 4, 4, 4});

        const auto sl23 = enumerate_elements(realize_small_group(5, 2, 24, GroupFingerprint::sl23()));
        std::vector<u64> sl_orders;
        for (const auto& sub : normal_subgroup_scan(sl23)) sl_orders.push_back(sub.size());
        CHECK(sl_orders == std::vector<u64>{1, 2});

        const auto c6 = enumerate_elements(cyclic_mod(7, 3));
        std::vector<u64> c6_orders;
        for (const auto& sub : normal_subgroup_scan(c6)) c6_orders.push_back(sub.size());
        CHECK(c6_orders == std::vector<u64>{1, 2, 3, 6});
    }

    TEST_CASE("orbit-stabilizer products") {
        for (const GroupHandle& g : {gamma_group(5, 2, GammaKind::full), d8_gl25()}) {
            const u64 order = group_order(g);
            for (ActionSide side : {ActionSide::points, ActionSide::dual}) {
                u64 total = 0;
                for (const StabilizerRecord& r : stabilizer_records(g, side)) {
                    CHECK(order % r.orbit_size == 0);
                    CHECK(r.stab_order * r.orbit_size == order);
                    total += r.orbit_size;
                }
                CHECK(total == g.domain());
            }
        }
    }

    TEST_CASE("stabilizer generators fix their representative") {
        const GroupHandle g = gamma_group(5, 2, GammaKind::full);
        const auto elems = enumerate_elements(g);
        for (ActionSide side : {ActionSide::points, ActionSide::dual}) {
            for (const StabilizerRecord& r : stabilizer_records(g, side, &elems)) {
                if (r.stab_order > 1) CHECK_FALSE(r.stab_generators.empty());
                for (const Mat& s : r.stab_generators) {
                    const Mat action = side == ActionSide::dual ? dual_matrix(s) : s;
                    CHECK(apply(r.rep, action) == r.rep);
                }
            }
        }
    }

    TEST_CASE("point and dual orbit size multisets agree") {
        for (const GroupHandle& g :
             {gamma_group(5, 2, GammaKind::full), gamma_group(7, 2, GammaKind::gamma0), d8_gl25(),
              realize_small_group(5, 2, 24, GroupFingerprint::sl23())}) {
            CHECK(orbit_decomposition(g, ActionSide::points).sorted_sizes() ==
                  orbit_decomposition(g, ActionSide::dual).sorted_sizes());
        }
    }

    TEST_CASE("normal closures with an order filter") {
        // the scalar extension of SL(2,3) has the base group as a normal
        // closure of order 24
        const GroupHandle h = GroupHandle::from_generators(
            5, 2,
            {make_mat(5, 2, {0, 1, 4, 0}), make_mat(5, 2, {1, 1, 2, 3}), make_mat(5, 2, {2, 0, 0, 2})});
        const auto elems = enumerate_elements(h);
        REQUIRE(elems.size() == 48);
        bool found = false;
        for (const auto& sub : normal_subgroup_scan(elems, {24})) {
            if (sub.size() == 24 && GroupFingerprint::sl23().matches(structure_profile(sub))) found = true;
        }
        CHECK(found);
    }

    TEST_CASE("the largest supported degree still has an exact order") {
        CHECK(group_order(gamma_group(71, 2, GammaKind::gamma0)) == 5040);
    }

    TEST_CASE("handles reject duplicates and oversized domains") {
        CHECK_THROWS_AS(
            GroupHandle::from_generators(5, 1, {make_mat(5, 1, {2}), make_mat(5, 1, {2})}),
            InvalidParamsError);
        CHECK_THROWS_AS(GroupHandle::from_generators(13, 4, {}), InvalidParamsError);  // 13^4 > 5041
    }
}
