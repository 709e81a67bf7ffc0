#include <doctest.h>

#include <algorithm>

#include "blockcensus/semilinear.hpp"

using namespace blockcensus;

TEST_SUITE("semilinear") {
    TEST_CASE("gamma group orders and transitivity") {
        CHECK(group_order(gamma_group(5, 2, GammaKind::gamma0)) == 24);
        CHECK(group_order(gamma_group(5, 2, GammaKind::full)) == 48);
        CHECK(group_order(gamma_group(7, 1, GammaKind::full)) == 6);  // trivial Frobenius

        for (auto [p, k] : {std::pair<u32, u32>{5, 1}, {7, 1}, {5, 2}, {7, 2}, {5, 3}, {7, 3}, {5, 4}}) {
            const GroupHandle g = gamma_group(p, k, GammaKind::full);
            CHECK(group_order(g) == (u64)k * (pow_u64(p, k) - 1));
            CHECK(orbit_decomposition(g, ActionSide::points).rank == 2);
        }
    }

    TEST_CASE("gamma parameter invariants") {
        CHECK_NOTHROW(GammaParams(5, 2, 6, 2, 2, 3));
        CHECK_THROWS_AS(GammaParams(5, 2, 7, 2, 2, 3), InvalidParamsError);   // 7 does not divide 24
        CHECK_THROWS_AS(GammaParams(5, 2, 6, 3, 2, 3), InvalidParamsError);   // 3 does not divide 2
        CHECK_THROWS_AS(GammaParams(5, 2, 6, 2, 4, 3), InvalidParamsError);   // m out of range
        CHECK_THROWS_AS(GammaParams(5, 2, 6, 2, 2, 5), InvalidParamsError);   // l out of range
        CHECK_THROWS_AS(gamma_group(4, 2, GammaKind::full), InvalidParamsError);
        CHECK_THROWS_AS(gamma_group(5, 5, GammaKind::full), InvalidParamsError);
    }

    TEST_CASE("scan survivors match the census") {
        const ScanReport rep = semilinear_scan(5);
        CHECK(rep.survivor_pds() == std::vector<std::pair<u32, u32>>{{5, 1}, {7, 1}, {5, 2}});
    }

    TEST_CASE("the (7,2) cell dies at stage 2 with (m,l) = (3,4)") {
        const ScanReport rep = semilinear_scan(5);
        const auto cell = std::find_if(rep.cells.begin(), rep.cells.end(),
                                       [](const ScanCell& c) { return c.p == 7 && c.d == 2; });
        REQUIRE(cell != rep.cells.end());
        CHECK_FALSE(cell->survives());
        CHECK(cell->max_stage1_value == 48);  // some tuple met p^2 - 1 = 48
        CHECK(cell->stage2_rejections == std::vector<std::pair<u32, u32>>{{3, 4}});
    }

    TEST_CASE("the (11,1) cell dies at stage 1") {
        const ScanReport rep = semilinear_scan(5);
        const auto cell = std::find_if(rep.cells.begin(), rep.cells.end(),
                                       [](const ScanCell& c) { return c.p == 11 && c.d == 1; });
        REQUIRE(cell != rep.cells.end());
        CHECK_FALSE(cell->survives());
        CHECK(cell->stage2_rejections.empty());
        CHECK(cell->max_stage1_value == 6);  // m*s*t peaks below p - 1 = 10
    }

    TEST_CASE("the (5,2) cell survives with m + l forced to 5") {
        const ScanReport rep = semilinear_scan(5);
        const auto cell = std::find_if(rep.cells.begin(), rep.cells.end(),
                                       [](const ScanCell& c) { return c.p == 5 && c.d == 2; });
        REQUIRE(cell != rep.cells.end());
        CHECK(cell->survives());
        CHECK(cell->forces_l1_subsections);
        REQUIRE(cell->survivors.size() == 2);
        CHECK(cell->survivors[0] == GammaParams(5, 2, 6, 2, 2, 3));
        CHECK(cell->survivors[1] == GammaParams(5, 2, 4, 2, 3, 2));
    }

    TEST_CASE("the (5,1) and (7,1) cells survive without the subsection flag") {
        const ScanReport rep = semilinear_scan(5);
        for (const ScanCell& cell : rep.cells) {
            if (cell.d != 1 || !cell.survives()) continue;
            CHECK_FALSE(cell.forces_l1_subsections);
        }
    }

    TEST_CASE("every enumerated tuple respects the divisibility constraints") {
        const ScanReport rep = semilinear_scan(5);
        u64 tuples = 0;
        for (const ScanCell& cell : rep.cells) {
            for (const ScanTuple& t : cell.tuples) {
                ++tuples;
                CHECK((pow_u64(t.params.p, t.params.d) - 1) % t.params.s == 0);
                CHECK(t.params.d % t.params.t == 0);
                CHECK(t.params.s <= (u64)t.params.l * t.params.t);
            }
        }
        CHECK(tuples > 0);
    }

    TEST_CASE("scan output is deterministic") {
        const ScanReport a = semilinear_scan(5);
        const ScanReport b = semilinear_scan(5);
        REQUIRE(a.cells.size() == b.cells.size());
        for (std::size_t i = 0; i < a.cells.size(); ++i) {
            CHECK(a.cells[i].p == b.cells[i].p);
            CHECK(a.cells[i].d == b.cells[i].d);
            CHECK(a.cells[i].survivors == b.cells[i].survivors);
        }
    }

    TEST_CASE("other character-count targets run without cross-checks") {
        const ScanReport rep = semilinear_scan(6);
        CHECK(rep.k_target == 6);
        CHECK(!rep.cells.empty());
    }
}
